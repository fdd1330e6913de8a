#pragma once

/**
 * @file wordspace.hpp
 * @brief Elements of the tensor algebra over the quantum projective space
 *        algebra: linear combinations of symbolic words in {p, dp, dbp}
 *        carrying exact sparse coefficient arrays.
 *
 * A Family has an external leg signature (free indices of a displayed
 * relation; empty for honest elements) and, per word shape, a coefficient
 * array indexed by (external legs, word legs). Each symbol contributes an
 * ordered (V, V*) leg pair. Markers between symbols encode the tensor
 * product over the base algebra; adjacency encodes the algebra product.
 *
 * Composite operators are applied right-to-left. After a contraction the
 * surviving external legs renumber consecutively from 1; an insertion at
 * position j places the new legs at (j, j+1) and shifts later legs by two.
 * This renumbering is what makes index-free displays like E'_12 E_23 dp (x)
 * dbp land on the legs they name.
 */

#include "braiding.hpp"

#include <cassert>
#include <sstream>

namespace cpqr {

enum class Sym : uint8_t { P = 0, DP = 1, DBP = 2 };

inline bool is_form(Sym s) { return s != Sym::P; }
inline const char* sym_name(Sym s) {
    switch (s) {
        case Sym::P: return "p";
        case Sym::DP: return "dp";
        default: return "dbp";
    }
}

/// Word shape: ordered symbols plus tensor-break markers between them.
struct Word {
    std::vector<Sym> syms;
    uint32_t markers = 0;  // bit g: break between syms[g] and syms[g+1]

    int degree() const { return static_cast<int>(syms.size()); }
    int form_count() const {
        int c = 0;
        for (Sym s : syms) c += is_form(s);
        return c;
    }
    /// number of tensor factors (1 + marker count); 0 sensible only for B
    int segments() const {
        int c = 1;
        for (int g = 0; g + 1 < degree(); ++g) c += (markers >> g) & 1;
        return syms.empty() ? 1 : c;
    }
    bool marker_at(int gap) const { return (markers >> gap) & 1; }

    friend bool operator<(const Word& a, const Word& b) {
        if (a.syms != b.syms) return a.syms < b.syms;
        return a.markers < b.markers;
    }
    friend bool operator==(const Word& a, const Word& b) {
        return a.syms == b.syms && a.markers == b.markers;
    }
};

inline Signature word_signature(const Word& w) {
    Signature s;
    s.reserve(2 * w.syms.size());
    for (size_t i = 0; i < w.syms.size(); ++i) {
        s.push_back(Leg::V);
        s.push_back(Leg::Vd);
    }
    return s;
}

using Coeffs = std::map<uint64_t, Rat>;

struct Family {
    int n = 0;
    Signature ext;
    std::map<Word, Coeffs> terms;

    bool is_zero() const {
        for (const auto& [w, c] : terms)
            if (!c.empty()) return false;
        return true;
    }
    void prune() {
        for (auto it = terms.begin(); it != terms.end();) {
            for (auto jt = it->second.begin(); jt != it->second.end();)
                jt = (jt->second == 0) ? it->second.erase(jt) : std::next(jt);
            it = it->second.empty() ? terms.erase(it) : std::next(it);
        }
    }
    int max_degree() const {
        int d = 0;
        for (const auto& [w, c] : terms)
            if (!c.empty()) d = std::max(d, w.degree());
        return d;
    }
    friend bool operator==(const Family& a, const Family& b) {
        if (a.ext != b.ext) return false;
        Family x = a, y = b;
        x.prune();
        y.prune();
        return x.terms == y.terms;
    }
};

inline Family fam_zero(int n, Signature ext = {}) {
    Family f;
    f.n = n;
    f.ext = std::move(ext);
    return f;
}

/// The unit of the algebra: empty word, coefficient 1.
inline Family fam_one(const QContext& ctx) {
    Family f = fam_zero(ctx.n);
    f.terms[Word{}][0] = 1;
    return f;
}

/// Generator family: external legs (V, V*), identity coefficients.
inline Family atom(const QContext& ctx, Sym s) {
    Family f = fam_zero(ctx.n, {Leg::V, Leg::Vd});
    Word w;
    w.syms = {s};
    Coeffs& c = f.terms[w];
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) {
            uint64_t idx = 0;
            idx = idx_set(idx, 0, i);
            idx = idx_set(idx, 1, j);
            idx = idx_set(idx, 2, i);
            idx = idx_set(idx, 3, j);
            c[idx] = 1;
        }
    return f;
}

inline void fam_axpy(Family& dst, const Rat& s, const Family& src) {
    if (dst.ext != src.ext) throw std::logic_error("fam_axpy: external signature mismatch");
    if (s == 0) return;
    for (const auto& [w, coeffs] : src.terms) {
        Coeffs& d = dst.terms[w];
        for (const auto& [i, v] : coeffs) {
            Rat& slot = d[i];
            slot += s * v;
            if (slot == 0) d.erase(i);
        }
    }
}

inline Family fam_add(const Family& a, const Family& b) {
    Family r = a;
    fam_axpy(r, Rat(1), b);
    r.prune();
    return r;
}
inline Family fam_sub(const Family& a, const Family& b) {
    Family r = a;
    fam_axpy(r, Rat(-1), b);
    r.prune();
    return r;
}
inline Family fam_scale(const Family& a, const Rat& s) {
    Family r = a;
    for (auto& [w, coeffs] : r.terms)
        for (auto& [i, v] : coeffs) v *= s;
    r.prune();
    return r;
}

namespace detail {

/// Move `count` legs of `idx` starting at `from` to position `to`, keeping
/// relative order, with all other legs keeping their relative order too.
inline uint64_t repack(uint64_t idx, int total, const std::vector<int>& new_pos) {
    uint64_t out = 0;
    for (int l = 0; l < total; ++l) out = idx_set(out, new_pos[l], idx_get(idx, l));
    return out;
}

}  // namespace detail

/// Product of families: words concatenate (marker at the junction when
/// `tensor` is true), external signatures concatenate, coefficients tensor.
inline Family fam_mul(const Family& a, const Family& b, bool tensor = false) {
    Family r = fam_zero(a.n, sig_cat(a.ext, b.ext));
    const int ea = static_cast<int>(a.ext.size());
    const int eb = static_cast<int>(b.ext.size());
    for (const auto& [wa, ca] : a.terms) {
        const int la = wa.degree();
        for (const auto& [wb, cb] : b.terms) {
            const int lb = wb.degree();
            Word w;
            w.syms = wa.syms;
            w.syms.insert(w.syms.end(), wb.syms.begin(), wb.syms.end());
            w.markers = wa.markers;
            if (tensor && la > 0 && lb > 0) w.markers |= 1u << (la - 1);
            w.markers |= wb.markers << la;
            // leg remap: [a.ext (ea)] [a.word (2la)] + [b.ext (eb)] [b.word (2lb)]
            //        ->  [a.ext] [b.ext] [a.word] [b.word]
            std::vector<int> pa(ea + 2 * la), pb(eb + 2 * lb);
            for (int l = 0; l < ea; ++l) pa[l] = l;
            for (int l = 0; l < 2 * la; ++l) pa[ea + l] = ea + eb + l;
            for (int l = 0; l < eb; ++l) pb[l] = ea + l;
            for (int l = 0; l < 2 * lb; ++l) pb[eb + l] = ea + eb + 2 * la + l;
            Coeffs& dst = r.terms[w];
            for (const auto& [ia, va] : ca) {
                uint64_t base = detail::repack(ia, ea + 2 * la, pa);
                for (const auto& [ib, vb] : cb) {
                    uint64_t idx = base | detail::repack(ib, eb + 2 * lb, pb);
                    Rat& slot = dst[idx];
                    slot += va * vb;
                    if (slot == 0) dst.erase(idx);
                }
            }
        }
    }
    r.prune();
    return r;
}

inline Family mul(const Family& a, const Family& b) { return fam_mul(a, b, false); }
inline Family otimes(const Family& a, const Family& b) { return fam_mul(a, b, true); }

/// Apply a leg operator to external legs [pos, pos + |dom|). Handles
/// contraction (empty codomain) and insertion (empty domain); external legs
/// renumber automatically, word legs shift as needed.
inline Family apply_op(const Family& f, const LegOp& op, int pos) {
    const int arity = static_cast<int>(op.dom.size());
    const int out_arity = static_cast<int>(op.cod.size());
    const int e = static_cast<int>(f.ext.size());
    if (pos < 0 || pos + arity > e) throw std::logic_error("apply_op: position out of range");
    for (int i = 0; i < arity; ++i)
        if (f.ext[pos + i] != op.dom[i]) throw std::logic_error("apply_op: leg type mismatch");

    Signature new_ext(f.ext.begin(), f.ext.begin() + pos);
    new_ext.insert(new_ext.end(), op.cod.begin(), op.cod.end());
    new_ext.insert(new_ext.end(), f.ext.begin() + pos + arity, f.ext.end());

    Family r = fam_zero(f.n, new_ext);
    const int shift = out_arity - arity;
    for (const auto& [w, coeffs] : f.terms) {
        const int total = e + 2 * w.degree();
        Coeffs& dst = r.terms[w];
        for (const auto& [idx, v] : coeffs) {
            uint64_t block = 0;
            for (int i = 0; i < arity; ++i) block = idx_set(block, i, idx_get(idx, pos + i));
            auto it = op.cols.find(block);
            if (it == op.cols.end()) continue;
            // index with the op legs removed and later legs shifted
            uint64_t rest = 0;
            for (int l = 0; l < pos; ++l) rest = idx_set(rest, l, idx_get(idx, l));
            for (int l = pos + arity; l < total; ++l)
                rest = idx_set(rest, l + shift, idx_get(idx, l));
            for (const auto& [img, ov] : it->second) {
                uint64_t out = rest;
                for (int i = 0; i < out_arity; ++i) out = idx_set(out, pos + i, idx_get(img, i));
                Rat& slot = dst[out];
                slot += v * ov;
                if (slot == 0) dst.erase(out);
            }
        }
    }
    r.prune();
    return r;
}

/// Reorder external legs: new leg i = old leg perm[i].
inline Family ext_permute(const Family& f, const std::vector<int>& perm) {
    const int e = static_cast<int>(f.ext.size());
    if (static_cast<int>(perm.size()) != e) throw std::logic_error("ext_permute: size mismatch");
    Signature ext(e);
    for (int i = 0; i < e; ++i) ext[i] = f.ext[perm[i]];
    Family r = fam_zero(f.n, ext);
    for (const auto& [w, coeffs] : f.terms) {
        Coeffs& dst = r.terms[w];
        const int total = e + 2 * w.degree();
        for (const auto& [idx, v] : coeffs) {
            uint64_t out = idx;
            for (int i = 0; i < e; ++i) out = idx_set(out, i, idx_get(idx, perm[i]));
            for (int l = e; l < total; ++l) out = idx_set(out, l, idx_get(idx, l));
            dst[out] += v;
        }
    }
    r.prune();
    return r;
}

/// Pin external legs to concrete values: the component family (empty ext).
inline Family component(const Family& f, uint64_t ext_values) {
    const int e = static_cast<int>(f.ext.size());
    Family r = fam_zero(f.n);
    for (const auto& [w, coeffs] : f.terms) {
        const int total = e + 2 * w.degree();
        Coeffs& dst = r.terms[w];
        for (const auto& [idx, v] : coeffs) {
            bool match = true;
            for (int l = 0; l < e && match; ++l) match = idx_get(idx, l) == idx_get(ext_values, l);
            if (!match) continue;
            uint64_t out = 0;
            for (int l = e; l < total; ++l) out = idx_set(out, l - e, idx_get(idx, l));
            dst[out] += v;
        }
    }
    r.prune();
    return r;
}

/// Replace `len` consecutive symbols starting at `sym_pos` by a family whose
/// external legs (2*len of them) pair with the replaced word legs. Boundary
/// markers are preserved; the replacement's own markers splice in.
inline Family substitute(const Family& f, int sym_pos, int len, const Family& repl) {
    if (static_cast<int>(repl.ext.size()) != 2 * len)
        throw std::logic_error("substitute: replacement arity mismatch");
    const int e = static_cast<int>(f.ext.size());
    Family r = fam_zero(f.n, f.ext);

    // group replacement coefficients by their external block
    std::map<uint64_t, std::vector<std::tuple<const Word*, uint64_t, const Rat*>>> by_block;
    for (const auto& [rw, rc] : repl.terms)
        for (const auto& [ridx, rv] : rc) {
            uint64_t block = 0;
            for (int i = 0; i < 2 * len; ++i) block = idx_set(block, i, idx_get(ridx, i));
            uint64_t wordpart = 0;
            for (int i = 0; i < 2 * rw.degree(); ++i)
                wordpart = idx_set(wordpart, i, idx_get(ridx, 2 * len + i));
            by_block[block].emplace_back(&rw, wordpart, &rv);
        }

    for (const auto& [w, coeffs] : f.terms) {
        const int lw = w.degree();
        if (sym_pos < 0 || sym_pos + len > lw) throw std::logic_error("substitute: position out of range");
        for (const auto& [idx, v] : coeffs) {
            uint64_t block = 0;
            for (int i = 0; i < 2 * len; ++i)
                block = idx_set(block, i, idx_get(idx, e + 2 * sym_pos + i));
            auto it = by_block.find(block);
            if (it == by_block.end()) continue;
            for (const auto& [rw, wordpart, rv] : it->second) {
                const int lr = rw->degree();
                Word nw;
                nw.syms.assign(w.syms.begin(), w.syms.begin() + sym_pos);
                nw.syms.insert(nw.syms.end(), rw->syms.begin(), rw->syms.end());
                nw.syms.insert(nw.syms.end(), w.syms.begin() + sym_pos + len, w.syms.end());
                // markers: prefix gaps, left boundary, replacement gaps,
                // right boundary, suffix gaps
                uint32_t m = w.markers & ((sym_pos >= 1) ? ((1u << (sym_pos - 1)) - 1) : 0);
                bool left_b = sym_pos >= 1 && w.marker_at(sym_pos - 1);
                bool right_b = sym_pos + len <= lw - 1 && w.marker_at(sym_pos + len - 1);
                if (lr == 0) {
                    // scalar replacement: prefix and suffix meet at one gap
                    if (sym_pos >= 1 && sym_pos + len <= lw - 1 && (left_b || right_b))
                        m |= 1u << (sym_pos - 1);
                } else {
                    if (left_b) m |= 1u << (sym_pos - 1);
                    m |= rw->markers << sym_pos;
                    if (right_b) m |= 1u << (sym_pos + lr - 1);
                }
                for (int g = sym_pos + len; g + 1 < lw; ++g)
                    if (w.marker_at(g)) m |= 1u << (g + lr - len);
                nw.markers = m;

                // coefficient: drop replaced legs, splice replacement word legs
                uint64_t out = 0;
                for (int l = 0; l < e + 2 * sym_pos; ++l) out = idx_set(out, l, idx_get(idx, l));
                for (int i = 0; i < 2 * lr; ++i)
                    out = idx_set(out, e + 2 * sym_pos + i, idx_get(wordpart, i));
                for (int l = e + 2 * (sym_pos + len); l < e + 2 * lw; ++l)
                    out = idx_set(out, l + 2 * (lr - len), idx_get(idx, l));
                Coeffs& dst = r.terms[nw];
                Rat& slot = dst[out];
                slot += v * (*rv);
                if (slot == 0) dst.erase(out);
            }
        }
    }
    r.prune();
    return r;
}

/// Debug serialization: stable text dump of shapes and nonzero entries.
inline std::string fam_dump(const Family& f) {
    std::ostringstream os;
    os << "ext=" << f.ext.size() << "\n";
    for (const auto& [w, coeffs] : f.terms) {
        if (coeffs.empty()) continue;
        for (size_t i = 0; i < w.syms.size(); ++i) {
            os << sym_name(w.syms[i]);
            if (i + 1 < w.syms.size()) os << (w.marker_at(static_cast<int>(i)) ? " | " : " . ");
        }
        if (w.syms.empty()) os << "1";
        os << " :";
        int total = static_cast<int>(f.ext.size()) + 2 * w.degree();
        for (const auto& [idx, v] : coeffs) {
            os << " (";
            for (int l = 0; l < total; ++l) os << idx_get(idx, l) << (l + 1 < total ? "," : "");
            os << ")=" << v.get_str();
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bimodule normalization.
//
// The right-module relations, read as rewrites:
//   dp p  = q^{(a,a)}  T (p dp)      (moves p left past dp)
//   dbp p = q^{-(a,a)} T (p dbp)     (moves p left past dbp)
//   p dp  = q^{-(a,a)} T^{-1} (dp p) (moves p right past dp)
//   p dbp = q^{(a,a)}  T^{-1} (dbp p)(moves p right past dbp)
// plus marker moves x p (x) y = x (x) p y, which only edit the shape.
// ---------------------------------------------------------------------------

/// Merge tensor factors that contain no one-form into their neighbours:
/// b (x) y = b y and x (x) b = x b. Pure shape edit.
inline Word merge_plain_segments(Word w) {
    const int lw = w.degree();
    if (lw == 0) return w;
    for (bool changed = true; changed;) {
        changed = false;
        int seg_start = 0;
        for (int i = 0; i <= lw - 1 && !changed; ++i) {
            bool seg_end = (i == lw - 1) || w.marker_at(i);
            if (!seg_end) continue;
            bool has_form = false;
            for (int j = seg_start; j <= i; ++j) has_form |= is_form(w.syms[j]);
            if (!has_form) {
                if (i < lw - 1) {
                    w.markers &= ~(1u << i);  // absorb into the right neighbour
                    changed = true;
                } else if (seg_start > 0) {
                    w.markers &= ~(1u << (seg_start - 1));  // last segment: absorb left
                    changed = true;
                }
            }
            seg_start = i + 1;
        }
    }
    return w;
}

namespace detail {

/// Replacement family for swapping (form, P) -> (P, form) or back.
inline Family swap_family(const QContext& ctx, const BraidingSet& bs, Sym form, bool p_moves_left) {
    const long a = ctx.w.alpha_sq();
    Family base;
    Rat scale;
    if (p_moves_left) {
        base = mul(atom(ctx, Sym::P), atom(ctx, form));
        scale = ctx.tp(form == Sym::DP ? a : -a);
        base = apply_op(base, bs.T, 0);
    } else {
        base = mul(atom(ctx, form), atom(ctx, Sym::P));
        scale = ctx.tp(form == Sym::DP ? -a : a);
        base = apply_op(base, bs.Ti, 0);
    }
    return fam_scale(base, scale);
}

enum class NormalForm { AllLeft, Sandwich };

/// One rewriting pass; returns true if anything changed.
inline bool normalize_step(const QContext& ctx, const BraidingSet& bs, Family& f, NormalForm mode) {
    for (auto it = f.terms.begin(); it != f.terms.end(); ++it) {
        if (it->second.empty()) continue;
        const Word w = it->first;
        const int lw = w.degree();
        {   // plain-segment merging comes first
            Word mw = merge_plain_segments(w);
            if (!(mw == w)) {
                Coeffs c = std::move(it->second);
                f.terms.erase(it);
                Coeffs& dst = f.terms[mw];
                for (auto& [i, v] : c) {
                    Rat& slot = dst[i];
                    slot += v;
                    if (slot == 0) dst.erase(i);
                }
                return true;
            }
        }
        for (int j = 0; j < lw; ++j) {
            if (w.syms[j] != Sym::P) continue;
            bool form_left = false, form_right = false;
            for (int k = 0; k < j; ++k) form_left |= is_form(w.syms[k]);
            for (int k = j + 1; k < lw; ++k) form_right |= is_form(w.syms[k]);
            bool move_left = mode == NormalForm::AllLeft && form_left;
            bool move_right = mode == NormalForm::Sandwich && form_left && form_right;
            if (!move_left && !move_right) continue;

            bool hop_left = move_left && j >= 1 && w.marker_at(j - 1);
            bool swap_left = move_left && !hop_left && j >= 1 && is_form(w.syms[j - 1]);
            bool hop_right = move_right && j <= lw - 2 && w.marker_at(j);
            bool swap_right = move_right && !hop_right && j <= lw - 2 && is_form(w.syms[j + 1]);
            if (!(hop_left || swap_left || hop_right || swap_right))
                continue;  // blocked by another p; it is handled first

            // isolate this word, rewrite the p one step, merge back
            Family piece = fam_zero(f.n, f.ext);
            piece.terms[w] = std::move(it->second);
            f.terms.erase(it);

            Family replaced;
            if (hop_left || hop_right) {
                Word nw = w;
                if (hop_left) {
                    nw.markers &= ~(1u << (j - 1));
                    if (j <= lw - 2) nw.markers |= 1u << j;
                } else {
                    nw.markers &= ~(1u << j);
                    if (j >= 1) nw.markers |= 1u << (j - 1);
                }
                replaced = fam_zero(f.n, f.ext);
                replaced.terms[nw] = std::move(piece.terms[w]);
            } else if (swap_left) {
                replaced = substitute(piece, j - 1, 2, swap_family(ctx, bs, w.syms[j - 1], true));
            } else {
                replaced = substitute(piece, j, 2, swap_family(ctx, bs, w.syms[j + 1], false));
            }
            fam_axpy(f, Rat(1), replaced);
            f.prune();
            return true;
        }
    }
    return false;
}

inline Family normalize(const QContext& ctx, const BraidingSet& bs, Family f, NormalForm mode) {
    while (normalize_step(ctx, bs, f, mode)) {
    }
    f.prune();
    return f;
}

}  // namespace detail

/// Rewrite every word to (p-run) G_1 (x) G_2 (x) ... (x) G_k (p-run): interior
/// p symbols are pushed rightward out of the one-form core. Output equals
/// input modulo the relation ideal.
inline Family normalize_bimodule_form(const QContext& ctx, const BraidingSet& bs, Family f) {
    return detail::normalize(ctx, bs, std::move(f), detail::NormalForm::Sandwich);
}

/// Rewrite every word so all p symbols sit at the very front. Used as the
/// canonical form inside the membership engine.
inline Family normalize_left(const QContext& ctx, const BraidingSet& bs, Family f) {
    return detail::normalize(ctx, bs, std::move(f), detail::NormalForm::AllLeft);
}

}  // namespace cpqr

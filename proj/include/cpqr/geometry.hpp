#pragma once

/**
 * @file geometry.hpp
 * @brief Quantum metric, inverse metric, Levi-Civita connection, generalized
 *        braiding, splitting map, and the Riemann / Ricci machinery.
 *
 * One-forms and higher tensors are handled as representatives: an element of
 * the k-th tensor power is a family whose words have k one-form symbols in
 * tensor-separated segments. Two-forms are never given normal forms; wedge
 * equalities are memberships modulo the wedge span at designated positions.
 */

#include "span.hpp"

namespace cpqr {

class Geometry {
public:
    QContext ctx;
    BraidingSet bs;

    Family g_pm, g_mp, g;    ///< quantum metric components (no external legs)
    Family inv_pm, inv_mp;   ///< inverse metric on (dp,dbp) and (dbp,dp) pairs
    Family sig_pp, sig_mm, sig_pm, sig_mp;  ///< generalized braiding images
    Family nab_p, nab_m;     ///< connection on generators (two external legs)
    Family d_p, d_m;         ///< differential on generators (two-form reps)

    explicit Geometry(const QContext& c) : ctx(c), bs(build_braiding_set(c)) {
        const long om = ctx.w.omega_sq();
        const long al = ctx.w.alpha_sq();
        const long o2r = ctx.w.omega_2rho();
        const long cas = ctx.w.casimir();
        Family p = atom(ctx, Sym::P), dp = atom(ctx, Sym::DP), dbp = atom(ctx, Sym::DBP);

        // metric: g_{+-} = E'_12 E_23 dp (x) dbp, and the mirror
        g_pm = apply_op(apply_op(otimes(dp, dbp), bs.dual.E, 1), bs.dual.Ep, 0);
        g_mp = apply_op(apply_op(otimes(dbp, dp), bs.dual.E, 1), bs.dual.Ep, 0);
        g = fam_add(g_pm, g_mp);

        // inverse metric: (dp,dbp) = q^{(a,a)-(w,w+2r)} S_123 C_3 p - q^{(a,a)-(w,2r)} pp
        //                 (dbp,dp) = C'_2 p - q^{-(w,2r)} pp
        Family pp = mul(p, p);
        inv_pm = fam_sub(fam_scale(apply_op(apply_op(p, bs.dual.C, 2), bs.S, 0), ctx.tp(al - cas)),
                         fam_scale(pp, ctx.tp(al - o2r)));
        inv_mp = fam_sub(apply_op(p, bs.dual.Cp, 1), fam_scale(pp, ctx.tp(-o2r)));

        // generalized braiding
        sig_pp = fam_scale(apply_op(otimes(dp, dp), bs.T, 0), ctx.tp(al));
        sig_mm = fam_scale(apply_op(otimes(dbp, dbp), bs.T, 0), ctx.tp(-al));
        sig_pm = fam_add(
            fam_scale(apply_op(apply_op(otimes(dbp, dp), bs.Sti, 1), bs.S, 0), ctx.tp(2 * al - 2 * om)),
            fam_scale(mul(mul(p, g_mp), p), (1 - ctx.tp(al)) * ctx.tp(al - o2r)));
        sig_mp = fam_add(
            fam_scale(apply_op(apply_op(otimes(dp, dbp), bs.St, 1), bs.Si, 0), ctx.tp(2 * om - 2 * al)),
            fam_scale(mul(mul(p, g_pm), p), (1 - ctx.tp(-al)) * ctx.tp(-o2r)));

        // connection on generators
        nab_p = fam_sub(fam_scale(apply_op(apply_op(otimes(dbp, dp), bs.T, 0), bs.dual.E, 1), ctx.tp(al)),
                        fam_scale(mul(p, g_mp), ctx.tp(al - o2r)));
        nab_m = fam_sub(apply_op(otimes(dp, dbp), bs.dual.E, 1),
                        fam_scale(mul(p, g_pm), ctx.tp(-o2r)));

        // d on generators through the mixed two-form representative
        Family mixed = fam_add(apply_op(otimes(dp, dbp), bs.dual.E, 1),
                               apply_op(otimes(dbp, dp), bs.dual.E, 1));
        d_p = fam_scale(mixed, Rat(-1));
        d_m = mixed;
    }

    const Family& sigma_image(Sym a, Sym b) const {
        if (a == Sym::DP) return b == Sym::DP ? sig_pp : sig_pm;
        return b == Sym::DP ? sig_mp : sig_mm;
    }

    /// Splitting map images for a given mixed parameter c_{+-}.
    Family splitter_image(Sym a, Sym b, const Rat& c_pm) const {
        const Rat one(1);
        Family idf = otimes(atom(ctx, a), atom(ctx, b));
        Rat c, cp;
        if (a == Sym::DP && b == Sym::DP) {
            c = one / (one + ctx.tp(-ctx.w.alpha_sq()));
            cp = ctx.tp(-ctx.w.alpha_sq()) * c;
        } else if (a == Sym::DBP && b == Sym::DBP) {
            c = one / (one + ctx.tp(ctx.w.alpha_sq()));
            cp = ctx.tp(ctx.w.alpha_sq()) * c;
        } else if (a == Sym::DP) {
            c = c_pm;
            cp = one - c_pm;
        } else {
            c = one - c_pm;
            cp = c_pm;
        }
        return fam_sub(fam_scale(idf, c), fam_scale(sigma_image(a, b), cp));
    }

    /// The parameter value for which the Ricci tensor is symmetric.
    Rat einstein_c_pm() const {
        return Rat(1) / (Rat(1) + ctx.tp(ctx.w.alpha_sq() + 2 * ctx.w.omega_2rho()));
    }
    /// Einstein constant of the definitional Ricci contraction: the engine
    /// certifies Ricci = k g with this k at the symmetric splitting.
    Rat einstein_k() const {
        return -ctx.tp(ctx.w.alpha_sq()) * qdim_weight_sum(ctx) /
               (Rat(1) + ctx.tp(ctx.w.alpha_sq() + 2 * ctx.w.omega_2rho()));
    }
    /// Closed form of the scalar curvature of the definitional Ricci.
    Rat scal_closed_form() const {
        return -ctx.tp(ctx.n * (1 - ctx.r)) * qnum(ctx, ctx.r) * qnum(ctx, ctx.r + 1);
    }
    /// A common alternative normalization of the Ricci contraction carries an
    /// extra overall factor 2; kept for side-by-side reporting.
    Rat einstein_k_alt() const { return 2 * einstein_k(); }
    Rat scal_alt() const { return 2 * scal_closed_form(); }
    /// Closed form of the quantum metric dimension.
    Rat metric_dimension_closed_form() const {
        return (ctx.qp(ctx.r + 1) + ctx.qp(-(ctx.r + 1))) * qnum(ctx, ctx.r);
    }
};

// --------------------------------------------------------------------------
// Pair maps on representatives: sigma, the splitting map and the inverse
// metric act on the central generator pair; interior p decorations are
// first pushed out by the bimodule normalization.
// --------------------------------------------------------------------------

namespace detail {

/// Index of the j-th one-form symbol, or -1.
inline int form_position(const Word& w, int j) {
    int seen = 0;
    for (int i = 0; i < w.degree(); ++i)
        if (is_form(w.syms[i]) && seen++ == j) return i;
    return -1;
}

/// Apply a generator-pair map at the (j, j+1) one-form pair of every word.
/// `images(a, b)` supplies the replacement family for a pair of types (a,b);
/// an empty family means the image is zero.
template <class Images>
inline Family apply_pair_map(const QContext& ctx, const BraidingSet& bs, const Family& f, int j,
                             Images&& images) {
    Family nf = normalize_bimodule_form(ctx, bs, f);
    Family out = fam_zero(nf.n, nf.ext);
    for (const auto& [w, coeffs] : nf.terms) {
        if (coeffs.empty()) continue;
        int s = form_position(w, j);
        if (s < 0 || form_position(w, j + 1) != s + 1)
            throw std::logic_error("apply_pair_map: pair not adjacent after normalization");
        Family piece = fam_zero(nf.n, nf.ext);
        piece.terms[w] = coeffs;
        const Family& img = images(w.syms[s], w.syms[s + 1]);
        if (img.terms.empty()) continue;
        fam_axpy(out, Rat(1), substitute(piece, s, 2, img));
    }
    out.prune();
    return out;
}

}  // namespace detail

/// Generalized braiding on a tensor-square representative (pair j, j+1).
inline Family sigma_apply(const Geometry& geo, const Family& f, int pair = 0) {
    return detail::apply_pair_map(geo.ctx, geo.bs, f, pair,
                                  [&](Sym a, Sym b) -> const Family& { return geo.sigma_image(a, b); });
}

/// Splitting map on a two-form representative.
inline Family splitter_apply(const Geometry& geo, const Family& f, const Rat& c_pm, int pair = 0) {
    // images depend on the pair types; build on the fly
    Family nf = normalize_bimodule_form(geo.ctx, geo.bs, f);
    Family out = fam_zero(nf.n, nf.ext);
    for (const auto& [w, coeffs] : nf.terms) {
        if (coeffs.empty()) continue;
        int s = detail::form_position(w, pair);
        if (s < 0 || detail::form_position(w, pair + 1) != s + 1)
            throw std::logic_error("splitter_apply: pair not adjacent after normalization");
        Family piece = fam_zero(nf.n, nf.ext);
        piece.terms[w] = coeffs;
        fam_axpy(out, Rat(1), substitute(piece, s, 2, geo.splitter_image(w.syms[s], w.syms[s + 1], c_pm)));
    }
    out.prune();
    return out;
}

/// Inverse metric on a tensor-square representative: a base-algebra element.
inline Family inv_metric_apply(const Geometry& geo, const Family& f, int pair = 0) {
    Family applied = detail::apply_pair_map(
        geo.ctx, geo.bs, f, pair, [&](Sym a, Sym b) -> const Family& {
            static const Family empty;
            if (a == b) return empty;  // (dp,dp) = (dbp,dbp) = 0
            return a == Sym::DP ? geo.inv_pm : geo.inv_mp;
        });
    return normalize_bimodule_form(geo.ctx, geo.bs, applied);
}

// --------------------------------------------------------------------------
// Connection and differential on pinned one-form words.
// --------------------------------------------------------------------------

namespace detail {

inline Family gen_comp(const QContext& ctx, Sym s, int v1, int v2) {
    Family f = fam_zero(ctx.n);
    Word w;
    w.syms = {s};
    uint64_t i = idx_set(idx_set(0, 0, v1), 1, v2);
    f.terms[w][i] = 1;
    return f;
}

inline Family dgen_comp(const QContext& ctx, int v1, int v2) {
    return fam_add(gen_comp(ctx, Sym::DP, v1, v2), gen_comp(ctx, Sym::DBP, v1, v2));
}

/// Pinned family for a word with its (empty-ext) coefficient.
inline Family pin(int n, const Word& w, uint64_t idx) {
    Family f = fam_zero(n);
    f.terms[w][idx] = 1;
    return f;
}

inline void drop_last(Word& w, uint64_t& idx) {
    w.syms.pop_back();
    if (w.degree() >= 1) w.markers &= (1u << (w.degree() - 1)) - 1;
    idx &= (uint64_t(1) << (PACK_BITS * 2 * w.degree())) - 1;
}

inline void drop_first(Word& w, uint64_t& idx) {
    w.syms.erase(w.syms.begin());
    w.markers >>= 1;
    uint64_t ni = 0;
    for (int l = 2; l < 2 * (w.degree() + 1); ++l) ni = idx_set(ni, l - 2, idx_get(idx, l));
    idx = ni;
}

}  // namespace detail

/// Connection on a pinned single-segment one-form word. `head_first` picks
/// the order in which p decorations are peeled (the two extensions agree
/// modulo the ideal; checked as a certificate).
inline Family nabla_word(const Geometry& geo, const Word& w, uint64_t idx, bool head_first = false);

/// Connection on a one-form family without external legs.
inline Family nabla(const Geometry& geo, const Family& f, bool head_first = false) {
    if (!f.ext.empty()) throw std::logic_error("nabla: external legs must be sliced first");
    Family out = fam_zero(geo.ctx.n);
    for (const auto& [w, coeffs] : f.terms)
        for (const auto& [idx, v] : coeffs) fam_axpy(out, v, nabla_word(geo, w, idx, head_first));
    out.prune();
    return out;
}

inline Family nabla_word(const Geometry& geo, const Word& w, uint64_t idx, bool head_first) {
    const QContext& ctx = geo.ctx;
    const int deg = w.degree();
    if (deg == 0 || w.form_count() != 1 || w.segments() != 1)
        throw std::logic_error("nabla_word: expected a single-segment one-form word");
    if (deg == 1) {
        uint64_t e = idx_set(idx_set(0, 0, idx_get(idx, 0)), 1, idx_get(idx, 1));
        return component(w.syms[0] == Sym::DP ? geo.nab_p : geo.nab_m, e);
    }
    bool peel_tail = w.syms[deg - 1] == Sym::P && !(head_first && w.syms[0] == Sym::P);
    if (peel_tail) {
        // nabla(x b) = sigma(x (x) db) + nabla(x) b
        int v1 = static_cast<int>(idx_get(idx, 2 * deg - 2));
        int v2 = static_cast<int>(idx_get(idx, 2 * deg - 1));
        Word wx = w;
        uint64_t ix = idx;
        detail::drop_last(wx, ix);
        Family x = detail::pin(ctx.n, wx, ix);
        Family sig_part = sigma_apply(geo, otimes(x, detail::dgen_comp(ctx, v1, v2)));
        Family rec = mul(nabla(geo, x, head_first), detail::gen_comp(ctx, Sym::P, v1, v2));
        return fam_add(sig_part, rec);
    }
    // leading p: nabla(b x) = db (x) x + b nabla(x)
    int v1 = static_cast<int>(idx_get(idx, 0));
    int v2 = static_cast<int>(idx_get(idx, 1));
    Word wx = w;
    uint64_t ix = idx;
    detail::drop_first(wx, ix);
    Family x = detail::pin(ctx.n, wx, ix);
    Family left = otimes(detail::dgen_comp(ctx, v1, v2), x);
    Family rec = mul(detail::gen_comp(ctx, Sym::P, v1, v2), nabla(geo, x, head_first));
    return fam_add(left, rec);
}

/// Differential of a pinned single-segment one-form word, as a two-form
/// representative.
inline Family d_word(const Geometry& geo, const Word& w, uint64_t idx);

inline Family d_oneform(const Geometry& geo, const Family& f) {
    if (!f.ext.empty()) throw std::logic_error("d_oneform: external legs must be sliced first");
    Family out = fam_zero(geo.ctx.n);
    for (const auto& [w, coeffs] : f.terms)
        for (const auto& [idx, v] : coeffs) fam_axpy(out, v, d_word(geo, w, idx));
    out.prune();
    return out;
}

inline Family d_word(const Geometry& geo, const Word& w, uint64_t idx) {
    const QContext& ctx = geo.ctx;
    const int deg = w.degree();
    if (deg == 0 || w.form_count() != 1 || w.segments() != 1)
        throw std::logic_error("d_word: expected a single-segment one-form word");
    if (deg == 1) {
        uint64_t e = idx_set(idx_set(0, 0, idx_get(idx, 0)), 1, idx_get(idx, 1));
        return component(w.syms[0] == Sym::DP ? geo.d_p : geo.d_m, e);
    }
    if (w.syms[deg - 1] == Sym::P) {
        // d(x b) = d(x) b - x ^ db
        int v1 = static_cast<int>(idx_get(idx, 2 * deg - 2));
        int v2 = static_cast<int>(idx_get(idx, 2 * deg - 1));
        Word wx = w;
        uint64_t ix = idx;
        detail::drop_last(wx, ix);
        Family x = detail::pin(ctx.n, wx, ix);
        Family lhs = mul(d_word(geo, wx, ix), detail::gen_comp(ctx, Sym::P, v1, v2));
        Family rhs = otimes(x, detail::dgen_comp(ctx, v1, v2));
        return fam_sub(lhs, rhs);
    }
    // d(b x) = db ^ x + b d(x)
    int v1 = static_cast<int>(idx_get(idx, 0));
    int v2 = static_cast<int>(idx_get(idx, 1));
    Word wx = w;
    uint64_t ix = idx;
    detail::drop_first(wx, ix);
    Family x = detail::pin(ctx.n, wx, ix);
    Family left = otimes(detail::dgen_comp(ctx, v1, v2), x);
    Family rec = mul(detail::gen_comp(ctx, Sym::P, v1, v2), d_word(geo, wx, ix));
    return fam_add(left, rec);
}

// --------------------------------------------------------------------------
// Riemann tensor.
// --------------------------------------------------------------------------

namespace detail {

/// Split a pinned two-segment word at its first marker.
inline std::pair<Family, Family> split_first_marker(int n, const Word& w, uint64_t idx) {
    int cut = -1;
    for (int g = 0; g + 1 < w.degree(); ++g)
        if (w.marker_at(g)) {
            cut = g + 1;
            break;
        }
    if (cut < 0) throw std::logic_error("split_first_marker: no marker");
    Word w1, w2;
    w1.syms.assign(w.syms.begin(), w.syms.begin() + cut);
    w2.syms.assign(w.syms.begin() + cut, w.syms.end());
    for (int g = 0; g + 1 < cut; ++g)
        if (w.marker_at(g)) w1.markers |= 1u << g;
    for (int g = cut; g + 1 < w.degree(); ++g)
        if (w.marker_at(g)) w2.markers |= 1u << (g - cut);
    uint64_t i1 = 0, i2 = 0;
    for (int l = 0; l < 2 * cut; ++l) i1 = idx_set(i1, l, idx_get(idx, l));
    for (int l = 2 * cut; l < 2 * w.degree(); ++l) i2 = idx_set(i2, l - 2 * cut, idx_get(idx, l));
    return {pin(n, w1, i1), pin(n, w2, i2)};
}

}  // namespace detail

/// Curvature of the connection on a pinned one-form word, computed from the
/// definition: (d (x) id - (wedge (x) id)(id (x) nabla)) nabla. The result is
/// a three-segment representative whose first two segments form the two-form.
inline Family riemann_def(const Geometry& geo, const Word& w, uint64_t idx) {
    Family step = nabla_word(geo, w, idx);
    Family out = fam_zero(geo.ctx.n);
    for (const auto& [sw, coeffs] : step.terms) {
        if (sw.segments() != 2) throw std::logic_error("riemann_def: connection output malformed");
        for (const auto& [ix, v] : coeffs) {
            auto [s1, s2] = detail::split_first_marker(geo.ctx.n, sw, ix);
            const Word& w1 = s1.terms.begin()->first;
            uint64_t i1 = s1.terms.begin()->second.begin()->first;
            const Word& w2 = s2.terms.begin()->first;
            uint64_t i2 = s2.terms.begin()->second.begin()->first;
            // (d (x) id)
            fam_axpy(out, v, otimes(d_word(geo, w1, i1), s2));
            // -(wedge (x) id)(id (x) nabla)
            fam_axpy(out, -v, otimes(s1, nabla_word(geo, w2, i2)));
        }
    }
    out.prune();
    return out;
}

/// Riemann tensor on a generator component, from the definition.
inline Family riemann_def_gen(const Geometry& geo, Sym gsym, int i, int j) {
    Word w;
    w.syms = {gsym};
    return riemann_def(geo, w, idx_set(idx_set(0, 0, i), 1, j));
}

/// Closed form for the curvature on dbp (two external legs).
inline Family riemann_closed_m(const Geometry& geo) {
    const QContext& ctx = geo.ctx;
    Family dp = atom(ctx, Sym::DP), dbp = atom(ctx, Sym::DBP);
    Family t1 = otimes(otimes(dbp, dp), dbp);
    t1 = apply_op(t1, geo.bs.dual.E, 1);
    t1 = apply_op(t1, geo.bs.dual.E, 1);
    Family t2 = otimes(dbp, geo.g_pm);
    return fam_sub(fam_scale(t1, Rat(-1)), fam_scale(t2, ctx.tp(-ctx.w.omega_2rho())));
}

/// First closed form for the curvature on dp (two external legs).
inline Family riemann_closed_p1(const Geometry& geo) {
    const QContext& ctx = geo.ctx;
    const long al = ctx.w.alpha_sq();
    Family dp = atom(ctx, Sym::DP), dbp = atom(ctx, Sym::DBP);
    auto ete = [&](Family f) {
        f = apply_op(f, geo.bs.dual.E, 1);
        f = apply_op(f, geo.bs.T, 0);
        f = apply_op(f, geo.bs.dual.E, 1);
        return f;
    };
    Family t1 = ete(otimes(otimes(dp, dbp), dp));
    Family t2 = ete(otimes(otimes(dbp, dp), dp));
    Family t3 = otimes(dp, geo.g_mp);
    return fam_sub(fam_scale(fam_add(t1, t2), ctx.tp(al)),
                   fam_scale(t3, ctx.tp(al - ctx.w.omega_2rho())));
}

/// Second closed form for the curvature on dp (two external legs).
inline Family riemann_closed_p2(const Geometry& geo) {
    const QContext& ctx = geo.ctx;
    const long al = ctx.w.alpha_sq();
    Family dp = atom(ctx, Sym::DP), dbp = atom(ctx, Sym::DBP);
    Family base = otimes(otimes(dp, dbp), dp);
    Family t1 = apply_op(apply_op(apply_op(base, geo.bs.dual.E, 1), geo.bs.T, 0), geo.bs.dual.E, 1);
    Family t2 = apply_op(
        apply_op(apply_op(apply_op(base, geo.bs.Ti, 0), geo.bs.dual.E, 1), geo.bs.T, 0),
        geo.bs.dual.E, 1);
    Family t3 = otimes(geo.g_pm, dp);
    Family t4 = otimes(dp, geo.g_mp);
    Family out = fam_scale(t1, ctx.tp(al));
    out = fam_sub(out, t2);
    out = fam_sub(out, fam_scale(t3, (1 - ctx.tp(-al)) * ctx.tp(-ctx.w.omega_2rho())));
    out = fam_sub(out, fam_scale(t4, ctx.tp(al - ctx.w.omega_2rho())));
    return out;
}

// --------------------------------------------------------------------------
// Ricci tensor and scalar curvature.
// --------------------------------------------------------------------------

/// The part of the Ricci contraction fed by one metric component. Uses the
/// closed-form curvature representatives (their agreement with the
/// definition is a separate certificate).
inline Family ricci_input_part(const Geometry& geo, const Rat& c_pm, bool from_pm) {
    const QContext& ctx = geo.ctx;
    Family rfam = from_pm ? riemann_closed_m(geo) : riemann_closed_p1(geo);
    const Family& gfam = from_pm ? geo.g_pm : geo.g_mp;
    Family acc = fam_zero(ctx.n);
    // (id (x) R)(g-part): substitute the curvature for the second factor
    for (const auto& [w, coeffs] : gfam.terms)
        for (const auto& [idx, v] : coeffs) {
            // words are G1 (x) G2 with legs (0..3)
            uint64_t e2 = idx_set(idx_set(0, 0, idx_get(idx, 2)), 1, idx_get(idx, 3));
            Family first = detail::gen_comp(ctx, w.syms[0], static_cast<int>(idx_get(idx, 0)),
                                            static_cast<int>(idx_get(idx, 1)));
            fam_axpy(acc, v, otimes(first, component(rfam, e2)));
        }
    acc.prune();
    // (id (x) s (x) id): split the two-form living at pair (1,2)
    Family split = splitter_apply(geo, acc, c_pm, 1);
    // ((.,.) (x) id (x) id)
    return inv_metric_apply(geo, split, 0);
}

/// Ricci tensor for a splitting parameter, as an element of the tensor square.
inline Family ricci(const Geometry& geo, const Rat& c_pm) {
    return fam_add(ricci_input_part(geo, c_pm, true), ricci_input_part(geo, c_pm, false));
}

inline Family scal(const Geometry& geo, const Rat& c_pm) {
    return inv_metric_apply(geo, ricci(geo, c_pm), 0);
}

}  // namespace cpqr

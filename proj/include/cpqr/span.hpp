#pragma once

/**
 * @file span.hpp
 * @brief Bounded-degree consequence span of the relation ideal, with
 *        demand-driven exact membership testing.
 *
 * Zero-testing an element against the two-sided ideal generated by the
 * relations works on canonical words (all p symbols moved to the front).
 * Relation instances in context are materialized lazily: whenever a
 * coordinate shows up in the residual or in an installed row, every
 * generator class that can touch that coordinate contributes rows. Rows and
 * the residual are reduced by ordinary sparse Gaussian elimination with
 * exact rational arithmetic, pivoting on the highest-degree coordinate, so
 * degree-lowering relations rewrite downward.
 *
 * Columns are packed 64-bit keys (degree, interned word id, leg index), so
 * the hot paths never touch word shapes.
 *
 * A ZERO verdict is sound: the element lies in the span of finitely many
 * relation instances, all of which vanish in the quotient. INCONCLUSIVE
 * only means the element did not reduce within the degree bound.
 */

#include "relations.hpp"

#include <chrono>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace cpqr {

enum class Verdict { Zero, Inconclusive };

struct SpanStats {
    size_t pivot_rows = 0;
    size_t rows_spawned = 0;
    size_t cols_touched = 0;
    int degree_used = 0;
    int components = 0;
};

struct MembershipResult {
    Verdict verdict = Verdict::Inconclusive;
    SpanStats stats;
    double elapsed_ms = 0.0;
};

struct SpanOptions {
    int max_degree = 0;        ///< 0: candidate degree + 2, with one retry at +4
    bool auto_retry = true;
    bool insert_generators = false;  ///< speculative contracted-form insertions
    size_t max_rows = 4000000;
    size_t max_cols = 8000000;
};

struct BudgetExceeded : std::runtime_error {
    SpanStats stats;
    explicit BudgetExceeded(SpanStats s)
        : std::runtime_error("span resource budget exceeded (rows " +
                             std::to_string(s.rows_spawned) + ", cols " +
                             std::to_string(s.cols_touched) + ")"),
          stats(s) {}
};

/// Designated two-form positions: pairs (j, j+1) of one-form indices where
/// wedge relations may be applied.
using WedgePairs = std::set<int>;

class SpanEngine {
public:
    SpanEngine(const QContext& ctx, const BraidingSet& bs, const RelationSet& rels,
               WedgePairs wedge_pairs = {}, SpanOptions opts = {})
        : ctx_(ctx), bs_(bs), rels_(rels), wedge_pairs_(std::move(wedge_pairs)), opts_(opts) {
        ev2_ = rels.EV2;
        ev3_ = rels.EV3;
        ev4_left_ = normalize_left(ctx_, bs_, rels.EV4);
        epdp_ = rels.C2;
        epdbp_ = rels.C4;
        // relation components are rows of (Op - lambda); keep transposes
        s_t_ = op_transpose(bs.S);
        st_t_ = op_transpose(bs.St);
    }

    const QContext& context() const { return ctx_; }

    /// Test a family (componentwise over its external legs) for membership.
    MembershipResult is_zero(const Family& f) {
        auto start = std::chrono::steady_clock::now();
        MembershipResult res;
        Family nf = normalize_left(ctx_, bs_, f);
        int cand_deg = nf.max_degree();
        int d0 = opts_.max_degree > 0 ? opts_.max_degree : cand_deg;
        if (degree_cap_ < d0) degree_cap_ = d0;

        bool all_zero = true;
        size_t ext_legs = nf.ext.size();
        for_each_index(ctx_.n, ext_legs, [&](uint64_t e) {
            if (!all_zero) return;
            Family comp = ext_legs == 0 ? nf : component(nf, e);
            res.stats.components++;
            if (!reduce_component(comp)) all_zero = false;
        });

        res.verdict = all_zero ? Verdict::Zero : Verdict::Inconclusive;
        res.stats.pivot_rows = pivots_.size();
        res.stats.rows_spawned = rows_spawned_;
        res.stats.cols_touched = seen_.size();
        res.stats.degree_used = degree_cap_;
        res.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return res;
    }

    size_t pivot_count() const { return pivots_.size(); }

    /// Diagnostic: the last irreducible residual, as a family (empty if ZERO).
    Family residual_family() const {
        Family f = fam_zero(ctx_.n);
        for (const auto& [k, v] : last_residual_) f.terms[words_[word_of(k)]][idx_of(k)] = v;
        return f;
    }

private:
    // --- column keys -------------------------------------------------------
    //
    // [ degree : 5 | word id : 17 | leg index : 42 ]; ordering by raw value
    // is degree-major, which the pivot order relies on.

    static constexpr int IDX_BITS = 42;
    static constexpr int WID_BITS = 17;

    uint32_t intern(const Word& w) {
        auto it = word_ids_.find(w);
        if (it != word_ids_.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(words_.size());
        if (id >= (1u << WID_BITS)) throw BudgetExceeded(current_stats());
        words_.push_back(w);
        word_ids_.emplace(w, id);
        return id;
    }
    uint64_t key(const Word& w, uint64_t idx) {
        return (static_cast<uint64_t>(w.degree()) << (IDX_BITS + WID_BITS)) |
               (static_cast<uint64_t>(intern(w)) << IDX_BITS) | idx;
    }
    static uint32_t word_of(uint64_t k) { return (k >> IDX_BITS) & ((1u << WID_BITS) - 1); }
    static uint64_t idx_of(uint64_t k) { return k & ((uint64_t(1) << IDX_BITS) - 1); }

    // rows: sorted descending by key (leading term first)
    using RowVec = std::vector<std::pair<uint64_t, Rat>>;
    using Acc = std::map<uint64_t, Rat, std::greater<uint64_t>>;

    static RowVec to_vec(Acc&& m) {
        RowVec v;
        v.reserve(m.size());
        for (auto& [k, c] : m)
            if (c != 0) v.emplace_back(k, std::move(c));
        return v;
    }

    Acc to_acc(const Family& f) {
        Acc r;
        for (const auto& [w, coeffs] : f.terms)
            for (const auto& [idx, v] : coeffs)
                if (v != 0) {
                    uint64_t kk = key(w, idx);
                    Rat& slot = r[kk];
                    slot += v;
                    if (slot == 0) r.erase(kk);
                }
        return r;
    }

    static void acc_axpy(Acc& dst, const Rat& c, const RowVec& src) {
        for (const auto& [k, v] : src) {
            Rat& slot = dst[k];
            slot += c * v;
            if (slot == 0) dst.erase(k);
        }
    }

    void reduce(Acc& r) {
        while (!r.empty()) {
            auto it = pivots_.find(r.begin()->first);
            if (it == pivots_.end()) return;
            acc_axpy(r, -r.begin()->second, it->second);
        }
    }

    void install(Acc r) {
        reduce(r);
        if (r.empty()) return;
        Rat inv = Rat(1) / r.begin()->second;
        for (auto& [k, v] : r) v *= inv;
        uint64_t lead = r.begin()->first;
        for (const auto& [k, v] : r) enqueue(k);
        pivots_.emplace(lead, to_vec(std::move(r)));
        if (pivots_.size() > opts_.max_rows) throw BudgetExceeded(current_stats());
    }

    void enqueue(uint64_t k) {
        if (seen_.insert(k).second) {
            queue_.push_back(k);
            if (seen_.size() > opts_.max_cols) throw BudgetExceeded(current_stats());
        }
    }

    SpanStats current_stats() const {
        SpanStats s;
        s.pivot_rows = pivots_.size();
        s.rows_spawned = rows_spawned_;
        s.cols_touched = seen_.size();
        s.degree_used = degree_cap_;
        return s;
    }

    bool reduce_component(const Family& comp) {
        Acc resid = to_acc(comp);
        for (const auto& [k, v] : resid) enqueue(k);
        drain();
        reduce(resid);
        // degree ladder: candidate degree, then +2, then +4
        while (!resid.empty() && opts_.auto_retry && opts_.max_degree == 0) {
            int base = comp.max_degree() > 0 ? comp.max_degree() : degree_cap_;
            int bigger = degree_cap_ < base + 2 ? base + 2 : base + 4;
            if (bigger <= degree_cap_) break;
            degree_cap_ = bigger;
            respawn_all();
            drain();
            reduce(resid);
        }
        last_residual_.assign(resid.begin(), resid.end());
        return resid.empty();
    }

    void drain() {
        while (!queue_.empty()) {
            uint64_t k = queue_.front();
            queue_.pop_front();
            spawn_for(k);
        }
    }

    void respawn_all() {
        spawned_.clear();
        for (uint64_t k : seen_) queue_.push_back(k);
    }

    // --- generator spawning ------------------------------------------------

    bool mark(int cls, uint32_t wid, uint64_t idx, int a, int b) {
        uint64_t hi = (static_cast<uint64_t>(cls) << 48) |
                      (static_cast<uint64_t>(wid) << 24) |
                      (static_cast<uint64_t>(a & 0xfff) << 12) | (b & 0xfff);
        return spawned_.emplace(hi, idx).second;
    }

    static uint64_t clear_legs(uint64_t idx, std::initializer_list<int> legs) {
        for (int l : legs) idx = idx_set(idx, l, 0);
        return idx;
    }

    Family pinned(const Word& w, uint64_t idx) const {
        Family f = fam_zero(ctx_.n);
        f.terms[w][idx] = 1;
        return f;
    }

    void add_family_rows(const Family& f) {
        rows_spawned_++;
        Family nf = normalize_left(ctx_, bs_, f);
        if (nf.max_degree() > degree_cap_) return;
        install(to_acc(nf));
    }

    void spawn_eigen_block(int cls, const Word& w, uint32_t wid, uint64_t idx, const LegOp& op_t,
                           const Rat& lambda, int leg0) {
        uint64_t base = clear_legs(idx, {leg0, leg0 + 1, leg0 + 2});
        if (!mark(cls, wid, base, leg0, 0)) return;
        for_each_index(ctx_.n, 3, [&](uint64_t b) {
            rows_spawned_++;
            Acc r;
            uint64_t cb = base;
            for (int i = 0; i < 3; ++i) cb = idx_set(cb, leg0 + i, idx_get(b, i));
            auto it = op_t.cols.find(b);
            if (it != op_t.cols.end())
                for (const auto& [img, v] : it->second) {
                    uint64_t ci = base;
                    for (int i = 0; i < 3; ++i) ci = idx_set(ci, leg0 + i, idx_get(img, i));
                    r[key(w, ci)] += v;
                }
            Rat& slot = r[key(w, cb)];
            slot -= lambda;
            if (slot == 0) r.erase(key(w, cb));
            install(std::move(r));
        });
    }

    /// Split the pinned word into [0, s) and [s+len, end) pieces.
    std::pair<Family, Family> split_context(const Word& w, uint64_t idx, int s, int len) const {
        Family pre = fam_zero(ctx_.n), suf = fam_zero(ctx_.n);
        Word wp, ws;
        wp.syms.assign(w.syms.begin(), w.syms.begin() + s);
        ws.syms.assign(w.syms.begin() + s + len, w.syms.end());
        for (int g = 0; g + 1 < s; ++g)
            if (w.marker_at(g)) wp.markers |= 1u << g;
        for (int g = s + len; g + 1 < w.degree(); ++g)
            if (w.marker_at(g)) ws.markers |= 1u << (g - s - len);
        uint64_t ip = 0, is = 0;
        for (int l = 0; l < 2 * s; ++l) ip = idx_set(ip, l, idx_get(idx, l));
        for (int l = 2 * (s + len); l < 2 * w.degree(); ++l)
            is = idx_set(is, l - 2 * (s + len), idx_get(idx, l));
        pre.terms[wp][ip] = 1;
        suf.terms[ws][is] = 1;
        return {pre, suf};
    }

    void spawn_for(uint64_t col) {
        const uint32_t wid = word_of(col);
        const Word w = words_[wid];
        const uint64_t idx = idx_of(col);
        const int deg = w.degree();
        int a = 0;
        while (a < deg && w.syms[a] == Sym::P) ++a;
        const int k = deg - a;

        const Rat lam_s = ctx_.tp(ctx_.w.omega_sq());
        const Rat lam_st = ctx_.tp(-ctx_.w.omega_sq());

        // run-pair eigen constraints
        for (int i = 0; i + 1 < a; ++i) {
            spawn_eigen_block(1, w, wid, idx, s_t_, lam_s, 2 * i);
            spawn_eigen_block(2, w, wid, idx, st_t_, lam_st, 2 * i + 1);
        }
        // run/form boundary eigen constraints
        if (a >= 1 && k >= 1) {
            if (w.syms[a] == Sym::DP) spawn_eigen_block(3, w, wid, idx, st_t_, lam_st, 2 * a - 1);
            if (w.syms[a] == Sym::DBP) spawn_eigen_block(4, w, wid, idx, s_t_, lam_s, 2 * a - 2);
        }

        // trace relation at each p slot (from above)
        for (int j = 0; j < a; ++j) {
            if (idx_get(idx, 2 * j) != idx_get(idx, 2 * j + 1)) continue;
            uint64_t base = clear_legs(idx, {2 * j, 2 * j + 1});
            if (!mark(5, wid, base, j, 0)) continue;
            rows_spawned_++;
            Acc r;
            for (int m = 0; m < ctx_.n; ++m) {
                uint64_t ci = base;
                ci = idx_set(ci, 2 * j, m);
                ci = idx_set(ci, 2 * j + 1, m);
                r[key(w, ci)] += ctx_.tp(ctx_.w.rho_pairing(m + 1));
            }
            Word low = w;
            low.syms.erase(low.syms.begin() + j);
            low.markers = remove_gap(w.markers, j);
            uint64_t li = 0;
            for (int l = 0; l < 2 * j; ++l) li = idx_set(li, l, idx_get(idx, l));
            for (int l = 2 * (j + 1); l < 2 * deg; ++l) li = idx_set(li, l - 2, idx_get(idx, l));
            Rat& slot = r[key(low, li)];
            slot -= ctx_.tp(ctx_.w.omega_2rho());
            if (slot == 0) r.erase(key(low, li));
            install(std::move(r));
        }
        // trace relation inserted above this word (from below)
        if (deg + 1 <= degree_cap_) {
            for (int j = 0; j <= a; ++j) {
                Word high = w;
                high.syms.insert(high.syms.begin() + j, Sym::P);
                high.markers = insert_gap(w.markers, j > 0 ? j - 1 : 0);
                uint64_t hi = 0;
                for (int l = 0; l < 2 * j; ++l) hi = idx_set(hi, l, idx_get(idx, l));
                for (int l = 2 * j; l < 2 * deg; ++l) hi = idx_set(hi, l + 2, idx_get(idx, l));
                uint32_t hid = intern(high);
                if (!mark(5, hid, hi, j, 0)) continue;
                rows_spawned_++;
                Acc r;
                for (int m = 0; m < ctx_.n; ++m) {
                    uint64_t ci = hi;
                    ci = idx_set(ci, 2 * j, m);
                    ci = idx_set(ci, 2 * j + 1, m);
                    r[key(high, ci)] += ctx_.tp(ctx_.w.rho_pairing(m + 1));
                }
                Rat& slot = r[key(w, idx)];
                slot -= ctx_.tp(ctx_.w.omega_2rho());
                if (slot == 0) r.erase(key(w, idx));
                install(std::move(r));
            }
        }

        // E'-contracted generator at each one-form slot (diagonal legs)
        for (int m = 0; m < k; ++m) {
            int leg = 2 * (a + m);
            if (idx_get(idx, leg) != idx_get(idx, leg + 1)) continue;
            uint64_t base = clear_legs(idx, {leg, leg + 1});
            if (!mark(6, wid, base, m, 0)) continue;
            rows_spawned_++;
            Acc r;
            for (int v = 0; v < ctx_.n; ++v) {
                uint64_t ci = base;
                ci = idx_set(ci, leg, v);
                ci = idx_set(ci, leg + 1, v);
                r[key(w, ci)] += ctx_.tp(ctx_.w.rho_pairing(v + 1));
            }
            install(std::move(r));
        }

        // E-contracted boundary generators
        if (rels_.include_ev && a >= 1 && k >= 1 && w.syms[a] == Sym::DP &&
            idx_get(idx, 2 * a - 1) == idx_get(idx, 2 * a)) {
            uint64_t base = clear_legs(idx, {2 * a - 1, 2 * a});
            if (mark(7, wid, base, 0, 0)) {
                rows_spawned_++;
                Acc r;
                for (int m = 0; m < ctx_.n; ++m) {
                    uint64_t ci = base;
                    ci = idx_set(ci, 2 * a - 1, m);
                    ci = idx_set(ci, 2 * a, m);
                    r[key(w, ci)] += 1;
                }
                install(std::move(r));
            }
        }
        if (rels_.include_ev && a >= 1 && k >= 1 && w.syms[a] == Sym::DBP) {
            uint64_t base = clear_legs(idx, {2 * a - 2, 2 * a - 1, 2 * a, 2 * a + 1});
            if (mark(8, wid, base, 0, 0)) {
                auto [pre, suf] = split_context(w, idx, a - 1, 2);
                bool keep_marker = a + 1 <= deg - 1 && w.marker_at(a);
                for_each_index(ctx_.n, 2, [&](uint64_t il) {
                    Family inst = fam_mul(fam_mul(pre, component(ev4_left_, il), false), suf,
                                          keep_marker);
                    add_family_rows(inst);
                });
            }
        }

        // single-form replacement relations (from below)
        if (rels_.include_ev && deg + 1 <= degree_cap_) {
            for (int m = 0; m < k; ++m) {
                Sym g = w.syms[a + m];
                if (!mark(9, wid, idx, m, 0)) continue;
                const Family& repl = (g == Sym::DP) ? ev2_ : ev3_;
                add_family_rows(substitute(pinned(w, idx), a + m, 1, repl));
            }
        }

        // speculative: E'-contracted one-form inserted at form-region gaps
        if (opts_.insert_generators && deg + 1 <= degree_cap_) {
            for (int g = a; g <= deg; ++g) {
                for (int variant = 0; variant < 4; ++variant) {
                    bool ml = variant & 1, mr = variant & 2;
                    if (g == 0 && ml) continue;
                    if (g == deg && mr) continue;
                    for (int which = 0; which < 2; ++which) {
                        if (!mark(10 + which, wid, idx, g, variant)) continue;
                        auto [pre, suf] = split_context(w, idx, g, 0);
                        Family inst = fam_mul(pre, which == 0 ? epdp_ : epdbp_, ml);
                        inst = fam_mul(inst, suf, mr);
                        add_family_rows(inst);
                    }
                }
            }
        }

        // wedge relations at designated two-form positions
        if (!rels_.wedge.empty()) {
            for (int j : wedge_pairs_) {
                if (j < 0 || j + 1 >= k) continue;
                int s = a + j;
                if (!w.marker_at(s)) continue;
                for (size_t wi = 0; wi < rels_.wedge.size(); ++wi) {
                    if (!mark(20 + static_cast<int>(wi), wid, idx, j, 0)) continue;
                    add_family_rows(substitute(pinned(w, idx), s, 2, rels_.wedge[wi]));
                }
            }
        }
    }

    static uint32_t insert_gap(uint32_t markers, int gap) {
        uint32_t low = markers & ((1u << gap) - 1);
        uint32_t high = markers & ~((1u << gap) - 1);
        return low | (high << 1);
    }

    static uint32_t remove_gap(uint32_t markers, int gap) {
        uint32_t low = markers & ((1u << gap) - 1);
        uint32_t high = markers & ~((2u << gap) - 1);
        return low | (high >> 1);
    }

    const QContext& ctx_;
    const BraidingSet& bs_;
    RelationSet rels_;
    WedgePairs wedge_pairs_;
    SpanOptions opts_;
    int degree_cap_ = 0;

    Family ev2_, ev3_, ev4_left_, epdp_, epdbp_;
    LegOp s_t_, st_t_;

    std::vector<Word> words_;
    std::map<Word, uint32_t> word_ids_;

    std::unordered_map<uint64_t, RowVec> pivots_;
    std::unordered_set<uint64_t> seen_;
    std::deque<uint64_t> queue_;
    std::set<std::pair<uint64_t, uint64_t>> spawned_;  // (class/word/pos, index)
    size_t rows_spawned_ = 0;
    std::vector<std::pair<uint64_t, Rat>> last_residual_;
};

}  // namespace cpqr

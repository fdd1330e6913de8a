#pragma once

/**
 * @file legop.hpp
 * @brief Exact sparse operators acting on typed tuples of tensor legs.
 *
 * A leg is a copy of the fundamental module V or its dual V*. Multi-indices
 * over legs are packed into a uint64 with PACK_BITS bits per leg, leg 0 in
 * the lowest bits. Operators store a column-major sparse matrix: column =
 * domain index, entries = (codomain index, coefficient).
 */

#include "qscalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace cpqr {

enum class Leg : uint8_t { V = 0, Vd = 1 };

inline Leg dual(Leg l) { return l == Leg::V ? Leg::Vd : Leg::V; }

using Signature = std::vector<Leg>;

inline Signature sig_cat(const Signature& a, const Signature& b) {
    Signature s = a;
    s.insert(s.end(), b.begin(), b.end());
    return s;
}

constexpr int PACK_BITS = 3;          // index values 0..n-1, n <= 8
constexpr uint64_t PACK_MASK = 0x7;
constexpr int MAX_LEGS = 21;

inline uint64_t idx_get(uint64_t packed, int leg) {
    return (packed >> (PACK_BITS * leg)) & PACK_MASK;
}
inline uint64_t idx_set(uint64_t packed, int leg, uint64_t v) {
    int sh = PACK_BITS * leg;
    return (packed & ~(PACK_MASK << sh)) | (v << sh);
}

/// Total index count n^legs.
inline uint64_t space_dim(int n, size_t legs) {
    uint64_t d = 1;
    for (size_t i = 0; i < legs; ++i) d *= static_cast<uint64_t>(n);
    return d;
}

/// Enumerate all packed indices over `legs` legs with values in [0, n).
/// Calls f(packed) for each.
template <class F>
inline void for_each_index(int n, size_t legs, F&& f) {
    if (legs > static_cast<size_t>(MAX_LEGS)) throw std::length_error("too many legs");
    uint64_t total = space_dim(n, legs);
    std::vector<uint64_t> digits(legs, 0);
    uint64_t packed = 0;
    for (uint64_t c = 0; c < total; ++c) {
        f(packed);
        for (size_t i = 0; i < legs; ++i) {
            uint64_t v = idx_get(packed, static_cast<int>(i)) + 1;
            if (v < static_cast<uint64_t>(n)) {
                packed = idx_set(packed, static_cast<int>(i), v);
                break;
            }
            packed = idx_set(packed, static_cast<int>(i), 0);
        }
    }
}

using SparseVec = std::map<uint64_t, Rat>;  // codomain index -> coefficient

inline void vec_axpy(SparseVec& dst, const Rat& c, const SparseVec& src) {
    if (c == 0) return;
    for (const auto& [k, v] : src) {
        Rat& slot = dst[k];
        slot += c * v;
        if (slot == 0) dst.erase(k);
    }
}

/// Exact sparse linear map between leg spaces.
struct LegOp {
    int n = 0;
    Signature dom, cod;
    std::map<uint64_t, SparseVec> cols;  // domain index -> image vector

    bool is_zero() const {
        for (const auto& [c, v] : cols)
            if (!v.empty()) return false;
        return true;
    }

    void prune() {
        for (auto it = cols.begin(); it != cols.end();) {
            for (auto jt = it->second.begin(); jt != it->second.end();)
                jt = (jt->second == 0) ? it->second.erase(jt) : std::next(jt);
            it = it->second.empty() ? cols.erase(it) : std::next(it);
        }
    }

    friend bool operator==(const LegOp& a, const LegOp& b) {
        if (a.dom != b.dom || a.cod != b.cod) return false;
        LegOp x = a, y = b;
        x.prune();
        y.prune();
        return x.cols == y.cols;
    }
};

inline LegOp op_zero(int n, Signature dom, Signature cod) {
    LegOp o;
    o.n = n;
    o.dom = std::move(dom);
    o.cod = std::move(cod);
    return o;
}

inline LegOp op_identity(int n, const Signature& sig) {
    LegOp o = op_zero(n, sig, sig);
    for_each_index(n, sig.size(), [&](uint64_t i) { o.cols[i][i] = 1; });
    return o;
}

inline LegOp op_scale(const LegOp& a, const Rat& c) {
    LegOp o = a;
    for (auto& [k, v] : o.cols)
        for (auto& [r, x] : v) x *= c;
    o.prune();
    return o;
}

inline LegOp op_add(const LegOp& a, const LegOp& b) {
    if (a.dom != b.dom || a.cod != b.cod) throw std::logic_error("op_add: signature mismatch");
    LegOp o = a;
    for (const auto& [c, v] : b.cols) vec_axpy(o.cols[c], Rat(1), v);
    o.prune();
    return o;
}

inline LegOp op_sub(const LegOp& a, const LegOp& b) { return op_add(a, op_scale(b, Rat(-1))); }

/// Composition a after b (matrix product a*b).
inline LegOp op_compose(const LegOp& a, const LegOp& b) {
    if (b.cod != a.dom) throw std::logic_error("op_compose: signature mismatch");
    LegOp o = op_zero(a.n, b.dom, a.cod);
    for (const auto& [c, mids] : b.cols) {
        SparseVec acc;
        for (const auto& [m, v] : mids) {
            auto it = a.cols.find(m);
            if (it != a.cols.end()) vec_axpy(acc, v, it->second);
        }
        if (!acc.empty()) o.cols[c] = std::move(acc);
    }
    return o;
}

/// Promote `op` to an ambient signature, acting on legs [pos, pos + arity)
/// and as the identity elsewhere. The ambient legs at that range must match
/// op.dom; the result signature replaces them by op.cod.
inline LegOp op_embed(const LegOp& op, const Signature& ambient, int pos) {
    size_t a = op.dom.size();
    if (pos < 0 || pos + a > ambient.size()) throw std::logic_error("op_embed: bad position");
    for (size_t i = 0; i < a; ++i)
        if (ambient[pos + i] != op.dom[i]) throw std::logic_error("op_embed: leg type mismatch");
    Signature out(ambient.begin(), ambient.begin() + pos);
    out.insert(out.end(), op.cod.begin(), op.cod.end());
    out.insert(out.end(), ambient.begin() + pos + a, ambient.end());

    size_t tail = ambient.size() - pos - a;
    LegOp o = op_zero(op.n, ambient, out);
    for_each_index(op.n, ambient.size(), [&](uint64_t full) {
        uint64_t sub = 0, rest = 0;
        for (size_t i = 0; i < a; ++i) sub = idx_set(sub, static_cast<int>(i), idx_get(full, pos + static_cast<int>(i)));
        int rl = 0;
        for (int i = 0; i < pos; ++i) rest = idx_set(rest, rl++, idx_get(full, i));
        for (size_t i = 0; i < tail; ++i)
            rest = idx_set(rest, rl++, idx_get(full, pos + static_cast<int>(a + i)));
        auto it = op.cols.find(sub);
        if (it == op.cols.end()) return;
        SparseVec& out_col = o.cols[full];
        for (const auto& [img, v] : it->second) {
            uint64_t target = 0;
            int tl = 0;
            for (int i = 0; i < pos; ++i) target = idx_set(target, tl++, idx_get(rest, i));
            for (size_t i = 0; i < op.cod.size(); ++i)
                target = idx_set(target, tl++, idx_get(img, static_cast<int>(i)));
            for (size_t i = 0; i < tail; ++i)
                target = idx_set(target, tl++, idx_get(rest, pos + static_cast<int>(i)));
            out_col[target] += v;
        }
    });
    o.prune();
    return o;
}

/// Transpose: swaps the roles of domain and codomain indices.
inline LegOp op_transpose(const LegOp& op) {
    LegOp t = op_zero(op.n, op.cod, op.dom);
    for (const auto& [c, col] : op.cols)
        for (const auto& [r, v] : col) t.cols[r][c] = v;
    return t;
}

/// Exact inverse by Gaussian elimination. Throws if singular.
inline LegOp op_invert(const LegOp& op) {
    if (space_dim(op.n, op.dom.size()) != space_dim(op.n, op.cod.size()))
        throw std::logic_error("op_invert: non-square operator");
    // rows[r] = (row of [A | I]) as two sparse vectors
    std::map<uint64_t, std::pair<SparseVec, SparseVec>> rows;
    for (const auto& [c, col] : op.cols)
        for (const auto& [r, v] : col) rows[r].first[c] = v;
    for_each_index(op.n, op.dom.size(), [&](uint64_t i) { rows[i].second[i] = 1; });

    std::map<uint64_t, std::pair<SparseVec, SparseVec>> done;  // pivot col -> reduced row
    for (auto& [r, row] : rows) {
        auto& [lhs, rhs] = row;
        // reduce against established pivots
        for (const auto& [pc, prow] : done) {
            auto it = lhs.find(pc);
            if (it == lhs.end()) continue;
            Rat f = it->second;
            vec_axpy(lhs, -f, prow.first);
            vec_axpy(rhs, -f, prow.second);
        }
        if (lhs.empty()) continue;
        uint64_t pc = lhs.begin()->first;
        Rat inv = Rat(1) / lhs.begin()->second;
        for (auto& [k, v] : lhs) v *= inv;
        for (auto& [k, v] : rhs) v *= inv;
        // back-substitute into previous pivot rows
        for (auto& [qc, qrow] : done) {
            auto it = qrow.first.find(pc);
            if (it == qrow.first.end()) continue;
            Rat f = it->second;
            vec_axpy(qrow.first, -f, lhs);
            vec_axpy(qrow.second, -f, rhs);
        }
        done.emplace(pc, std::make_pair(lhs, rhs));
    }
    uint64_t dim = space_dim(op.n, op.dom.size());
    if (done.size() != dim) throw std::logic_error("op_invert: singular operator");
    LegOp inv = op_zero(op.n, op.cod, op.dom);
    for (const auto& [pc, row] : done)
        for (const auto& [c, v] : row.second)
            if (v != 0) inv.cols[c][pc] = v;
    return inv;
}

/// Rank by Gaussian elimination (used for spectral multiplicity checks).
inline uint64_t op_rank(const LegOp& op) {
    std::vector<SparseVec> rows;
    std::map<uint64_t, SparseVec> byrow;
    for (const auto& [c, col] : op.cols)
        for (const auto& [r, v] : col) byrow[r][c] = v;
    std::map<uint64_t, SparseVec> pivots;
    for (auto& [r, row] : byrow) {
        SparseVec cur = row;
        while (!cur.empty()) {
            uint64_t lead = cur.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rat inv = Rat(1) / cur.begin()->second;
                for (auto& [k, v] : cur) v *= inv;
                pivots.emplace(lead, std::move(cur));
                break;
            }
            vec_axpy(cur, -cur.begin()->second, it->second);
        }
    }
    return pivots.size();
}

}  // namespace cpqr

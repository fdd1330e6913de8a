#pragma once

// Test oracle: evaluation of families at a classical point of the projective
// space (t = 1 only). The generators are modelled as
//   p^{ij}   -> z_i w_j            with w . z = 1
//   dp^{ij}  -> u_i w_j  (slot s)  with u_s . w = 0
//   dbp^{ij} -> z_i v_j  (slot s)  with v_s . z = 0
// where each tensor factor (segment) of a word gets its own tangent slot.
// All defining relations of the calculus hold exactly in this model, so a
// nonzero value certifies that an element is nonzero in the quotient.

#include "cpqr/wordspace.hpp"

#include <random>

namespace cpqr_test {

using namespace cpqr;

struct ClassicalPoint {
    std::vector<Rat> z, w;
    std::vector<std::vector<Rat>> u, v;  // per tensor slot

    static ClassicalPoint random(int n, int slots, std::mt19937& rng) {
        auto rnd = [&rng]() { return Rat(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 5)); };
        ClassicalPoint pt;
        pt.z.resize(n);
        pt.w.resize(n);
        for (int i = 0; i < n; ++i) pt.z[i] = rnd();
        // solve w . z = 1 with random leading entries
        Rat acc(0);
        for (int i = 0; i + 1 < n; ++i) {
            pt.w[i] = rnd();
            acc += pt.w[i] * pt.z[i];
        }
        pt.w[n - 1] = (Rat(1) - acc) / pt.z[n - 1];
        for (int s = 0; s < slots; ++s) {
            std::vector<Rat> us(n), vs(n);
            Rat au(0), av(0);
            for (int i = 0; i + 1 < n; ++i) {
                us[i] = rnd();
                vs[i] = rnd();
                au += us[i] * pt.w[i];
                av += vs[i] * pt.z[i];
            }
            us[n - 1] = -au / pt.w[n - 1];  // u . w = 0
            vs[n - 1] = -av / pt.z[n - 1];  // v . z = 0
            pt.u.push_back(us);
            pt.v.push_back(vs);
        }
        return pt;
    }

    /// Evaluate one fully pinned word.
    Rat eval_word(const Word& word, uint64_t idx) const {
        Rat out(1);
        int slot = 0;
        for (int s = 0; s < word.degree(); ++s) {
            int i = static_cast<int>(idx_get(idx, 2 * s));
            int j = static_cast<int>(idx_get(idx, 2 * s + 1));
            switch (word.syms[s]) {
                case Sym::P: out *= z[i] * w[j]; break;
                case Sym::DP: out *= u[slot][i] * w[j]; break;
                case Sym::DBP: out *= z[i] * v[slot][j]; break;
            }
            if (s + 1 < word.degree() && word.marker_at(s)) ++slot;
        }
        return out;
    }

    /// Evaluate a family without external legs.
    Rat eval(const Family& f) const {
        Rat out(0);
        for (const auto& [word, coeffs] : f.terms)
            for (const auto& [idx, val] : coeffs) out += val * eval_word(word, idx);
        return out;
    }
};

}  // namespace cpqr_test

#pragma once

/**
 * @file qscalar.hpp
 * @brief Exact scalar arithmetic in the deformation parameter.
 *
 * All scalars are exact rationals (GMP). The deformation parameter is
 * supplied as the base parameter t with q = t^n, n = r + 1, so that every
 * q-exponent used by the geometry becomes an integer power of t. Exponents
 * are carried in "t-units" throughout: a q-exponent x corresponds to the
 * t-exponent n*x.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpqr {

using Rat = mpq_class;

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// t^e for integer e (e may be negative), t != 0.
inline Rat int_pow(const Rat& t, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? t : Rat(1) / t;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rat acc(1);
    Rat sq = base;
    while (k) {
        if (k & 1) acc *= sq;
        if (k >>= 1) sq *= sq;
    }
    return acc;
}

/// Weight data of the fundamental module of sl_{r+1}, in t-units.
///
/// Basis weights lam_1 > ... > lam_n. Stored exponents satisfy
///   (lam_i, lam_j) -> n*delta_{ij} - 1,   (lam_i, 2 rho) -> n*(n + 1 - 2i).
struct WeightData {
    int n = 0;

    /// t-exponent of q^{(lam_i, lam_j)}; i, j are 1-based.
    long pairing_diag(int i, int j) const { return (i == j ? n : 0) - 1; }
    /// t-exponent of q^{(lam_i, 2 rho)}; i is 1-based.
    long rho_pairing(int i) const { return static_cast<long>(n) * (n + 1 - 2 * i); }
    /// t-exponent of q^{(omega_1, omega_1)}.
    long omega_sq() const { return n - 1; }
    /// t-exponent of q^{(omega_1, 2 rho)}.
    long omega_2rho() const { return static_cast<long>(n) * (n - 1); }
    /// t-exponent of q^{(alpha_s, alpha_s)}.
    long alpha_sq() const { return 2L * n; }
    /// t-exponent of q^{(omega_1, omega_1 + 2 rho)}.
    long casimir() const { return static_cast<long>(n) * n - 1; }
};

/// Immutable computation context: rank r, base parameter t, q = t^{r+1}.
struct QContext {
    int r = 1;        ///< complex dimension of the projective space
    int n = 2;        ///< r + 1, dimension of the fundamental module
    Rat t;            ///< base parameter, q = t^n
    Rat q;
    WeightData w;

    /// t^e, exponent in t-units.
    Rat tp(long e) const { return int_pow(t, e); }
    /// q^e, exponent in q-units (integer).
    Rat qp(long e) const { return int_pow(q, e); }
};

/// Build a context. Rejects r < 1 and t = 0.
inline QContext make_context(int r, const Rat& t) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(r));
    if (t == 0) throw std::invalid_argument("parameter t must be nonzero");
    QContext c;
    c.r = r;
    c.n = r + 1;
    c.t = t;
    c.t.canonicalize();
    c.q = int_pow(c.t, c.n);
    c.w.n = c.n;
    return c;
}

/// q-number [x]_q = (q^x - q^{-x}) / (q - q^{-1}), with the limit value at
/// q^2 = 1 so the classical suite runs in the same engine.
inline Rat qnum(const QContext& ctx, long x) {
    if (ctx.q * ctx.q == 1) {
        // [x]_q -> x at q = 1 and (-1)^{x+1} x at q = -1
        Rat v(x);
        return (ctx.q == 1 || x % 2 != 0) ? v : -v;
    }
    return (ctx.qp(x) - ctx.qp(-x)) / (ctx.q - ctx.qp(-1));
}

/// t^e for integer exponent e in t-units.
inline Rat qpow(const QContext& ctx, long e) { return ctx.tp(e); }

/// Quantum dimension of the fundamental module as a weight sum,
/// qdim = sum_i q^{(lam_i, 2 rho)} = [n]_q.
inline Rat qdim_weight_sum(const QContext& ctx) {
    Rat s(0);
    for (int i = 1; i <= ctx.n; ++i) s += ctx.tp(ctx.w.rho_pairing(i));
    return s;
}

/// Quantum Weyl dimension product prod_{j=1..r} [j+1]_q / [j]_q.
inline Rat qdim_weyl_product(const QContext& ctx) {
    Rat s(1);
    for (int j = 1; j <= ctx.r; ++j) s *= qnum(ctx, j + 1) / qnum(ctx, j);
    return s;
}

/// Parse "a/b" or "a" into an exact rational.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    v.canonicalize();
    return v;
}

}  // namespace cpqr

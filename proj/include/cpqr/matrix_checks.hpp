#pragma once

/**
 * @file matrix_checks.hpp
 * @brief Pure matrix identities for the braiding set: Hecke relations, snake
 *        equations, naturality, dual-pair rescaling, and the S / St / T
 *        commutation, braid, quadratic and evaluation identities.
 *
 * Every check is an exact residual computation; pass means the residual is
 * identically zero.
 */

#include "braiding.hpp"

namespace cpqr {

struct MatrixCheckResult {
    std::string id;
    bool pass = false;
    bool imported = false;  ///< identity taken from cited background work
    std::string note;
};

inline std::vector<MatrixCheckResult> verify_matrix_identities(const QContext& ctx,
                                                               const BraidingSet& bs) {
    std::vector<MatrixCheckResult> out;
    auto add = [&out](std::string id, bool ok, std::string note = "", bool imported = false) {
        out.push_back({std::move(id), ok, imported, std::move(note)});
    };
    const int n = ctx.n;
    const long om = ctx.w.omega_sq();    // t-units of q^{(omega,omega)}
    const long al = ctx.w.alpha_sq();    // t-units of q^{(alpha,alpha)}
    const Rat cas = ctx.tp(ctx.w.casimir());

    // Hecke relation for R_{V,V} and R_{V*,V*}
    for (Leg l : {Leg::V, Leg::Vd}) {
        const LegOp& R = bs.R(l, l);
        LegOp id = op_identity(n, R.dom);
        LegOp res = op_compose(op_sub(R, op_scale(id, ctx.tp(om))),
                               op_add(R, op_scale(id, ctx.tp(om - al))));
        add(l == Leg::V ? "matrix/hecke/vv" : "matrix/hecke/dd", res.is_zero());
    }

    // two-eigenvalue spectral structure of R_{V,V}
    {
        const LegOp& R = bs.R(Leg::V, Leg::V);
        LegOp id = op_identity(n, R.dom);
        uint64_t ranted = op_rank(op_sub(R, op_scale(id, ctx.tp(om))));
        uint64_t rsym = op_rank(op_add(R, op_scale(id, ctx.tp(om - al))));
        bool ok = ranted == static_cast<uint64_t>(n) * (n - 1) / 2 &&
                  rsym == static_cast<uint64_t>(n) * (n + 1) / 2;
        add("matrix/hecke/spectral-multiplicities", ok);
    }

    // snake equations
    {
        const DualityMaps& d = bs.dual;
        bool ok = op_compose(op_embed(d.E, {Leg::V, Leg::Vd, Leg::V}, 1),
                             op_embed(d.C, {Leg::V}, 0)) == op_identity(n, {Leg::V}) &&
                  op_compose(op_embed(d.E, {Leg::Vd, Leg::V, Leg::Vd}, 0),
                             op_embed(d.C, {Leg::Vd}, 1)) == op_identity(n, {Leg::Vd}) &&
                  op_compose(op_embed(d.Ep, {Leg::Vd, Leg::V, Leg::Vd}, 1),
                             op_embed(d.Cp, {Leg::Vd}, 0)) == op_identity(n, {Leg::Vd}) &&
                  op_compose(op_embed(d.Ep, {Leg::V, Leg::Vd, Leg::V}, 0),
                             op_embed(d.Cp, {Leg::V}, 1)) == op_identity(n, {Leg::V});
        add("matrix/snake-equations", ok);
    }

    // eight naturality identities, each instantiated at W = V and W = V*
    {
        static const char* names[4] = {"e12", "e23", "ep12", "ep23"};
        for (int k = 0; k < 4; ++k) {
            bool ok = naturality_eval_residuals(bs, Leg::V)[k].is_zero() &&
                      naturality_eval_residuals(bs, Leg::Vd)[k].is_zero();
            add(std::string("matrix/naturality/eval-") + names[k], ok);
        }
        static const char* cnames[4] = {"c1", "c2", "cp1", "cp2"};
        for (int k = 0; k < 4; ++k) {
            bool ok = naturality_coeval_residuals(bs, Leg::V)[k].is_zero() &&
                      naturality_coeval_residuals(bs, Leg::Vd)[k].is_zero();
            add(std::string("matrix/naturality/coeval-") + cnames[k], ok);
        }
    }

    // dual-pair rescaling: E' = c E R_{V,V*} and C' = c R_{V,V*} C, c = q^{(lam,lam+2rho)}
    {
        bool ok1 = bs.dual.Ep == op_scale(op_compose(bs.dual.E, bs.R(Leg::V, Leg::Vd)), cas);
        bool ok2 = bs.dual.Cp == op_scale(op_compose(bs.R(Leg::V, Leg::Vd), bs.dual.C), cas);
        add("matrix/dual-pair-rescaling", ok1 && ok2);
    }

    const Signature sig4{Leg::V, Leg::Vd, Leg::V, Leg::Vd};
    const Signature sig5{Leg::V, Leg::Vd, Leg::V, Leg::Vd, Leg::V};
    const Signature sig5d{Leg::Vd, Leg::V, Leg::Vd, Leg::V, Leg::Vd};
    const Signature sig6{Leg::V, Leg::Vd, Leg::V, Leg::Vd, Leg::V, Leg::Vd};

    // S and St commutation relations
    {
        LegOp s12 = op_embed(bs.S, sig4, 0), st23 = op_embed(bs.St, sig4, 1);
        bool ok1 = op_compose(s12, st23) == op_compose(st23, s12);
        LegOp st2 = op_embed(bs.St, sig5, 1), s3 = op_embed(bs.S, sig5, 2);
        bool ok2 = op_compose(st2, s3) == op_compose(s3, st2);
        add("matrix/s-commutation", ok1 && ok2);
    }

    // braid equations for S and St
    {
        LegOp a = op_embed(bs.S, sig5, 0), b = op_embed(bs.S, sig5, 2);
        bool ok1 = op_compose(a, op_compose(b, a)) == op_compose(b, op_compose(a, b));
        LegOp c = op_embed(bs.St, sig5d, 0), e = op_embed(bs.St, sig5d, 2);
        bool ok2 = op_compose(c, op_compose(e, c)) == op_compose(e, op_compose(c, e));
        add("matrix/s-braid-equations", ok1 && ok2);
    }

    // quadratic relations: S = q^{2w-a} S^{-1} + (1-q^{-a}) q^{w}, similarly St
    {
        LegOp idS = op_identity(n, bs.S.dom);
        LegOp rhs = op_add(op_scale(bs.Si, ctx.tp(2 * om - al)),
                           op_scale(idS, (1 - ctx.tp(-al)) * ctx.tp(om)));
        bool ok1 = bs.S == rhs;
        LegOp idT = op_identity(n, bs.St.dom);
        LegOp rhs2 = op_add(op_scale(bs.Sti, ctx.tp(al - 2 * om)),
                            op_scale(idT, (1 - ctx.tp(al)) * ctx.tp(-om)));
        bool ok2 = bs.St == rhs2;
        add("matrix/s-quadratic", ok1 && ok2);
    }

    // evaluation identities: E'_12 S_123 = c E_23, E'_34 St^{-1}_234 = c E_23
    {
        Signature s3{Leg::V, Leg::Vd, Leg::V};
        LegOp lhs1 = op_compose(op_embed(bs.dual.Ep, s3, 0), bs.S);
        LegOp rhs1 = op_scale(op_embed(bs.dual.E, s3, 1), cas);
        LegOp lhs2 = op_compose(op_embed(bs.dual.Ep, sig4, 2), op_embed(bs.Sti, sig4, 1));
        LegOp rhs2 = op_scale(op_embed(bs.dual.E, sig4, 1), cas);
        add("matrix/s-evaluation", lhs1 == rhs1 && lhs2 == rhs2);
    }

    // T = S_123 St_234 = St_234 S_123 and stored inverses
    {
        LegOp t1 = op_compose(op_embed(bs.S, sig4, 0), op_embed(bs.St, sig4, 1));
        LegOp t2 = op_compose(op_embed(bs.St, sig4, 1), op_embed(bs.S, sig4, 0));
        add("matrix/t-factorizations", t1 == bs.T && t2 == bs.T);
    }
    {
        bool ok = true;
        for (Leg a : {Leg::V, Leg::Vd})
            for (Leg b : {Leg::V, Leg::Vd}) {
                const LegOp& R = bs.R(a, b);
                ok = ok && op_compose(R, bs.Rinv(a, b)) == op_identity(n, R.cod);
            }
        ok = ok && op_compose(bs.S, bs.Si) == op_identity(n, bs.S.dom);
        ok = ok && op_compose(bs.St, bs.Sti) == op_identity(n, bs.St.dom);
        ok = ok && op_compose(bs.T, bs.Ti) == op_identity(n, bs.T.dom);
        add("matrix/stored-inverses", ok);
    }

    // braid equation for T and the T-evaluation exchange rule
    {
        LegOp ta = op_embed(bs.T, sig6, 0), tb = op_embed(bs.T, sig6, 2);
        add("matrix/t-braid-equation",
            op_compose(ta, op_compose(tb, ta)) == op_compose(tb, op_compose(ta, tb)));
        LegOp lhs = op_compose(op_embed(bs.dual.E, sig6, 1), op_compose(tb, ta));
        Signature sig6_after{Leg::V, Leg::Vd, Leg::V, Leg::Vd};
        LegOp rhs = op_compose(op_embed(bs.T, sig6_after, 0), op_embed(bs.dual.E, sig6, 3));
        add("matrix/t-evaluation-exchange", lhs == rhs, "", true);
    }

    return out;
}

}  // namespace cpqr

#pragma once

/**
 * @file relations.hpp
 * @brief Defining relations of the quantum projective space algebra and the
 *        Heckenberger-Kolb first-order calculus, as concrete families.
 *
 * Every relation is stored as a Family that is identically zero in the
 * quotient. Free external legs mean one relation per component. The wedge
 * relations are degree-two families in the tensor square, used by the
 * membership engine at designated two-form positions only.
 */

#include "wordspace.hpp"

namespace cpqr {

struct RelationSet {
    // algebra relations
    Family A1;   ///< S_123 pp - q^{(w,w)} pp
    Family A2;   ///< St_234 pp - q^{-(w,w)} pp
    Family A3;   ///< E'_12 p - q^{(w,2rho)} 1
    // left-module calculus relations
    Family C1;   ///< St_234 p dp - q^{-(w,w)} p dp
    Family C2;   ///< E'_12 dp
    Family C3;   ///< S_123 p dbp - q^{(w,w)} p dbp
    Family C4;   ///< E'_12 dbp
    // right-module relations (drive the bimodule rewrites)
    Family R1;   ///< dp p - q^{(a,a)-(w,w)} S_123 p dp
    Family R2;   ///< dbp p - q^{(w,w)-(a,a)} St_234 p dbp
    // evaluation relations
    Family EV1;  ///< E_23 p dp
    Family EV2;  ///< E_23 dp p - dp
    Family EV3;  ///< E_23 p dbp - dbp
    Family EV4;  ///< E_23 dbp p

    std::vector<Family> wedge;  ///< selected degree-two relations (may be empty)
    bool include_ev = true;     ///< EV1-EV4 available to the span engine
};

inline RelationSet build_core_relations(const QContext& ctx, const BraidingSet& bs) {
    RelationSet rs;
    const long om = ctx.w.omega_sq();
    const long al = ctx.w.alpha_sq();
    const long o2r = ctx.w.omega_2rho();
    Family p = atom(ctx, Sym::P), dp = atom(ctx, Sym::DP), dbp = atom(ctx, Sym::DBP);

    Family pp = mul(p, p);
    rs.A1 = fam_sub(apply_op(pp, bs.S, 0), fam_scale(pp, ctx.tp(om)));
    rs.A2 = fam_sub(apply_op(pp, bs.St, 1), fam_scale(pp, ctx.tp(-om)));
    rs.A3 = fam_sub(apply_op(p, bs.dual.Ep, 0), fam_scale(fam_one(ctx), ctx.tp(o2r)));

    Family pdp = mul(p, dp), pdbp = mul(p, dbp);
    rs.C1 = fam_sub(apply_op(pdp, bs.St, 1), fam_scale(pdp, ctx.tp(-om)));
    rs.C2 = apply_op(dp, bs.dual.Ep, 0);
    rs.C3 = fam_sub(apply_op(pdbp, bs.S, 0), fam_scale(pdbp, ctx.tp(om)));
    rs.C4 = apply_op(dbp, bs.dual.Ep, 0);

    rs.R1 = fam_sub(mul(dp, p), fam_scale(apply_op(pdp, bs.S, 0), ctx.tp(al - om)));
    rs.R2 = fam_sub(mul(dbp, p), fam_scale(apply_op(pdbp, bs.St, 1), ctx.tp(om - al)));

    rs.EV1 = apply_op(pdp, bs.dual.E, 1);
    rs.EV2 = fam_sub(apply_op(mul(dp, p), bs.dual.E, 1), dp);
    rs.EV3 = fam_sub(apply_op(pdbp, bs.dual.E, 1), dbp);
    rs.EV4 = apply_op(mul(dbp, p), bs.dual.E, 1);
    return rs;
}

/// The Heckenberger-Kolb degree-two relations, rewritten through S and St
/// (an invertible change of the displayed form, so the component span is
/// unchanged): four one-type relations plus the mixed relation.
inline std::vector<Family> build_hk_wedge(const QContext& ctx, const BraidingSet& bs) {
    const long om = ctx.w.omega_sq();
    const long al = ctx.w.alpha_sq();
    const long o2r = ctx.w.omega_2rho();
    Family dp = atom(ctx, Sym::DP), dbp = atom(ctx, Sym::DBP);
    Family pp_dd = otimes(dp, dp);
    Family pp_bb = otimes(dbp, dbp);

    std::vector<Family> w;
    // (S + q^{(w,w)-(a,a)}) dp ^ dp and (St^{-1} - q^{(w,w)}) dp ^ dp
    w.push_back(fam_add(apply_op(pp_dd, bs.S, 0), fam_scale(pp_dd, ctx.tp(om - al))));
    w.push_back(fam_sub(apply_op(pp_dd, bs.Sti, 1), fam_scale(pp_dd, ctx.tp(om))));
    // (S - q^{(w,w)}) dbp ^ dbp and (St^{-1} + q^{(w,w)-(a,a)}) dbp ^ dbp
    w.push_back(fam_sub(apply_op(pp_bb, bs.S, 0), fam_scale(pp_bb, ctx.tp(om))));
    w.push_back(fam_add(apply_op(pp_bb, bs.Sti, 1), fam_scale(pp_bb, ctx.tp(om - al))));
    // mixed: dbp ^ dp + q^{-(a,a)} T^{-1} dp ^ dbp
    //        - q^{-(a,a)} q^{-(w,2rho)} E'_34 T^{-1}_3456 p dp ^ dbp
    Family mixed = otimes(dbp, dp);
    mixed = fam_add(mixed, fam_scale(apply_op(otimes(dp, dbp), bs.Ti, 0), ctx.tp(-al)));
    Family tail = mul(atom(ctx, Sym::P), otimes(dp, dbp));
    tail = apply_op(tail, bs.Ti, 2);
    tail = apply_op(tail, bs.dual.Ep, 2);
    mixed = fam_sub(mixed, fam_scale(tail, ctx.tp(-al - o2r)));
    w.push_back(mixed);
    return w;
}

}  // namespace cpqr

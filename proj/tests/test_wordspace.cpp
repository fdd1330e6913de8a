#include <catch2/catch_amalgamated.hpp>

#include "cpqr/wordspace.hpp"

#include <random>

using namespace cpqr;

namespace {

uint64_t pk(std::initializer_list<int> vals) {
    uint64_t p = 0;
    int l = 0;
    for (int v : vals) p = idx_set(p, l++, v);
    return p;
}

Family random_family(const QContext& ctx, const Signature& ext, std::mt19937& rng) {
    Family f = fam_zero(ctx.n, ext);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> len(1, 2);
    for (int t = 0; t < 3; ++t) {
        Word w;
        int L = len(rng);
        for (int i = 0; i < L; ++i) w.syms.push_back(static_cast<Sym>(rng() % 3));
        for (int g = 0; g + 1 < L; ++g)
            if (rng() % 2) w.markers |= 1u << g;
        Coeffs& c = f.terms[w];
        size_t legs = ext.size() + 2 * w.syms.size();
        for (int k = 0; k < 5; ++k) {
            uint64_t idx = 0;
            for (size_t l = 0; l < legs; ++l) idx = idx_set(idx, static_cast<int>(l), rng() % ctx.n);
            int v = num(rng);
            if (v) c[idx] += v;
        }
    }
    f.prune();
    return f;
}

}  // namespace

TEST_CASE("atoms and products") {
    auto ctx = make_context(1, Rat(7, 10));
    Family p = atom(ctx, Sym::P);
    CHECK(p.ext == Signature{Leg::V, Leg::Vd});
    CHECK(p.terms.size() == 1);
    // identity coefficients
    CHECK(p.terms.begin()->second.at(pk({0, 1, 0, 1})) == 1);
    CHECK(p.terms.begin()->second.size() == 4);

    Family pp = mul(p, p);
    CHECK(pp.ext.size() == 4);
    CHECK(pp.terms.begin()->first.degree() == 2);
    CHECK_FALSE(pp.terms.begin()->first.marker_at(0));

    Family dd = otimes(atom(ctx, Sym::DP), atom(ctx, Sym::DBP));
    CHECK(dd.ext.size() == 4);
    CHECK(dd.terms.begin()->first.marker_at(0));

    // unit and associativity
    CHECK(mul(fam_one(ctx), p) == p);
    CHECK(mul(p, fam_one(ctx)) == p);
    Family q = atom(ctx, Sym::DP);
    CHECK(mul(mul(p, q), p) == mul(p, mul(q, p)));
}

TEST_CASE("leg operator application and renumbering") {
    auto ctx = make_context(2, Rat(1));
    auto bs = build_braiding_set(ctx);
    Family pp = mul(atom(ctx, Sym::P), atom(ctx, Sym::P));

    SECTION("identity leaves families unchanged") {
        LegOp id = op_identity(ctx.n, {Leg::V, Leg::Vd});
        CHECK(apply_op(pp, id, 0) == pp);
        CHECK(apply_op(pp, id, 2) == pp);
    }

    SECTION("classical S permutes components: (S w)^{ijkl} = w^{kjil}") {
        Family sp = apply_op(pp, bs.S, 0);
        for (const auto& [w, coeffs] : sp.terms)
            for (const auto& [idx, v] : coeffs) {
                uint64_t src = idx;
                src = idx_set(src, 0, idx_get(idx, 2));
                src = idx_set(src, 2, idx_get(idx, 0));
                CHECK(pp.terms.at(w).at(src) == v);
            }
    }

    SECTION("snake contractions on families") {
        Family f = atom(ctx, Sym::DP);
        // C at position 0, then E at legs (1,2): E_23 C_1 = id
        Family g = apply_op(apply_op(f, bs.dual.C, 0), bs.dual.E, 1);
        CHECK(g == f);
        // C' at position 1, then E' at legs (0,1): E'_12 C'_2 = id
        Family h = apply_op(apply_op(f, bs.dual.Cp, 1), bs.dual.Ep, 0);
        CHECK(h == f);
    }
}

TEST_CASE("metric contraction matches the classical formula") {
    auto ctx = make_context(2, Rat(1));
    auto bs = build_braiding_set(ctx);
    // g_{+-} = E'_12 E_23 dp (x) dbp, applied right to left
    Family f = otimes(atom(ctx, Sym::DP), atom(ctx, Sym::DBP));
    f = apply_op(f, bs.dual.E, 1);
    f = apply_op(f, bs.dual.Ep, 0);
    REQUIRE(f.ext.empty());
    REQUIRE(f.terms.size() == 1);
    const auto& [w, coeffs] = *f.terms.begin();
    CHECK(w.syms == std::vector<Sym>{Sym::DP, Sym::DBP});
    CHECK(w.marker_at(0));
    // expected sum_{ij} dp^{ij} (x) dbp^{ji}
    Coeffs expect;
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) expect[pk({i, j, j, i})] = 1;
    CHECK(coeffs == expect);
}

TEST_CASE("coevaluation insertion matches the classical formula") {
    auto ctx = make_context(2, Rat(1));
    auto bs = build_braiding_set(ctx);
    // C'_2 p: insert at position 1; component (ijkl) = delta^{jk} p^{il}
    Family f = apply_op(atom(ctx, Sym::P), bs.dual.Cp, 1);
    REQUIRE(f.ext.size() == 4);
    const auto& coeffs = f.terms.begin()->second;
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j)
            for (int k = 0; k < ctx.n; ++k)
                for (int l = 0; l < ctx.n; ++l) {
                    uint64_t idx = pk({i, j, k, l, i, l});
                    auto it = coeffs.find(idx);
                    if (j == k)
                        CHECK((it != coeffs.end() && it->second == 1));
                    else
                        CHECK(it == coeffs.end());
                }
}

TEST_CASE("operator application distributes and commutes on disjoint legs") {
    auto ctx = make_context(2, Rat(3, 5));
    auto bs = build_braiding_set(ctx);
    std::mt19937 rng(2024);
    Signature ext{Leg::V, Leg::Vd, Leg::V, Leg::Vd};
    for (int trial = 0; trial < 5; ++trial) {
        Family a = random_family(ctx, ext, rng);
        Family b = random_family(ctx, ext, rng);
        const LegOp& op = bs.R(Leg::V, Leg::Vd);
        CHECK(apply_op(fam_add(a, b), op, 0) == fam_add(apply_op(a, op, 0), apply_op(b, op, 0)));
        CHECK(apply_op(apply_op(a, op, 0), op, 2) == apply_op(apply_op(a, op, 2), op, 0));
    }
}

TEST_CASE("substitution identity") {
    auto ctx = make_context(1, Rat(7, 10));
    Family d = atom(ctx, Sym::DP);
    Family w = otimes(d, atom(ctx, Sym::DBP));
    CHECK(substitute(w, 0, 1, d) == w);
    CHECK(substitute(w, 1, 1, atom(ctx, Sym::DBP)) == w);
}

TEST_CASE("bimodule normalization shapes") {
    auto ctx = make_context(1, Rat(7, 10));
    auto bs = build_braiding_set(ctx);

    // dp p (x) dbp: p crosses the marker, then crosses dbp
    Family f = otimes(mul(atom(ctx, Sym::DP), atom(ctx, Sym::P)), atom(ctx, Sym::DBP));
    Family nf = normalize_bimodule_form(ctx, bs, f);
    REQUIRE(nf.terms.size() == 1);
    const Word& w = nf.terms.begin()->first;
    CHECK(w.syms == std::vector<Sym>{Sym::DP, Sym::DBP, Sym::P});
    CHECK(w.marker_at(0));
    CHECK_FALSE(w.marker_at(1));

    // already normalized input is unchanged
    CHECK(normalize_bimodule_form(ctx, bs, nf) == nf);

    // all-left form puts the p in front
    Family lf = normalize_left(ctx, bs, f);
    REQUIRE(lf.terms.size() == 1);
    CHECK(lf.terms.begin()->first.syms == std::vector<Sym>{Sym::P, Sym::DP, Sym::DBP});
    CHECK(lf.terms.begin()->first.marker_at(1));
    CHECK_FALSE(lf.terms.begin()->first.marker_at(0));
}

TEST_CASE("classical normalization permutes indices") {
    auto ctx = make_context(2, Rat(1));
    auto bs = build_braiding_set(ctx);
    // classically p and dp commute: dp^{ij} p^{kl} -> p^{kl} dp^{ij}
    Family f = mul(atom(ctx, Sym::DP), atom(ctx, Sym::P));
    Family nf = normalize_left(ctx, bs, f);
    REQUIRE(nf.terms.size() == 1);
    const auto& [w, coeffs] = *nf.terms.begin();
    REQUIRE(w.syms == std::vector<Sym>{Sym::P, Sym::DP});
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j)
            for (int k = 0; k < ctx.n; ++k)
                for (int l = 0; l < ctx.n; ++l) {
                    // ext (i,j,k,l) labels dp^{ij} p^{kl}; word legs (p legs, dp legs)
                    uint64_t idx = pk({i, j, k, l, k, l, i, j});
                    REQUIRE(coeffs.count(idx) == 1);
                    CHECK(coeffs.at(idx) == 1);
                }
}

TEST_CASE("component slicing") {
    auto ctx = make_context(1, Rat(7, 10));
    Family d = atom(ctx, Sym::DP);
    Family c = component(d, pk({1, 0}));
    REQUIRE(c.ext.empty());
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms.begin()->second == Coeffs{{pk({1, 0}), Rat(1)}});
}

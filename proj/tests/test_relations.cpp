#include <catch2/catch_amalgamated.hpp>

#include "cpqr/span.hpp"

#include <random>

using namespace cpqr;

namespace {

uint64_t pk(std::initializer_list<int> vals) {
    uint64_t p = 0;
    int l = 0;
    for (int v : vals) p = idx_set(p, l++, v);
    return p;
}

struct Fixture {
    QContext ctx;
    BraidingSet bs;
    RelationSet rels;
    explicit Fixture(int r, Rat t)
        : ctx(make_context(r, t)), bs(build_braiding_set(ctx)), rels(build_core_relations(ctx, bs)) {}
    SpanEngine engine(SpanOptions opts = {}, WedgePairs wp = {}) const {
        return SpanEngine(ctx, bs, rels, std::move(wp), opts);
    }
};

}  // namespace

TEST_CASE("classical content of the defining relations") {
    Fixture fx(1, Rat(1));
    // A1 at t=1, component (i,j,k,l) = (0,1,1,0): reads p^{11}p^{00} - p^{01}p^{10}
    Family comp = component(fx.rels.A1, pk({0, 1, 1, 0}));
    REQUIRE(comp.terms.size() == 1);
    const auto& c = comp.terms.begin()->second;
    CHECK(c.at(pk({1, 1, 0, 0})) == 1);
    CHECK(c.at(pk({0, 1, 1, 0})) == -1);
    CHECK(c.size() == 2);

    // A3 at t=1: sum_i p^{ii} = 1
    Family a3 = fx.rels.A3;
    REQUIRE(a3.ext.empty());
    Word pword;
    pword.syms = {Sym::P};
    CHECK(a3.terms.at(pword).at(pk({0, 0})) == 1);
    CHECK(a3.terms.at(pword).at(pk({1, 1})) == 1);
    CHECK(a3.terms.at(Word{}).at(0) == -1);
}

TEST_CASE("projection relation is derivable") {
    for (Rat t : {Rat(1), Rat(7, 10), Rat(3, 5)}) {
        Fixture fx(1, t);
        Family pp = mul(atom(fx.ctx, Sym::P), atom(fx.ctx, Sym::P));
        Family cand = fam_sub(apply_op(pp, fx.bs.dual.E, 1), atom(fx.ctx, Sym::P));
        SpanOptions opts;
        opts.max_degree = 3;
        auto eng = fx.engine(opts);
        auto res = eng.is_zero(cand);
        INFO("t=" << t.get_str());
        CHECK(res.verdict == Verdict::Zero);
    }
}

TEST_CASE("tensor-square evaluation identities") {
    for (Rat t : {Rat(1), Rat(7, 10)}) {
        Fixture fx(1, t);
        const auto& ctx = fx.ctx;
        Family dd = otimes(atom(ctx, Sym::DP), atom(ctx, Sym::DP));
        Family bb = otimes(atom(ctx, Sym::DBP), atom(ctx, Sym::DBP));
        SpanOptions opts;
        opts.max_degree = 3;

        SECTION("E_23 contractions vanish at t=" + t.get_str()) {
            auto eng = fx.engine(opts);
            CHECK(eng.is_zero(apply_op(dd, fx.bs.dual.E, 1)).verdict == Verdict::Zero);
            CHECK(eng.is_zero(apply_op(bb, fx.bs.dual.E, 1)).verdict == Verdict::Zero);
        }
        SECTION("St / S eigen-identities hold at t=" + t.get_str()) {
            auto eng = fx.engine(opts);
            Family lhs1 = fam_sub(apply_op(dd, fx.bs.St, 1), fam_scale(dd, ctx.tp(-ctx.w.omega_sq())));
            Family lhs2 = fam_sub(apply_op(bb, fx.bs.S, 0), fam_scale(bb, ctx.tp(ctx.w.omega_sq())));
            CHECK(eng.is_zero(lhs1).verdict == Verdict::Zero);
            CHECK(eng.is_zero(lhs2).verdict == Verdict::Zero);
        }
    }
}

TEST_CASE("right-module relations reduce to zero") {
    for (Rat t : {Rat(1), Rat(7, 10)}) {
        Fixture fx(1, t);
        SpanOptions opts;
        opts.max_degree = 3;
        auto eng = fx.engine(opts);
        CHECK(eng.is_zero(fx.rels.R1).verdict == Verdict::Zero);
        CHECK(eng.is_zero(fx.rels.R2).verdict == Verdict::Zero);
        // marker move: x p (x) y = x (x) p y, already an array identity
        Family x = atom(fx.ctx, Sym::DP), y = atom(fx.ctx, Sym::DBP);
        Family lhs = otimes(mul(x, atom(fx.ctx, Sym::P)), y);
        Family rhs = otimes(x, mul(atom(fx.ctx, Sym::P), y));
        CHECK(normalize_left(fx.ctx, fx.bs, fam_sub(lhs, rhs)).is_zero());
    }
}

TEST_CASE("nonmembers stay inconclusive") {
    Fixture fx(1, Rat(7, 10));
    SpanOptions opts;
    opts.max_degree = 3;
    opts.auto_retry = false;
    auto eng = fx.engine(opts);
    CHECK(eng.is_zero(atom(fx.ctx, Sym::DP)).verdict == Verdict::Inconclusive);
    CHECK(eng.is_zero(atom(fx.ctx, Sym::P)).verdict == Verdict::Inconclusive);
}

TEST_CASE("normalization output is ideal-equivalent to its input") {
    std::mt19937 rng(77);
    for (Rat t : {Rat(1), Rat(7, 10)}) {
        Fixture fx(1, t);
        SpanOptions opts;
        opts.max_degree = 5;
        auto eng = fx.engine(opts);
        auto random_word_family = [&](int deg) {
            Family f = fam_zero(fx.ctx.n);
            Word w;
            bool has_form = false;
            for (int i = 0; i < deg; ++i) {
                Sym s = static_cast<Sym>(rng() % 3);
                if (i + 1 == deg && !has_form) s = Sym::DP;
                has_form |= is_form(s);
                w.syms.push_back(s);
            }
            for (int g = 0; g + 1 < deg; ++g)
                if (rng() % 2) w.markers |= 1u << g;
            w = merge_plain_segments(w);
            uint64_t idx = 0;
            for (int l = 0; l < 2 * deg; ++l) idx = idx_set(idx, l, rng() % fx.ctx.n);
            f.terms[w][idx] = Rat(1 + static_cast<int>(rng() % 3));
            return f;
        };
        for (int trial = 0; trial < 6; ++trial) {
            Family f = random_word_family(3);
            Family nf = normalize_bimodule_form(fx.ctx, fx.bs, f);
            auto res = eng.is_zero(fam_sub(nf, f));
            INFO("t=" << t.get_str() << " trial=" << trial << "\n" << fam_dump(f));
            CHECK(res.verdict == Verdict::Zero);
        }
    }
}

TEST_CASE("span members re-verify at an independent parameter") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 5; ++trial) {
        uint32_t seed = rng();
        auto build_member = [&](const Fixture& fx) {
            std::mt19937 r2(seed);
            const auto& ctx = fx.ctx;
            auto decorate = [&](const Family& rel) {
                Family out = rel;
                if (r2() % 2) out = mul(atom(ctx, Sym::P), out);
                if (r2() % 2) out = mul(out, atom(ctx, Sym::P));
                return out;
            };
            const Family* rels[] = {&fx.rels.A1, &fx.rels.A2, &fx.rels.C1, &fx.rels.EV2};
            Family a = decorate(*rels[r2() % 4]);
            Family b = decorate(*rels[r2() % 4]);
            Family ca = component(a, 0);
            Family cb = component(b, pk({1, 0, 1, 0, 1, 0, 1, 0}));
            return fam_add(ca, cb);
        };
        for (Rat t : {Rat(7, 10), Rat(3, 5)}) {
            Fixture fx(1, t);
            SpanOptions opts;
            opts.max_degree = 5;
            auto eng = fx.engine(opts);
            auto res = eng.is_zero(build_member(fx));
            INFO("trial=" << trial << " t=" << t.get_str());
            CHECK(res.verdict == Verdict::Zero);
        }
    }
}

TEST_CASE("membership is monotone in the degree bound") {
    Fixture fx(1, Rat(3, 5));
    Family pp = mul(atom(fx.ctx, Sym::P), atom(fx.ctx, Sym::P));
    Family cand = fam_sub(apply_op(pp, fx.bs.dual.E, 1), atom(fx.ctx, Sym::P));
    for (int d = 3; d <= 5; ++d) {
        SpanOptions opts;
        opts.max_degree = d;
        auto eng = fx.engine(opts);
        CHECK(eng.is_zero(cand).verdict == Verdict::Zero);
    }
}

TEST_CASE("rank-2 projection relation") {
    Fixture fx(2, Rat(7, 10));
    Family pp = mul(atom(fx.ctx, Sym::P), atom(fx.ctx, Sym::P));
    Family cand = fam_sub(apply_op(pp, fx.bs.dual.E, 1), atom(fx.ctx, Sym::P));
    SpanOptions opts;
    opts.max_degree = 3;
    auto eng = fx.engine(opts);
    CHECK(eng.is_zero(cand).verdict == Verdict::Zero);
}

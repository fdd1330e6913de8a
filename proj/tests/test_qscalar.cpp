#include <catch2/catch_amalgamated.hpp>

#include "cpqr/qscalar.hpp"

using namespace cpqr;

TEST_CASE("context construction") {
    auto c = make_context(1, Rat(1));
    CHECK(c.q == 1);
    CHECK(c.n == 2);

    c = make_context(1, Rat(7, 10));
    CHECK(c.q == Rat(49, 100));

    c = make_context(2, Rat(1, 2));
    CHECK(c.q == Rat(1, 8));

    CHECK_THROWS_AS(make_context(0, Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(make_context(1, Rat(0)), std::invalid_argument);
}

TEST_CASE("q-numbers") {
    auto classical = make_context(3, Rat(1));
    CHECK(qnum(classical, 5) == 5);
    CHECK(qnum(classical, 1) == 1);

    // q = 1/4 via r=1, t=1/2
    auto c = make_context(1, Rat(1, 2));
    REQUIRE(c.q == Rat(1, 4));
    CHECK(qnum(c, 2) == Rat(17, 4));  // q + q^{-1}
    CHECK(qnum(c, 1) == 1);

    // [2]_q = q + q^{-1} exactly, across ranks and parameters
    for (int r = 1; r <= 4; ++r)
        for (Rat t : {Rat(7, 10), Rat(3, 5), Rat(2, 3), Rat(5, 4), Rat(-1, 2)}) {
            auto ctx = make_context(r, t);
            CHECK(qnum(ctx, 2) == ctx.q + ctx.qp(-1));
            CHECK(qnum(ctx, 3) == ctx.qp(2) + 1 + ctx.qp(-2));
            // [x+1] [1] style recurrence: [x+1] = [2][x] - [x-1]
            for (long x = 1; x <= 5; ++x)
                CHECK(qnum(ctx, x + 1) == qnum(ctx, 2) * qnum(ctx, x) - qnum(ctx, x - 1));
        }
}

TEST_CASE("t powers") {
    auto c = make_context(1, Rat(7, 10));
    CHECK(qpow(c, 0) == 1);
    CHECK(qpow(c, c.n - 1) == Rat(7, 10));  // the q^{(lam_i,lam_i)} factor at r=1
    auto c2 = make_context(2, Rat(1, 2));
    CHECK(qpow(c2, c2.w.omega_2rho()) == Rat(1, 64));  // q^{(omega,2rho)} = t^{rn}
}

TEST_CASE("weight tables") {
    for (int r = 1; r <= 4; ++r) {
        auto c = make_context(r, Rat(3, 5));
        // symmetry of (lam_i, lam_j)
        for (int i = 1; i <= c.n; ++i)
            for (int j = 1; j <= c.n; ++j)
                CHECK(c.w.pairing_diag(i, j) == c.w.pairing_diag(j, i));
        // lowest-weight rho pairing is minus the highest one
        CHECK(c.w.rho_pairing(c.n) == -c.w.rho_pairing(1));
        // sum of q^{(lam_i,2rho)} equals [n]_q
        CHECK(qdim_weight_sum(c) == qnum(c, c.n));
        // quantum Weyl dimension product equals [r+1]_q
        CHECK(qdim_weyl_product(c) == qnum(c, r + 1));
        CHECK(c.w.casimir() == c.n * c.n - 1);
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7/10") == Rat(7, 10));
    CHECK(parse_rational("1") == 1);
    CHECK(parse_rational("-3/5") == Rat(-3, 5));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

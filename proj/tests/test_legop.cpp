#include <catch2/catch_amalgamated.hpp>

#include "cpqr/legop.hpp"

#include <random>

using namespace cpqr;

namespace {

LegOp random_op(int n, const Signature& sig, std::mt19937& rng) {
    LegOp o = op_zero(n, sig, sig);
    std::uniform_int_distribution<int> num(-3, 3);
    for_each_index(n, sig.size(), [&](uint64_t c) {
        for_each_index(n, sig.size(), [&](uint64_t r) {
            if (rng() % 3 == 0) {
                int v = num(rng);
                if (v) o.cols[c][r] = v;
            }
        });
    });
    o.prune();
    return o;
}

}  // namespace

TEST_CASE("index packing") {
    uint64_t i = 0;
    i = idx_set(i, 0, 3);
    i = idx_set(i, 5, 2);
    CHECK(idx_get(i, 0) == 3);
    CHECK(idx_get(i, 5) == 2);
    CHECK(idx_get(i, 3) == 0);
    i = idx_set(i, 0, 1);
    CHECK(idx_get(i, 0) == 1);

    int count = 0;
    for_each_index(3, 4, [&](uint64_t) { ++count; });
    CHECK(count == 81);
}

TEST_CASE("compose and identity") {
    std::mt19937 rng(42);
    for (int n : {2, 3}) {
        Signature sig{Leg::V, Leg::Vd};
        LegOp id = op_identity(n, sig);
        LegOp a = random_op(n, sig, rng);
        CHECK(op_compose(id, a) == a);
        CHECK(op_compose(a, id) == a);
        LegOp b = random_op(n, sig, rng);
        LegOp c = random_op(n, sig, rng);
        CHECK(op_compose(op_compose(a, b), c) == op_compose(a, op_compose(b, c)));
    }
}

TEST_CASE("embed acts as identity elsewhere") {
    int n = 2;
    std::mt19937 rng(7);
    LegOp a = random_op(n, {Leg::V}, rng);
    Signature amb{Leg::Vd, Leg::V, Leg::V};
    LegOp e1 = op_embed(a, amb, 1);
    LegOp e2 = op_embed(a, amb, 2);
    // disjoint embeddings commute
    CHECK(op_compose(e1, e2) == op_compose(e2, e1));
}

TEST_CASE("inverse roundtrip") {
    std::mt19937 rng(9);
    Signature sig{Leg::V, Leg::V};
    for (int n : {2, 3}) {
        // build a guaranteed invertible operator: identity plus strict upper triangle
        LegOp a = op_identity(n, sig);
        LegOp noise = random_op(n, sig, rng);
        for (auto& [c, col] : noise.cols)
            for (auto& [r, v] : col)
                if (r < c) a.cols[c][r] += v;
        a.prune();
        LegOp inv = op_invert(a);
        CHECK(op_compose(a, inv) == op_identity(n, sig));
        CHECK(op_compose(inv, a) == op_identity(n, sig));
    }
}

TEST_CASE("rank of projector-like map") {
    // flip on V (x) V: (flip - 1) has rank n(n-1)/2
    for (int n : {2, 3, 4}) {
        LegOp flip = op_zero(n, {Leg::V, Leg::V}, {Leg::V, Leg::V});
        for_each_index(n, 2, [&](uint64_t c) {
            uint64_t r = idx_set(idx_set(0, 0, idx_get(c, 1)), 1, idx_get(c, 0));
            flip.cols[c][r] = 1;
        });
        LegOp m = op_sub(flip, op_identity(n, {Leg::V, Leg::V}));
        CHECK(op_rank(m) == static_cast<uint64_t>(n * (n - 1) / 2));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alphapack/universal.hpp"

using namespace alphapack;

namespace {

UniversalFamily family_of(int n, int k, int p, double alpha,
                          std::vector<std::vector<int>> members) {
    UniversalFamily f;
    f.n = n; f.k = k; f.p = p; f.alpha = alpha;
    for (auto& m : members) f.members.push_back(Bitset::of(n, m));
    return f;
}

std::vector<std::vector<int>> as_sorted_sets(const std::vector<Bitset>& members) {
    std::vector<std::vector<int>> out;
    for (const auto& m : members) out.push_back(m.elements());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("verify_universal hand cases") {
    // all singletons capture any (x, y) pair
    auto singles = family_of(5, 2, 1, 1.0, {{0}, {1}, {2}, {3}, {4}});
    CHECK(verify_universal(singles).ok);

    // Y is forced empty, the full set works
    auto full = family_of(4, 4, 4, 1.0, {{0, 1, 2, 3}});
    CHECK(verify_universal(full).ok);

    // X={0}, Y={1}: {0,1} hits Y, {2,3} misses X
    auto bad = family_of(4, 2, 1, 1.0, {{0, 1}, {2, 3}});
    auto res = verify_universal(bad);
    CHECK(!res.ok);
    REQUIRE(res.counterexample.has_value());
    CHECK(res.counterexample->X == std::vector<int>{0});
    CHECK(res.counterexample->Y == std::vector<int>{1});
}

TEST_CASE("verify_universal threshold uses ceil(alpha p)") {
    // p=2, alpha=0.5 -> need |X cap F| >= 1
    auto f = family_of(4, 2, 2, 0.5, {{0}, {1}, {2}, {3}});
    CHECK(universal_threshold(2, 0.5) == 1);
    CHECK(universal_threshold(3, 0.5) == 2);   // ceil(1.5)
    CHECK(universal_threshold(3, 2.0 / 3.0) == 2);
    CHECK(universal_threshold(0, 1.0) == 0);
    CHECK(verify_universal(f).ok);
}

TEST_CASE("verify_universal budget guard") {
    UniversalFamily huge;
    huge.n = 60; huge.k = 30; huge.p = 15; huge.alpha = 1.0;
    CHECK_THROWS_AS(verify_universal(huge), BudgetError);
}

TEST_CASE("base_member_target matches the hand-evaluated formula") {
    // [4^4/(1*27)] / C(2,1) * 5 * ln 8 = 49.29... -> 50
    CHECK(base_member_target(8, 4, 2, 0.5) == 50);
    CHECK(base_member_target(1, 1, 1, 1.0) >= 1);
}

TEST_CASE("construct_base produces verified families") {
    UniversalFamily f = construct_base(6, 2, 2, 1.0, 0);
    CHECK(f.verified);
    CHECK(verify_universal(f).ok);

    UniversalFamily g = construct_base(8, 4, 2, 0.5, 0);
    CHECK(g.verified);
    CHECK((long long)g.members.size() <= base_member_target(8, 4, 2, 0.5));

    UniversalFamily tiny = construct_base(1, 1, 1, 1.0, 0);
    REQUIRE(tiny.members.size() == 1);
    CHECK(tiny.members[0].test(0));

    // p = 0 draws empty members only
    UniversalFamily zero = construct_base(5, 2, 0, 1.0, 0);
    CHECK(zero.verified);
    for (const auto& m : zero.members) CHECK(m.empty());
}

TEST_CASE("construct_base is deterministic in (params, seed)") {
    UniversalFamily a = construct_base(8, 3, 2, 1.0, 42);
    UniversalFamily b = construct_base(8, 3, 2, 1.0, 42);
    CHECK(as_sorted_sets(a.members) == as_sorted_sets(b.members));
}

TEST_CASE("perfect function families") {
    PerfectFunctionFamily idsize = build_perfect_family(3, 3, 0);
    CHECK(verify_perfect(idsize));

    PerfectFunctionFamily pairs = build_perfect_family(6, 2, 0);
    CHECK(verify_perfect(pairs));
    for (const auto& f : pairs.functions)
        for (int v : f) {
            CHECK(v >= 1);
            CHECK(v <= 4);
        }

    PerfectFunctionFamily single = build_perfect_family(1, 1, 0);
    CHECK(verify_perfect(single));
}

TEST_CASE("lift_by_hashing") {
    UniversalFamily inner = construct_base(4, 2, 1, 1.0, 0);

    SUBCASE("identity perfect family reproduces the inner members") {
        PerfectFunctionFamily ident;
        ident.n = 4; ident.k = 2;
        ident.functions = {{1, 2, 3, 4}};
        UniversalFamily lifted = lift_by_hashing(inner, ident, 4);
        CHECK(as_sorted_sets(lifted.members) == as_sorted_sets(inner.members));
    }

    SUBCASE("lift to a larger universe verifies") {
        PerfectFunctionFamily perf = build_perfect_family(8, 2, 1);
        REQUIRE(verify_perfect(perf));
        UniversalFamily lifted = lift_by_hashing(inner, perf, 8);
        CHECK(lifted.n == 8);
        CHECK(lifted.verified);  // verified == the exhaustive oracle passed
    }

    SUBCASE("parameter mismatch throws") {
        PerfectFunctionFamily perf = build_perfect_family(8, 3, 1);
        CHECK_THROWS_AS(lift_by_hashing(inner, perf, 8), std::invalid_argument);
    }

    SUBCASE("k = 0 lifts to the one-empty-member family") {
        UniversalFamily empty_inner;
        empty_inner.n = 0; empty_inner.k = 0; empty_inner.p = 0; empty_inner.alpha = 1.0;
        PerfectFunctionFamily perf = build_perfect_family(5, 0, 0);
        UniversalFamily lifted = lift_by_hashing(empty_inner, perf, 5);
        REQUIRE(lifted.members.size() == 1);
        CHECK(lifted.members[0].empty());
        CHECK(lifted.verified);
    }
}

TEST_CASE("compose_by_partition") {
    UniversalBuilder base_builder = [](int n, int k, int p, double alpha) {
        return construct_base(n, k, p, alpha, 7 + p);
    };

    SUBCASE("single block composition equals the builder family") {
        // k = 4 gives s = 4, t = 1
        UniversalFamily direct = base_builder(6, 4, 2, 1.0);
        UniversalFamily composed = compose_by_partition(base_builder, 6, 4, 2, 1.0);
        CHECK(partition_width(4) == 4);
        CHECK(as_sorted_sets(composed.members) == as_sorted_sets(direct.members));
        CHECK(composed.verified);
    }

    SUBCASE("two-block composition verifies") {
        UniversalFamily composed = compose_by_partition(base_builder, 6, 4, 2, 1.0, 2);
        CHECK(composed.verified);
        UniversalFamily res = composed;
        CHECK(verify_universal(res).ok);
    }

    SUBCASE("p = 0 composes to the empty-member family") {
        UniversalFamily composed = compose_by_partition(base_builder, 5, 2, 0, 1.0);
        REQUIRE(composed.members.size() == 1);
        CHECK(composed.members[0].empty());
    }
}

TEST_CASE("partition width formula") {
    CHECK(partition_width(1) == 1);
    CHECK(partition_width(2) == 1);   // floor(1) = 1
    CHECK(partition_width(3) == 2);   // floor(log2(3)^2) = 2
    CHECK(partition_width(4) == 4);
    CHECK(partition_width(5) == 5);   // clamped to k
    CHECK(partition_width(16) == 16);
}

TEST_CASE("build_universal strategies verify at desk scale") {
    for (UniversalStrategy st : {UniversalStrategy::Base, UniversalStrategy::HashLift,
                                 UniversalStrategy::Partition, UniversalStrategy::Pipeline}) {
        UniversalFamily f = build_universal(8, 3, 2, 1.0, st, 3);
        CHECK(f.verified);
    }
    // alpha = 1 is the classical lopsided case (Def 2.1 written as Def 4)
    UniversalFamily classical = build_universal(7, 3, 1, 1.0, UniversalStrategy::Pipeline, 0);
    CHECK(classical.verified);
    // a fractional-accuracy pipeline build at the largest unit-test scale
    UniversalFamily f = build_universal(12, 6, 2, 0.5, UniversalStrategy::Pipeline, 0);
    CHECK(f.verified);
}

TEST_CASE("build_universal determinism") {
    UniversalFamily a = build_universal(9, 4, 2, 0.5, UniversalStrategy::Pipeline, 11);
    UniversalFamily b = build_universal(9, 4, 2, 0.5, UniversalStrategy::Pipeline, 11);
    CHECK(as_sorted_sets(a.members) == as_sorted_sets(b.members));
}

TEST_CASE("alpha monotonicity and superset monotonicity") {
    UniversalFamily f = construct_base(8, 4, 3, 1.0, 5);
    REQUIRE(f.verified);
    UniversalFamily relaxed = f;
    relaxed.alpha = 0.5;
    CHECK(verify_universal(relaxed).ok);
    relaxed.alpha = 2.0 / 3.0;
    CHECK(verify_universal(relaxed).ok);

    // adding members never breaks verification
    UniversalFamily bigger = f;
    Rng rng(99);
    for (int i = 0; i < 5; i++) {
        Bitset extra(8);
        for (int e = 0; e < 8; e++)
            if (rng.bernoulli(0.5)) extra.set(e);
        bigger.members.push_back(extra);
    }
    CHECK(verify_universal(bigger).ok);
}

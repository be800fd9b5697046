#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "alphapack/oracles.hpp"
#include "alphapack/rep_sets.hpp"

using namespace alphapack;

namespace {

// Literal Def-2.2 oracle, independent of the library's hitting-set search:
// enumerate every Y subseteq E'\X with |Y| <= q and demand a disjoint member.
bool oracle_represents(const std::vector<Bitset>& members,
                       const std::vector<Bitset>& family, const Bitset& e_prime,
                       int q) {
    for (const Bitset& x : family) {
        std::vector<int> pool;
        for (int e : e_prime.elements())
            if (!x.test(e)) pool.push_back(e);
        for (int ysz = 0; ysz <= q && ysz <= (int)pool.size(); ysz++) {
            bool all_ok = for_each_combination(pool, ysz, [&](const std::vector<int>& ys) {
                Bitset y = Bitset::of(e_prime.nbits, ys);
                for (const Bitset& m : members)
                    if (!m.intersects(y)) return true;
                return false;
            });
            if (!all_ok) return false;
        }
    }
    return true;
}

// All unions of `m` pairwise disjoint sets with minima <= pivot, enumerated
// independently of the DP.
std::vector<Bitset> enumerate_admissible_unions(const std::vector<ThreeSet>& sets,
                                                int n, int m, int pivot) {
    std::vector<Bitset> out;
    std::vector<int> idx;
    std::function<void(size_t, Bitset)> dfs = [&](size_t from, Bitset cur) {
        if ((int)idx.size() == m) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < sets.size(); i++) {
            const ThreeSet& s = sets[i];
            if (s[0] > pivot) continue;
            if (cur.test(s[0]) || cur.test(s[1]) || cur.test(s[2])) continue;
            Bitset nx = cur;
            for (int e : s) nx.set(e);
            idx.push_back((int)i);
            dfs(i + 1, nx);
            idx.pop_back();
        }
    };
    dfs(0, Bitset(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Bitset above(int n, int v) {
    Bitset b(n);
    for (int e = v + 1; e < n; e++) b.set(e);
    return b;
}

}  // namespace

TEST_CASE("compute_representative on the four singletons") {
    int n = 4;
    std::vector<Bitset> S = {Bitset::of(n, {0}), Bitset::of(n, {1}), Bitset::of(n, {2}),
                             Bitset::of(n, {3})};
    Bitset eprime = Bitset::of(n, {0, 1, 2, 3});
    RepFamily rep = compute_representative(S, eprime, 1);
    // greedy input order drops {0} and {1}, then must keep the last two
    CHECK(rep.chosen == std::vector<int>{2, 3});
    std::vector<Bitset> kept;
    for (int i : rep.chosen) kept.push_back(S[i]);
    CHECK(oracle_represents(kept, S, eprime, 1));
    // no single-member subfamily works
    for (const Bitset& only : S)
        CHECK(!oracle_represents({only}, S, eprime, 1));
}

TEST_CASE("compute_representative trivial slacks") {
    int n = 6;
    std::vector<Bitset> S = {Bitset::of(n, {0, 1}), Bitset::of(n, {2, 3}),
                             Bitset::of(n, {4, 5})};
    Bitset eprime = Bitset::of(n, {0, 1, 2, 3, 4, 5});
    // q = 0: a single member suffices; greedy keeps the last
    RepFamily rep = compute_representative(S, eprime, 0);
    CHECK(rep.chosen == std::vector<int>{2});

    RepFamily none = compute_representative({}, eprime, 2);
    CHECK(none.chosen.empty());
}

TEST_CASE("compute_representative output always passes the oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 40; trial++) {
        int n = 6 + (int)rng.below(5);
        int p = 2 + (int)rng.below(2);
        int cnt = 4 + (int)rng.below(8);
        std::vector<Bitset> S;
        for (int i = 0; i < cnt; i++) {
            Bitset s(n);
            while (s.count() < p) s.set((int)rng.below(n));
            S.push_back(s);
        }
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        Bitset eprime(n);
        for (int e = 0; e < n; e++)
            if (rng.bernoulli(0.7)) eprime.set(e);
        int q = (int)rng.below(4);
        RepFamily rep = compute_representative(S, eprime, q);
        std::vector<Bitset> kept;
        for (int i : rep.chosen) kept.push_back(S[i]);
        CHECK(oracle_represents(kept, S, eprime, q));
    }
}

TEST_CASE("representation_holds agrees with the literal oracle") {
    Rng rng(23);
    for (int trial = 0; trial < 60; trial++) {
        int n = 5 + (int)rng.below(5);
        std::vector<Bitset> family, members;
        int fcnt = 2 + (int)rng.below(6);
        for (int i = 0; i < fcnt; i++) {
            Bitset s(n);
            int sz = 2 + (int)rng.below(3);
            while (s.count() < sz) s.set((int)rng.below(n));
            family.push_back(s);
        }
        int keep = 1 + (int)rng.below(fcnt);
        members.assign(family.begin(), family.begin() + keep);
        Bitset eprime(n);
        for (int e = 0; e < n; e++)
            if (rng.bernoulli(0.6)) eprime.set(e);
        int q = (int)rng.below(3);
        auto fast = representation_holds(members, family, eprime, q);
        REQUIRE(fast.has_value());
        CHECK(*fast == oracle_represents(members, family, eprime, q));
    }
}

TEST_CASE("param_pack spec cases") {
    SUBCASE("beta_star = 0 gives the empty packing") {
        ThreeSetFamily fam{6, {make_three_set(0, 1, 2)}};
        PackingCollection coll = param_pack(fam, 2, 0.0, 1.0, 3);
        REQUIRE(coll.packings.size() == 1);
        CHECK(coll.packings[0].chosen.empty());
        CHECK(coll.m == 0);
    }
    SUBCASE("single candidate survives") {
        ThreeSetFamily fam{3, {make_three_set(0, 1, 2)}};
        PackingCollection coll = param_pack(fam, 1, 1.0, 1.0, 0);
        REQUIRE(coll.packings.size() == 1);
        CHECK(coll.packings[0].chosen == std::vector<int>{0});
    }
    SUBCASE("invalid pivot") {
        ThreeSetFamily fam{3, {make_three_set(0, 1, 2)}};
        CHECK_THROWS_AS(param_pack(fam, 1, 1.0, 1.0, 7), std::invalid_argument);
    }
}

TEST_CASE("param_pack representation property (oracle)") {
    for (uint64_t seed = 0; seed < 6; seed++) {
        ThreeSetFamily fam = plant_3set(2, 6, seed);  // |E| = 8, small families
        int k = 2;
        double beta_star = 0.5;
        int m = round_half_down(beta_star * k);  // 1
        int q = 3 * (k - m);
        for (int v = 0; v < fam.n; v++) {
            PackingCollection coll = param_pack(fam, k, beta_star, 2.0, v);
            std::vector<Bitset> family_a =
                enumerate_admissible_unions(fam.sets, fam.n, m, v);
            Bitset eprime = above(fam.n, v);
            // subfamily invariant: members are admissible disjoint unions
            for (size_t i = 0; i < coll.packings.size(); i++) {
                Bitset u(fam.n);
                int cnt = 0;
                for (int idx : coll.packings[i].chosen) {
                    for (int e : fam.sets[idx]) {
                        CHECK(!u.test(e));
                        u.set(e);
                        cnt++;
                    }
                    CHECK(fam.sets[idx][0] <= v);
                }
                CHECK(cnt == 3 * m);
                CHECK(u == coll.unions[i]);
            }
            if (family_a.empty()) {
                CHECK(coll.packings.empty());
                continue;
            }
            CHECK(oracle_represents(coll.unions, family_a, eprime, q));
        }
    }
}

TEST_CASE("param_match spec cases") {
    TripartiteFamily fam;
    fam.n1 = fam.n2 = fam.n3 = 1;
    fam.sets = {make_three_set(0, 1, 2)};
    PackingCollection empty = param_match(fam, 1, 0.0, 1.0, 0);
    REQUIRE(empty.packings.size() == 1);
    CHECK(empty.packings[0].chosen.empty());

    PackingCollection full = param_match(fam, 1, 1.0, 1.0, 0);
    REQUIRE(full.packings.size() == 1);
    CHECK(full.packings[0].chosen == std::vector<int>{0});
}

TEST_CASE("param_match representation property (oracle)") {
    for (uint64_t seed = 0; seed < 6; seed++) {
        TripartiteFamily fam = plant_3dm(2, 5, seed);
        int k = 2;
        double beta_star = 0.5;
        int m = round_half_down(beta_star * k);  // 1
        int q = 2 * (k - m);
        Bitset eprime(fam.n());
        for (int e = fam.n1; e < fam.n(); e++) eprime.set(e);
        for (int v = 0; v < fam.n1; v++) {
            PackingCollection coll = param_match(fam, k, beta_star, 2.0, v);
            std::vector<Bitset> family_a =
                enumerate_admissible_unions(fam.sets, fam.n(), m, v);
            if (family_a.empty()) {
                CHECK(coll.packings.empty());
                continue;
            }
            CHECK(oracle_represents(coll.unions, family_a, eprime, q));
        }
        CHECK_THROWS_AS(param_match(fam, k, beta_star, 2.0, fam.n1),
                        std::invalid_argument);
    }
}

TEST_CASE("below-pivot collisions do not lose completeness") {
    // A and B share their high elements, B and C share element 1. The only
    // admissible 2-packing at pivot 1 is {A, C}; a DP that eliminates level-1
    // families only against {u > pivot} can drop A for B and then dead-end,
    // because B collides with C below the pivot. The element-indexed DP must
    // still deliver a packing whose union avoids everything above the pivot.
    ThreeSetFamily fam{14, {make_three_set(0, 10, 11), make_three_set(1, 10, 11),
                            make_three_set(1, 12, 13)}};
    PackingCollection coll = param_pack(fam, 2, 1.0, 1.0, 1);
    REQUIRE(coll.packings.size() >= 1);
    bool has_ac = false;
    for (const auto& p : coll.packings)
        if (p.chosen == std::vector<int>{0, 2}) has_ac = true;
    CHECK(has_ac);
}

TEST_CASE("forced domination pruning preserves representation") {
    // prune_threshold 0 makes every level pass through the domination filter,
    // so the pruned families must still satisfy the oracle at every pivot.
    for (uint64_t seed = 0; seed < 10; seed++) {
        ThreeSetFamily fam = plant_3set(2, 7, seed);
        int k = 2, m = 1;
        for (int v = 0; v < fam.n; v++) {
            detail::DpOptions opt;
            opt.k = k;
            opt.levels = m;
            opt.slack_per_level = 3;
            opt.mode = detail::DpMode::ShrinkAbove;
            opt.n = fam.n;
            opt.pivot = v;
            opt.prune_threshold = 0;
            auto result = detail::rep_dp(fam.sets, opt);
            std::vector<Bitset> unions;
            for (auto& wu : result) unions.push_back(wu.elems);
            std::vector<Bitset> family_a =
                enumerate_admissible_unions(fam.sets, fam.n, m, v);
            if (family_a.empty()) {
                CHECK(unions.empty());
                continue;
            }
            CHECK(oracle_represents(unions, family_a, above(fam.n, v), 3 * (k - m)));
        }
    }
    // same at two levels on a denser instance
    for (uint64_t seed = 20; seed < 24; seed++) {
        ThreeSetFamily fam = plant_3set(3, 8, seed);
        int k = 3, m = 2;
        int v = fam.n - 1;
        detail::DpOptions opt;
        opt.k = k;
        opt.levels = m;
        opt.slack_per_level = 3;
        opt.mode = detail::DpMode::ShrinkAbove;
        opt.n = fam.n;
        opt.pivot = v;
        opt.prune_threshold = 0;
        auto result = detail::rep_dp(fam.sets, opt);
        std::vector<Bitset> unions;
        for (auto& wu : result) unions.push_back(wu.elems);
        std::vector<Bitset> family_a = enumerate_admissible_unions(fam.sets, fam.n, m, v);
        REQUIRE(!family_a.empty());
        CHECK(oracle_represents(unions, family_a, above(fam.n, v), 3 * (k - m)));
    }
}

TEST_CASE("element-loop determinism end to end") {
    ThreeSetFamily fam = plant_3set(3, 9, 41);
    PackingCollection a = param_pack(fam, 3, 2.0 / 3.0, 1.5, fam.n - 1);
    PackingCollection b = param_pack(fam, 3, 2.0 / 3.0, 1.5, fam.n - 1);
    REQUIRE(a.packings.size() == b.packings.size());
    for (size_t i = 0; i < a.packings.size(); i++)
        CHECK(a.packings[i].chosen == b.packings[i].chosen);
}

TEST_CASE("completeness transfer on planted instances") {
    // A full planted packing splits at its m-th smallest minimum; the pooled
    // collections must contain a partial packing disjoint from the remainder.
    for (uint64_t seed = 0; seed < 8; seed++) {
        PlantMeta meta;
        ThreeSetFamily fam = plant_3set(3, 6, seed, &meta);
        int k = 3;
        for (int m = 1; m <= k; m++) {
            std::vector<ThreeSet> planted = meta.sets;
            std::sort(planted.begin(), planted.end());
            // prefix = m sets with smallest minima, remainder entirely above v
            int v = m < k ? planted[m][0] - 1 : fam.n - 1;
            REQUIRE(v >= 0);
            Bitset remainder(fam.n);
            for (int i = m; i < k; i++)
                for (int e : planted[i]) remainder.set(e);
            double beta_star = (double)m / k;
            PackingCollection coll =
                param_pack(fam, k, beta_star + 1e-12, 1.0, v);
            bool found = false;
            for (const Bitset& u : coll.unions)
                if (!u.intersects(remainder)) found = true;
            CHECK(found);
        }
    }
}

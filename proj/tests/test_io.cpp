#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alphapack/io.hpp"

using namespace alphapack;
using nlohmann::json;

TEST_CASE("instance round-trips: 3sp") {
    PlantMeta meta;
    LoadedInstance li;
    li.kind = "3sp";
    li.seed = 42;
    li.instance = plant_3set(3, 7, 42, &meta);
    li.planted = meta;
    json j = instance_to_json(li);
    LoadedInstance back = instance_from_json(j);
    CHECK(instance_to_json(back) == j);
    auto& f1 = std::get<ThreeSetFamily>(li.instance);
    auto& f2 = std::get<ThreeSetFamily>(back.instance);
    CHECK(f1.n == f2.n);
    CHECK(f1.sets == f2.sets);
    CHECK(back.planted->k == 3);
}

TEST_CASE("instance round-trips: p2 and 3dm") {
    for (uint64_t seed = 0; seed < 5; seed++) {
        PlantMeta meta;
        LoadedInstance li;
        li.kind = "p2";
        li.seed = seed;
        li.instance = plant_p2(2, 5, seed, &meta);
        li.planted = meta;
        json j = instance_to_json(li);
        CHECK(instance_to_json(instance_from_json(j)) == j);

        LoadedInstance lm;
        lm.kind = "3dm";
        lm.seed = seed;
        lm.instance = plant_3dm(2, 4, seed, &meta);
        lm.planted = meta;
        json jm = instance_to_json(lm);
        CHECK(instance_to_json(instance_from_json(jm)) == jm);
    }
}

TEST_CASE("solutions and outcomes") {
    P2Packing p{{P2Path{0, 1, 2}, P2Path{3, 4, 5}}};
    json jp = solution_to_json(p);
    P2Packing rp = p2_solution_from_json(jp);
    REQUIRE(rp.size() == 2);
    CHECK(rp.paths[1].mid == 4);

    SetPacking s{{0, 2, 5}};
    CHECK(set_solution_from_json(solution_to_json(s)).chosen == s.chosen);

    SolveOutcome out;
    out.packing = s;
    out.target = 3;
    out.met = true;
    out.procedure = "setpack1";
    out.k = 3;
    out.alpha = 1.0;
    json jo = outcome_to_json(out);
    CHECK(jo["met"] == true);
    CHECK(jo["size"] == 3);
    CHECK(jo["solution"]["sets"] == json::array({0, 2, 5}));
}

TEST_CASE("universal family round-trip") {
    UniversalFamily fam = construct_base(6, 2, 1, 1.0, 0);
    json j = universal_to_json(fam);
    UniversalFamily back = universal_from_json(j);
    CHECK(back.n == fam.n);
    CHECK(back.k == fam.k);
    CHECK(back.p == fam.p);
    CHECK(back.verified == fam.verified);
    REQUIRE(back.members.size() == fam.members.size());
    for (size_t i = 0; i < fam.members.size(); i++)
        CHECK(back.members[i] == fam.members[i]);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS(instance_from_json(json{{"kind", "unknown"}}));
    CHECK_THROWS(instance_from_json(json{{"kind", "3sp"}}));  // missing n
    json bad = {{"kind", "3sp"}, {"n", 5}, {"sets", {{0, 1}}}};
    CHECK_THROWS(instance_from_json(bad));
}

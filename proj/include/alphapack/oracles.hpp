#pragma once
#include "alphapack/core.hpp"

namespace alphapack {

// Brute-force ground truth. Exact backtracking, sets ordered by minimum
// element for deterministic witnesses. Guarded by budget().brute_* limits.

struct BruteResult {
    int opt = 0;
    SetPacking witness;  // indices, for set families
};

struct BruteP2Result {
    int opt = 0;
    P2Packing witness;
};

BruteResult brute_opt_3set(const ThreeSetFamily& family);
BruteResult brute_opt_3dm(const TripartiteFamily& family);
BruteP2Result brute_opt_p2(const Graph& g);

// Disjointness + membership; for P2 also adjacency and middle correctness.
bool verify_solution(const ThreeSetFamily& family, const SetPacking& packing);
bool verify_solution(const TripartiteFamily& family, const SetPacking& packing);
bool verify_solution(const Graph& g, const P2Packing& packing);

// Planted instances: k disjoint sets/paths/triples on fresh elements plus
// `noise` random extra sets/edges. OPT >= k by construction.
struct PlantMeta {
    int k = 0;
    std::vector<ThreeSet> sets;            // for 3sp / 3dm
    std::vector<std::array<int, 3>> paths; // for p2, (end, mid, end)
};

ThreeSetFamily plant_3set(int k, int noise, uint64_t seed, PlantMeta* meta = nullptr);
TripartiteFamily plant_3dm(int k, int noise, uint64_t seed, PlantMeta* meta = nullptr);
Graph plant_p2(int k, int noise, uint64_t seed, PlantMeta* meta = nullptr);

}  // namespace alphapack

#pragma once
#include "alphapack/core.hpp"

namespace alphapack {

// Bounded-swap local search for maximum 3-set packing. The output is maximal
// and s-swap-optimal: no removal of <= s chosen sets admits an insertion of
// >= removed+1 pairwise disjoint sets from the family. Deterministic; swaps
// are searched with the removal size ascending, so the improvement trace for
// swap size s is a prefix of the trace for s+1.
SetPacking local_search_pack(int n, const std::vector<ThreeSet>& sets, int swap_size = 3);

inline SetPacking local_search_pack(const ThreeSetFamily& f, int swap_size = 3) {
    return local_search_pack(f.n, f.sets, swap_size);
}
inline SetPacking local_search_pack(const TripartiteFamily& f, int swap_size = 3) {
    return local_search_pack(f.n(), f.sets, swap_size);
}

}  // namespace alphapack

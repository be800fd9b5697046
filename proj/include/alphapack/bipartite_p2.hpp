#pragma once
#include "alphapack/core.hpp"

namespace alphapack {

// L = 0..nl-1 and R = 0..nr-1 in their own index spaces; edges cross only.
struct BipartiteGraph {
    int nl = 0, nr = 0;
    std::vector<std::pair<int, int>> edges;  // (l, r)
};

// Maximum matching in a general graph (blossom augmenting search).
// Deterministic scan order; returns mate array with -1 for unmatched.
struct GeneralMatching {
    int size = 0;
    std::vector<int> mate;
};
GeneralMatching max_matching(int n, const std::vector<std::pair<int, int>>& edges);

// Maximum P2-packing among packings whose middles lie in L. Internal-edge
// gadget + general matching; a maximum matching of the gadget has size
// |L| + OPT and the middles are the L-nodes with both copies matched
// externally. Paths come back as (r, l, r) with L/R local indices.
struct CenterLeftPacking {
    std::vector<std::array<int, 3>> paths;  // (end1, mid, end2), mid in L space
    int size() const { return (int)paths.size(); }
};
CenterLeftPacking max_center_left_p2(const BipartiteGraph& b);

}  // namespace alphapack

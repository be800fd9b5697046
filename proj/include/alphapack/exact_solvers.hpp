#pragma once
#include <optional>

#include "alphapack/core.hpp"

namespace alphapack {

// Exact parameterized solvers with the black-box contract "return a packing
// of exactly k disjoint sets iff one exists". Representative-set DP; desk
// budgets (k, |E|) are guarded by budget().exact_*.

std::optional<SetPacking> exact_3set_pack(const ThreeSetFamily& family, int k);
std::optional<SetPacking> exact_3d_match(const TripartiteFamily& family, int k);

// Randomized variants: seeded coloring trials with one-sided error. Sets are
// kept when colorful and block-aligned; a solution is assembled per block
// (3-set packing) or via a block/E1 matching (3DM). trials = 0 picks the
// default plan below.
std::optional<SetPacking> rand_3set_pack(const ThreeSetFamily& family, int k,
                                         uint64_t seed, long long trials = 0);
std::optional<SetPacking> rand_3d_match(const TripartiteFamily& family, int k,
                                        uint64_t seed, long long trials = 0);

// Default-trial plan: trials aim at (1-p)^trials ~ e^-8 for the per-trial
// block-alignment success p. When the implied work exceeds the rand budget
// the solver falls back to the exact DP (still one-sided, still seeded).
struct RandPlan {
    long long trials = 0;
    double per_trial_success = 0.0;
    bool exact_fallback = false;
};
RandPlan rand_plan_3set(int k, int n, size_t family_size);
RandPlan rand_plan_3dm(int k, int n, size_t family_size);

}  // namespace alphapack

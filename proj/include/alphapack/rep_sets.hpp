#pragma once
#include <optional>

#include "alphapack/core.hpp"

namespace alphapack {

// Representative families over uniform matroids: a subfamily S_hat of S
// q-represents S with respect to E' if for every X in S and every
// Y subseteq E'\X with |Y| <= q, some member of S_hat is disjoint from Y.

struct RepFamily {
    std::vector<Bitset> base;  // the input family
    Bitset sub_universe;       // E'
    int slack = 0;             // q
    std::vector<int> chosen;   // kept indices, in input order
};

// Greedy elimination in input order: drop a set when the remaining family
// still represents the full input. The representation check is exact; an
// over-cap check keeps the set (never unsound). Throws BudgetError when the
// family itself is too large to process.
RepFamily compute_representative(const std::vector<Bitset>& S, const Bitset& e_prime,
                                 int q);

// Exact Def-2.2 style check used by compute_representative and the DP below:
// do the members (restricted to E') represent every X-trace? Returns
// nullopt when the branch cap was exhausted before an answer was found.
std::optional<bool> representation_holds(const std::vector<Bitset>& members,
                                         const std::vector<Bitset>& family,
                                         const Bitset& e_prime, int q);

// A collection of equal-size packings together with their element unions.
struct PackingCollection {
    int m = 0;
    std::vector<SetPacking> packings;
    std::vector<Bitset> unions;  // parallel to packings
};

// Partial execution of the representative-sets packing DP at pivot v:
// computes a collection A_hat of m = round_half_down(beta_star * k) disjoint
// admissible sets (minima <= v) whose unions 3(k-m)-represent, with respect
// to {u > v}, the family of all such unions. Back-pointers give one witness
// packing per surviving union. c is recorded for cost prediction only.
PackingCollection param_pack(const ThreeSetFamily& S, int k, double beta_star,
                             double c, int pivot_v);

// 3D-matching variant: representation with respect to E2 u E3 at slack
// 2(k-m); the pivot ranges over E1.
PackingCollection param_match(const TripartiteFamily& S, int k, double beta_star,
                              double c, int pivot_v);

namespace detail {

struct WitnessedUnion {
    Bitset elems;
    std::vector<int> sets;  // indices into the input family
};

// Level-by-level DP over i = 1..levels maintaining, per level, a family of
// unions of i disjoint sets that slack_per_level*(k-i)-represents all such
// unions. Three sub-universe modes:
//   FullUniverse: E' = E, plain level DP (exact solvers).
//   ShrinkAbove:  sets processed by increasing minimum e, families kept
//                 representative w.r.t. {u > e}; admissible minima <= pivot.
//   Fixed23:      tripartite; E' = E2 u E3, minima increase within E1.
enum class DpMode { FullUniverse, ShrinkAbove, Fixed23 };

struct DpOptions {
    int k = 0;
    int levels = 0;
    int slack_per_level = 3;
    DpMode mode = DpMode::FullUniverse;
    int n = 0;
    Bitset fixed_eprime;  // Fixed23 only
    int pivot = -1;       // -1: all sets admissible
    size_t prune_threshold = 64;  // families below this skip domination pruning
};

std::vector<WitnessedUnion> rep_dp(const std::vector<ThreeSet>& sets,
                                   const DpOptions& opt);

}  // namespace detail

}  // namespace alphapack

#pragma once
#include <functional>
#include <optional>

#include "alphapack/core.hpp"

namespace alphapack {

// (n,k,p,alpha)-universal sets: families F of subsets of 0..n-1 such that for
// every X of size p and Y subseteq E\X of size k-p some member F has
// |X cap F| >= alpha*p and Y cap F = empty. alpha = 1 gives the classical
// lopsided universal set.

enum class Provenance { BaseRandom, HashLift, PartitionCompose };

const char* provenance_name(Provenance p);

struct UniversalFamily {
    int n = 0, k = 0, p = 0;
    double alpha = 1.0;
    std::vector<Bitset> members;
    Provenance provenance = Provenance::BaseRandom;
    bool verified = false;
    uint64_t seed = 0;
};

// Integer capture threshold: ceil(alpha*p) with epsilon guard, matching
// required_size rounding.
inline int universal_threshold(int p, double alpha) {
    return (int)std::ceil(alpha * (double)p - 1e-9);
}

struct UniversalCounterexample {
    std::vector<int> X, Y;
};

struct VerifyUniversalResult {
    bool ok = false;
    std::optional<UniversalCounterexample> counterexample;  // lexicographically first
};

// Exhaustive check of the universal-set condition. Throws BudgetError when
// C(n,p)*C(n-p,k-p) exceeds the configured pair budget.
VerifyUniversalResult verify_universal(const UniversalFamily& family);

// Number of (X, Y) pairs the exhaustive check enumerates.
double verify_pair_count(int n, int k, int p);

// Member-count target from the randomized construction: t =
// [k^k / ((ap)^(ap) (k-ap)^(k-ap))] / C(p, ap) * (k+1) * ln n, evaluated at
// real ap = alpha*p via lgamma, 0^0 = 1, rounded up and clamped to >= 1.
long long base_member_target(int n, int k, int p, double alpha);

// Seeded randomized construction, exhaustively verified; re-draws with seeds
// seed, seed+1, ... up to the retry cap. Requires the verification to be
// within budget.
UniversalFamily construct_base(int n, int k, int p, double alpha, uint64_t seed);

// Functions 0..n-1 -> 1..k^2 such that every k-subset has an injective one.
struct PerfectFunctionFamily {
    int n = 0, k = 0;
    std::vector<std::vector<int>> functions;  // values in 1..k^2
};

PerfectFunctionFamily build_perfect_family(int n, int k, uint64_t seed);
bool verify_perfect(const PerfectFunctionFamily& fam);

// Preimage lift: union over f of f^{-1}(member) for every inner member.
// inner must live on the universe k^2 with k = perfect.k; output is an
// (n,k,p,alpha) family over perfect.n elements.
UniversalFamily lift_by_hashing(const UniversalFamily& inner,
                                const PerfectFunctionFamily& perfect, int n);

using UniversalBuilder =
    std::function<UniversalFamily(int n, int k, int p, double alpha)>;

// Consecutive-partition composition: with s = floor(log2(k)^2) clamped to
// [1, k] and t = ceil(k/s), unions of blockwise-restricted members over all
// consecutive t-part partitions and all tuples (p_1..p_t), sum p_i = p,
// 0 <= p_i <= s. s_override forces a width (tests exercise t > 1 that way).
UniversalFamily compose_by_partition(const UniversalBuilder& builder, int n, int k,
                                     int p, double alpha, int s_override = 0);

int partition_width(int k);  // the clamped s

enum class UniversalStrategy { Base, HashLift, Partition, Pipeline };

// Strategy dispatcher. Pipeline chains base -> hash-lift -> partition ->
// hash-lift. Outputs are verified when the verify budget allows, else carry
// verified = false.
UniversalFamily build_universal(int n, int k, int p, double alpha,
                                UniversalStrategy strategy, uint64_t seed);

}  // namespace alphapack

#pragma once
#include <variant>

#include "alphapack/core.hpp"
#include "alphapack/tradeoff_calc.hpp"
#include "alphapack/universal.hpp"

namespace alphapack {

struct SolveConfig {
    double alpha = 1.0;
    double epsilon = 0.0;
    double c = 0.0;       // 0 = pick the optimizing c for predictions
    uint64_t seed = 0;
    int swap_size = 3;
    long long trials = 0;  // 0 = solver default plan
    UniversalStrategy strategy = UniversalStrategy::Base;  // pack1's universal set
};

struct SolveOutcome {
    std::variant<P2Packing, SetPacking> packing;
    int target = 0;    // required_size(k, alpha)
    bool met = false;  // |packing| >= target
    std::string procedure;
    double predicted_base = 0.0;
    double elapsed_ms = 0.0;
    int k = 0;
    double alpha = 1.0;

    int size() const {
        if (auto* p = std::get_if<P2Packing>(&packing)) return p->size();
        return std::get<SetPacking>(packing).size();
    }
};

// Universal-set driven procedure: one bipartite middle-in-L subproblem per
// member of a (|V|, 3k, k, alpha)-universal set.
SolveOutcome pack1(const Graph& g, int k, const SolveConfig& cfg);

// Partial-execution + local-search completion (also serves 3-set packing).
SolveOutcome pack2(const ThreeSetFamily& fam, int k, const SolveConfig& cfg);

// Greedy prefix + exact (or randomized) completion.
SolveOutcome setpack1(const ThreeSetFamily& fam, int k, const SolveConfig& cfg,
                      bool randomized);
SolveOutcome match1(const TripartiteFamily& fam, int k, const SolveConfig& cfg,
                    bool randomized);

// Match2 mirrors pack2 with the tripartite partial execution.
SolveOutcome match2(const TripartiteFamily& fam, int k, const SolveConfig& cfg);

// Dispatchers: predict both procedure bases at (alpha, c) and run the
// cheaper one; ties go to the first procedure.
SolveOutcome pack(const Graph& g, int k, const SolveConfig& cfg);
SolveOutcome setpack(const ThreeSetFamily& fam, int k, const SolveConfig& cfg);
SolveOutcome sprand(const ThreeSetFamily& fam, int k, const SolveConfig& cfg);
SolveOutcome match(const TripartiteFamily& fam, int k, const SolveConfig& cfg);
SolveOutcome matchrand(const TripartiteFamily& fam, int k, const SolveConfig& cfg);

struct BranchChoice {
    int branch = 1;  // 1 = procedure-1, 2 = Pack2/Match2
    double base1 = 0.0, base2 = 0.0;
};
BranchChoice choose_branch(ProblemTag tag, double alpha, double epsilon, double c);

// Every simple 3-node path of g as a distinct 3-set (the P2 -> 3-set packing
// association), plus the inverse middle recovery.
ThreeSetFamily p2_as_three_set_family(const Graph& g);
P2Packing three_sets_to_paths(const Graph& g, const ThreeSetFamily& fam,
                              const SetPacking& packing);

}  // namespace alphapack

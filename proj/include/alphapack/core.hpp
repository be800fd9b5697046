#pragma once
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alphapack/util.hpp"

namespace alphapack {

// Elements are dense integers 0..n-1, ordered numerically; named elements are
// mapped at the I/O boundary. All types here are immutable after construction.

struct Universe {
    int n = 0;
};

using ThreeSet = std::array<int, 3>;  // stored sorted

inline ThreeSet make_three_set(int a, int b, int c) {
    ThreeSet s{a, b, c};
    std::sort(s.begin(), s.end());
    return s;
}

struct ThreeSetFamily {
    int n = 0;
    std::vector<ThreeSet> sets;
};

// Tripartite universe: E1 = 0..n1-1, E2 = n1..n1+n2-1, E3 = the rest.
// The contiguous layout makes E1 elements the smallest under <.
struct TripartiteFamily {
    int n1 = 0, n2 = 0, n3 = 0;
    std::vector<ThreeSet> sets;  // one element per block, stored sorted

    int n() const { return n1 + n2 + n3; }
    int block_of(int e) const { return e < n1 ? 0 : (e < n1 + n2 ? 1 : 2); }
    ThreeSetFamily as_three_set_family() const { return ThreeSetFamily{n(), sets}; }
};

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // sorted pairs, deduplicated

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto& [a, b] : edges) { adj[a].push_back(b); adj[b].push_back(a); }
        return adj;
    }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& e : edges) if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

// A P2 path keeps its middle explicit; verification needs it.
struct P2Path {
    int end1, mid, end2;
};

struct P2Packing {
    std::vector<P2Path> paths;
    int size() const { return (int)paths.size(); }
};

struct SetPacking {
    std::vector<int> chosen;  // indices into a ThreeSetFamily / TripartiteFamily
    int size() const { return (int)chosen.size(); }
};

// Parameters of the accuracy/running-time tradeoff. beta_star is derived:
// (4*alpha - 3 + 4*eps) / (1 + 4*eps).
struct TradeoffParams {
    double alpha;
    double epsilon;
    double c;
    double beta_star;

    TradeoffParams(double alpha_, double epsilon_ = 0.0, double c_ = 1.0)
        : alpha(alpha_), epsilon(epsilon_), c(c_),
          beta_star((4.0 * alpha_ - 3.0 + 4.0 * epsilon_) / (1.0 + 4.0 * epsilon_)) {
        if (alpha < 0.75 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0.75, 1]");
        if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
        if (c < 1.0) throw std::invalid_argument("c must be >= 1");
    }
};

using Instance = std::variant<ThreeSetFamily, TripartiteFamily, Graph>;

// Report-style validation: list of violated invariants, empty if valid.
std::vector<std::string> validate_instance(const Instance& instance);

// ceil(alpha * k) with an absolute guard against floating-point overshoot.
// This is the acceptance threshold used by every tradeoff solver.
inline int required_size(int k, double alpha) {
    return (int)std::ceil(alpha * (double)k - 1e-9);
}

// round-half-down, used for m = beta_star * k.
inline int round_half_down(double x) { return (int)std::ceil(x - 0.5); }

// floor with epsilon guard, used for the greedy count (1-alpha)k/2.
inline int floor_guarded(double x) { return (int)std::floor(x + 1e-9); }

}  // namespace alphapack

#include "alphapack/algorithms.hpp"

#include <chrono>
#include <set>
#include <unordered_set>

#include "alphapack/approx_pack.hpp"
#include "alphapack/bipartite_p2.hpp"
#include "alphapack/exact_solvers.hpp"
#include "alphapack/rep_sets.hpp"

namespace alphapack {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

SolveOutcome finish(SolveOutcome out, const Stopwatch& sw) {
    out.met = out.size() >= out.target;
    out.elapsed_ms = sw.ms();
    return out;
}

double predicted_pack2(const SolveConfig& cfg) {
    return cfg.c >= 1.0 ? base_pack2(cfg.alpha, cfg.epsilon, cfg.c)
                        : optimize_pack2(cfg.alpha, cfg.epsilon).base;
}

double predicted_match2(const SolveConfig& cfg) {
    return cfg.c >= 1.0 ? base_match2(cfg.alpha, cfg.epsilon, cfg.c)
                        : optimize_match2(cfg.alpha, cfg.epsilon).base;
}

// Pool the per-pivot collections, dropping duplicate unions.
template <typename ParamFn>
std::vector<std::pair<SetPacking, Bitset>> pooled_partial_packings(
    int pivot_count, int m, ParamFn&& param_at) {
    std::vector<std::pair<SetPacking, Bitset>> pool;
    if (m == 0) {
        pool.push_back({SetPacking{}, Bitset(0)});
        return pool;
    }
    std::unordered_set<Bitset, BitsetHash> seen;
    for (int v = 0; v < pivot_count; v++) {
        PackingCollection coll = param_at(v);
        for (size_t i = 0; i < coll.packings.size(); i++) {
            if (!seen.insert(coll.unions[i]).second) continue;
            pool.push_back({coll.packings[i], coll.unions[i]});
        }
    }
    return pool;
}

// Shared Pack2/Match2 skeleton over a plain 3-set view of the family.
SolveOutcome complete_with_local_search(
    const std::vector<ThreeSet>& sets, int n, int k, const SolveConfig& cfg,
    const std::vector<std::pair<SetPacking, Bitset>>& pool, const char* name,
    double predicted, const Stopwatch& sw) {
    SolveOutcome out;
    out.procedure = name;
    out.k = k;
    out.alpha = cfg.alpha;
    out.target = required_size(k, cfg.alpha);
    out.predicted_base = predicted;
    out.packing = SetPacking{};

    for (const auto& [partial, partial_union] : pool) {
        // residual family: the sets untouched by the partial packing
        std::vector<ThreeSet> residual;
        std::vector<int> back;
        for (size_t i = 0; i < sets.size(); i++) {
            const ThreeSet& s = sets[i];
            bool hit = false;
            if (partial_union.nbits > 0)
                hit = partial_union.test(s[0]) || partial_union.test(s[1]) ||
                      partial_union.test(s[2]);
            if (!hit) {
                residual.push_back(s);
                back.push_back((int)i);
            }
        }
        SetPacking completion = local_search_pack(n, residual, cfg.swap_size);
        SetPacking combined = partial;
        for (int idx : completion.chosen) combined.chosen.push_back(back[idx]);
        std::sort(combined.chosen.begin(), combined.chosen.end());
        if ((int)combined.chosen.size() >= out.target) {
            out.packing = std::move(combined);
            return finish(std::move(out), sw);
        }
    }
    return finish(std::move(out), sw);
}

}  // namespace

ThreeSetFamily p2_as_three_set_family(const Graph& g) {
    auto adj = g.adjacency();
    std::set<ThreeSet> sets;
    for (int m = 0; m < g.n; m++)
        for (int a : adj[m])
            for (int b : adj[m]) {
                if (a >= b) continue;
                sets.insert(make_three_set(a, m, b));
            }
    ThreeSetFamily fam;
    fam.n = g.n;
    fam.sets.assign(sets.begin(), sets.end());
    return fam;
}

P2Packing three_sets_to_paths(const Graph& g, const ThreeSetFamily& fam,
                              const SetPacking& packing) {
    P2Packing out;
    for (int idx : packing.chosen) {
        const ThreeSet& s = fam.sets[idx];
        // middle: first node (in order) adjacent to both others
        int mid = -1;
        for (int i = 0; i < 3 && mid < 0; i++) {
            int m = s[i], a = s[(i + 1) % 3], b = s[(i + 2) % 3];
            if (g.has_edge(m, a) && g.has_edge(m, b)) mid = i;
        }
        if (mid < 0) throw std::logic_error("three_sets_to_paths: set is not a path");
        int m = s[mid], a = s[(mid + 1) % 3], b = s[(mid + 2) % 3];
        out.paths.push_back(P2Path{std::min(a, b), m, std::max(a, b)});
    }
    return out;
}

SolveOutcome pack1(const Graph& g, int k, const SolveConfig& cfg) {
    Stopwatch sw;
    SolveOutcome out;
    out.procedure = "pack1";
    out.k = k;
    out.alpha = cfg.alpha;
    out.target = required_size(k, cfg.alpha);
    out.predicted_base = base_pack1(cfg.alpha);
    out.packing = P2Packing{};
    if (k == 0) return finish(std::move(out), sw);
    if (g.n < 3 * k) return finish(std::move(out), sw);  // no k-packing exists

    UniversalFamily uni =
        build_universal(g.n, 3 * k, k, cfg.alpha, cfg.strategy, cfg.seed);
    for (const Bitset& f : uni.members) {
        std::vector<int> lmap = f.elements();
        if ((int)lmap.size() < out.target) continue;
        std::vector<int> rmap, rindex(g.n, -1);
        for (int v = 0; v < g.n; v++)
            if (!f.test(v)) {
                rindex[v] = (int)rmap.size();
                rmap.push_back(v);
            }
        std::vector<int> lindex(g.n, -1);
        for (size_t i = 0; i < lmap.size(); i++) lindex[lmap[i]] = (int)i;
        BipartiteGraph b;
        b.nl = (int)lmap.size();
        b.nr = (int)rmap.size();
        for (auto& [x, y] : g.edges) {
            if (f.test(x) && !f.test(y)) b.edges.push_back({lindex[x], rindex[y]});
            else if (f.test(y) && !f.test(x)) b.edges.push_back({lindex[y], rindex[x]});
        }
        CenterLeftPacking packing = max_center_left_p2(b);
        if (packing.size() >= out.target) {
            P2Packing result;
            for (auto& [r1, l, r2] : packing.paths)
                result.paths.push_back(P2Path{rmap[r1], lmap[l], rmap[r2]});
            out.packing = std::move(result);
            return finish(std::move(out), sw);
        }
    }
    return finish(std::move(out), sw);
}

SolveOutcome pack2(const ThreeSetFamily& fam, int k, const SolveConfig& cfg) {
    Stopwatch sw;
    TradeoffParams params(cfg.alpha, cfg.epsilon, std::max(cfg.c, 1.0));
    int m = round_half_down(params.beta_star * (double)k);
    auto pool = pooled_partial_packings(fam.n, m, [&](int v) {
        return param_pack(fam, k, params.beta_star, params.c, v);
    });
    return complete_with_local_search(fam.sets, fam.n, k, cfg, pool, "pack2",
                                      predicted_pack2(cfg), sw);
}

SolveOutcome match2(const TripartiteFamily& fam, int k, const SolveConfig& cfg) {
    Stopwatch sw;
    TradeoffParams params(cfg.alpha, cfg.epsilon, std::max(cfg.c, 1.0));
    int m = round_half_down(params.beta_star * (double)k);
    auto pool = pooled_partial_packings(fam.n1, m, [&](int v) {
        return param_match(fam, k, params.beta_star, params.c, v);
    });
    return complete_with_local_search(fam.sets, fam.n(), k, cfg, pool, "match2",
                                      predicted_match2(cfg), sw);
}

namespace {

// Shared SetPack1/Match1 skeleton: greedy prefix of g arbitrary disjoint
// sets, then an exact-stage call at target k' = required_size - g.
template <typename Family, typename SolveFn>
SolveOutcome greedy_plus_exact(const Family& fam, int n, int k, const SolveConfig& cfg,
                               const char* name, double predicted, SolveFn&& solve_rest) {
    Stopwatch sw;
    SolveOutcome out;
    out.procedure = name;
    out.k = k;
    out.alpha = cfg.alpha;
    out.target = required_size(k, cfg.alpha);
    out.predicted_base = predicted;
    out.packing = SetPacking{};
    if (cfg.alpha < 0.75 || cfg.alpha > 1.0)
        throw std::invalid_argument(std::string(name) + ": alpha must be in [0.75, 1]");

    int g = floor_guarded((1.0 - cfg.alpha) * (double)k / 2.0);
    SetPacking prefix;
    Bitset used(n);
    for (int i = 0; i < g; i++) {
        int pick = -1;
        for (size_t j = 0; j < fam.sets.size(); j++) {
            const ThreeSet& s = fam.sets[j];
            if (!used.test(s[0]) && !used.test(s[1]) && !used.test(s[2])) {
                pick = (int)j;
                break;
            }
        }
        if (pick < 0) return finish(std::move(out), sw);  // Step 6: give up
        prefix.chosen.push_back(pick);
        for (int e : fam.sets[pick]) used.set(e);
    }

    Family residual = fam;
    residual.sets.clear();
    std::vector<int> back;
    for (size_t j = 0; j < fam.sets.size(); j++) {
        const ThreeSet& s = fam.sets[j];
        if (!used.test(s[0]) && !used.test(s[1]) && !used.test(s[2])) {
            residual.sets.push_back(s);
            back.push_back((int)j);
        }
    }
    int k_rest = out.target - g;
    SetPacking combined = prefix;
    if (k_rest > 0) {
        std::optional<SetPacking> rest = solve_rest(residual, k_rest);
        if (rest)
            for (int idx : rest->chosen) combined.chosen.push_back(back[idx]);
    }
    std::sort(combined.chosen.begin(), combined.chosen.end());
    out.packing = std::move(combined);
    return finish(std::move(out), sw);
}

}  // namespace

SolveOutcome setpack1(const ThreeSetFamily& fam, int k, const SolveConfig& cfg,
                      bool randomized) {
    double predicted = base_exact_scaled(
        cfg.alpha, randomized ? ExactScheme::SP3Rand : ExactScheme::SP3Det);
    auto solve_rest = [&](const ThreeSetFamily& rest, int kk) {
        return randomized ? rand_3set_pack(rest, kk, cfg.seed, cfg.trials)
                          : exact_3set_pack(rest, kk);
    };
    return greedy_plus_exact(fam, fam.n, k, cfg, randomized ? "sprand1" : "setpack1",
                             predicted, solve_rest);
}

SolveOutcome match1(const TripartiteFamily& fam, int k, const SolveConfig& cfg,
                    bool randomized) {
    double predicted = base_exact_scaled(
        cfg.alpha, randomized ? ExactScheme::DM3Rand : ExactScheme::DM3Det);
    auto solve_rest = [&](const TripartiteFamily& rest, int kk) {
        return randomized ? rand_3d_match(rest, kk, cfg.seed, cfg.trials)
                          : exact_3d_match(rest, kk);
    };
    return greedy_plus_exact(fam, fam.n(), k, cfg, randomized ? "matchrand1" : "match1",
                             predicted, solve_rest);
}

BranchChoice choose_branch(ProblemTag tag, double alpha, double epsilon, double c) {
    BranchChoice ch;
    switch (tag) {
        case ProblemTag::P2: ch.base1 = base_pack1(alpha); break;
        case ProblemTag::SP3Det: ch.base1 = base_exact_scaled(alpha, ExactScheme::SP3Det); break;
        case ProblemTag::SP3Rand: ch.base1 = base_exact_scaled(alpha, ExactScheme::SP3Rand); break;
        case ProblemTag::DM3Det: ch.base1 = base_exact_scaled(alpha, ExactScheme::DM3Det); break;
        case ProblemTag::DM3Rand: ch.base1 = base_exact_scaled(alpha, ExactScheme::DM3Rand); break;
    }
    bool is_match = tag == ProblemTag::DM3Det || tag == ProblemTag::DM3Rand;
    if (c >= 1.0)
        ch.base2 = is_match ? base_match2(alpha, epsilon, c) : base_pack2(alpha, epsilon, c);
    else
        ch.base2 = is_match ? optimize_match2(alpha, epsilon).base
                            : optimize_pack2(alpha, epsilon).base;
    ch.branch = ch.base2 < ch.base1 ? 2 : 1;  // ties go to procedure 1
    return ch;
}

SolveOutcome pack(const Graph& g, int k, const SolveConfig& cfg) {
    BranchChoice ch = choose_branch(ProblemTag::P2, cfg.alpha, cfg.epsilon, cfg.c);
    if (ch.branch == 1) {
        SolveOutcome out = pack1(g, k, cfg);
        out.procedure = "pack/pack1";
        return out;
    }
    ThreeSetFamily fam = p2_as_three_set_family(g);
    SolveOutcome inner = pack2(fam, k, cfg);
    SolveOutcome out;
    out.procedure = "pack/pack2";
    out.k = k;
    out.alpha = cfg.alpha;
    out.target = inner.target;
    out.predicted_base = inner.predicted_base;
    out.elapsed_ms = inner.elapsed_ms;
    out.packing = three_sets_to_paths(g, fam, std::get<SetPacking>(inner.packing));
    out.met = std::get<P2Packing>(out.packing).size() >= out.target;
    return out;
}

SolveOutcome setpack(const ThreeSetFamily& fam, int k, const SolveConfig& cfg) {
    BranchChoice ch = choose_branch(ProblemTag::SP3Det, cfg.alpha, cfg.epsilon, cfg.c);
    SolveOutcome out = ch.branch == 1 ? setpack1(fam, k, cfg, false) : pack2(fam, k, cfg);
    out.procedure = std::string("setpack/") + out.procedure;
    return out;
}

SolveOutcome sprand(const ThreeSetFamily& fam, int k, const SolveConfig& cfg) {
    BranchChoice ch = choose_branch(ProblemTag::SP3Rand, cfg.alpha, cfg.epsilon, cfg.c);
    SolveOutcome out = ch.branch == 1 ? setpack1(fam, k, cfg, true) : pack2(fam, k, cfg);
    out.procedure = std::string("sprand/") + out.procedure;
    return out;
}

SolveOutcome match(const TripartiteFamily& fam, int k, const SolveConfig& cfg) {
    BranchChoice ch = choose_branch(ProblemTag::DM3Det, cfg.alpha, cfg.epsilon, cfg.c);
    SolveOutcome out = ch.branch == 1 ? match1(fam, k, cfg, false) : match2(fam, k, cfg);
    out.procedure = std::string("match/") + out.procedure;
    return out;
}

SolveOutcome matchrand(const TripartiteFamily& fam, int k, const SolveConfig& cfg) {
    BranchChoice ch = choose_branch(ProblemTag::DM3Rand, cfg.alpha, cfg.epsilon, cfg.c);
    SolveOutcome out = ch.branch == 1 ? match1(fam, k, cfg, true) : match2(fam, k, cfg);
    out.procedure = std::string("matchrand/") + out.procedure;
    return out;
}

}  // namespace alphapack

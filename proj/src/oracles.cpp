#include "alphapack/oracles.hpp"

#include <set>

namespace alphapack {

namespace {

// Max disjoint subfamily by DFS over sets sorted by minimum element.
// Prune on remaining-count bound.
struct PackSearch {
    const std::vector<ThreeSet>* sets;
    std::vector<int> order;
    int n;
    std::vector<int> best, cur;
    Bitset used;

    void run(const std::vector<ThreeSet>& s, int n_) {
        sets = &s;
        n = n_;
        order.resize(s.size());
        for (size_t i = 0; i < s.size(); i++) order[i] = (int)i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return s[a] < s[b];
        });
        used = Bitset(n);
        dfs(0);
    }

    void dfs(size_t pos) {
        if (cur.size() > best.size()) best = cur;
        if (pos >= order.size()) return;
        if (cur.size() + (order.size() - pos) <= best.size()) return;
        for (size_t i = pos; i < order.size(); i++) {
            const ThreeSet& s = (*sets)[order[i]];
            if (used.test(s[0]) || used.test(s[1]) || used.test(s[2])) continue;
            for (int e : s) used.set(e);
            cur.push_back(order[i]);
            dfs(i + 1);
            cur.pop_back();
            for (int e : s) used.reset(e);
        }
    }
};

BruteResult brute_sets(const std::vector<ThreeSet>& sets, int n) {
    if ((int)sets.size() > budget().brute_sets_max)
        throw BudgetError("brute_opt: family too large");
    PackSearch ps;
    ps.run(sets, n);
    std::sort(ps.best.begin(), ps.best.end());
    return BruteResult{(int)ps.best.size(), SetPacking{ps.best}};
}

bool disjoint_packing(const std::vector<ThreeSet>& sets, int n, const SetPacking& p) {
    Bitset used(n);
    for (int idx : p.chosen) {
        if (idx < 0 || idx >= (int)sets.size()) return false;
        for (int e : sets[idx]) {
            if (e < 0 || e >= n || used.test(e)) return false;
            used.set(e);
        }
    }
    return true;
}

}  // namespace

BruteResult brute_opt_3set(const ThreeSetFamily& family) {
    return brute_sets(family.sets, family.n);
}

BruteResult brute_opt_3dm(const TripartiteFamily& family) {
    return brute_sets(family.sets, family.n());
}

BruteP2Result brute_opt_p2(const Graph& g) {
    if (g.n > budget().brute_nodes_max) throw BudgetError("brute_opt_p2: graph too large");
    // Enumerate all P2 paths, then search as a 3-set packing; middles recovered
    // per path so witnesses carry the path structure.
    std::vector<P2Path> paths;
    std::vector<ThreeSet> triples;
    auto adj = g.adjacency();
    for (int m = 0; m < g.n; m++)
        for (int a : adj[m])
            for (int b : adj[m]) {
                if (a >= b) continue;
                paths.push_back(P2Path{a, m, b});
                triples.push_back(make_three_set(a, m, b));
            }
    PackSearch ps;
    ps.run(triples, g.n);
    BruteP2Result out;
    out.opt = (int)ps.best.size();
    for (int idx : ps.best) out.witness.paths.push_back(paths[idx]);
    return out;
}

bool verify_solution(const ThreeSetFamily& family, const SetPacking& packing) {
    return disjoint_packing(family.sets, family.n, packing);
}

bool verify_solution(const TripartiteFamily& family, const SetPacking& packing) {
    return disjoint_packing(family.sets, family.n(), packing);
}

bool verify_solution(const Graph& g, const P2Packing& packing) {
    Bitset used(g.n);
    for (const P2Path& p : packing.paths) {
        for (int v : {p.end1, p.mid, p.end2}) {
            if (v < 0 || v >= g.n || used.test(v)) return false;
            used.set(v);
        }
        if (!g.has_edge(p.mid, p.end1) || !g.has_edge(p.mid, p.end2)) return false;
    }
    return true;
}

ThreeSetFamily plant_3set(int k, int noise, uint64_t seed, PlantMeta* meta) {
    Rng rng(seed);
    int n = 3 * k + (noise + 2) / 3;
    std::vector<ThreeSet> sets;
    std::set<ThreeSet> seen;
    for (int i = 0; i < k; i++) {
        ThreeSet s{3 * i, 3 * i + 1, 3 * i + 2};
        sets.push_back(s);
        seen.insert(s);
    }
    if (meta) { meta->k = k; meta->sets = sets; }
    int added = 0, attempts = 0;
    while (added < noise && attempts++ < 20 * noise + 100 && n >= 3) {
        int a = (int)rng.below(n), b = (int)rng.below(n), c = (int)rng.below(n);
        if (a == b || b == c || a == c) continue;
        ThreeSet s = make_three_set(a, b, c);
        if (!seen.insert(s).second) continue;
        sets.push_back(s);
        added++;
    }
    rng.shuffle(sets);
    return ThreeSetFamily{n, sets};
}

TripartiteFamily plant_3dm(int k, int noise, uint64_t seed, PlantMeta* meta) {
    Rng rng(seed);
    int nb = k + (noise + 5) / 6;
    TripartiteFamily f;
    f.n1 = f.n2 = f.n3 = nb;
    std::set<ThreeSet> seen;
    for (int i = 0; i < k; i++) {
        ThreeSet s{i, nb + i, 2 * nb + i};
        f.sets.push_back(s);
        seen.insert(s);
    }
    if (meta) { meta->k = k; meta->sets = f.sets; }
    int added = 0, attempts = 0;
    while (added < noise && attempts++ < 20 * noise + 100 && nb >= 1) {
        ThreeSet s{(int)rng.below(nb), nb + (int)rng.below(nb), 2 * nb + (int)rng.below(nb)};
        if (!seen.insert(s).second) continue;
        f.sets.push_back(s);
        added++;
    }
    rng.shuffle(f.sets);
    return f;
}

Graph plant_p2(int k, int noise, uint64_t seed, PlantMeta* meta) {
    Rng rng(seed);
    int n = 3 * k + (noise + 3) / 4;
    std::vector<std::pair<int, int>> edges;
    if (meta) { meta->k = k; meta->paths.clear(); }
    for (int i = 0; i < k; i++) {
        edges.push_back({3 * i, 3 * i + 1});
        edges.push_back({3 * i + 1, 3 * i + 2});
        if (meta) meta->paths.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    }
    std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
    int added = 0, attempts = 0;
    while (added < noise && attempts++ < 20 * noise + 100 && n >= 2) {
        int a = (int)rng.below(n), b = (int)rng.below(n);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) continue;
        added++;
    }
    edges.assign(seen.begin(), seen.end());
    return make_graph(n, std::move(edges));
}

}  // namespace alphapack

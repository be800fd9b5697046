#include "alphapack/bipartite_p2.hpp"

#include <deque>

namespace alphapack {

namespace {

// Classic O(V^3) blossom contraction matching.
struct Blossom {
    int n;
    std::vector<std::vector<int>> g;
    std::vector<int> match, p, base;
    std::vector<char> used, blossom;

    explicit Blossom(int n_) : n(n_), g(n_), match(n_, -1), p(n_), base(n_), used(n_), blossom(n_) {}

    void add_edge(int a, int b) {
        g[a].push_back(b);
        g[b].push_back(a);
    }

    int lca(int a, int b) {
        std::vector<char> on_path(n, 0);
        while (true) {
            a = base[a];
            on_path[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        while (true) {
            b = base[b];
            if (on_path[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; i++) base[i] = i;
        used[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : g[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; i++)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        // augment
                        int u = to;
                        while (u != -1) {
                            int pv = p[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return 1;
                    }
                    used[match[to]] = 1;
                    q.push_back(match[to]);
                }
            }
        }
        return 0;
    }

    int solve() {
        int res = 0;
        // greedy seed keeps augmenting rounds short
        for (int v = 0; v < n; v++)
            if (match[v] == -1)
                for (int to : g[v])
                    if (match[to] == -1) {
                        match[v] = to;
                        match[to] = v;
                        res++;
                        break;
                    }
        for (int v = 0; v < n; v++)
            if (match[v] == -1) res += find_path(v);
        return res;
    }
};

// Can every chosen middle get two private R nodes? Bipartite matching with
// each middle doubled (Kuhn's augmenting search, deterministic order).
struct TwoMatcher {
    const std::vector<std::vector<int>>* neigh;  // l -> sorted R list
    const std::vector<int>* mids;
    std::vector<int> mate_r;  // r -> slot id or -1
    std::vector<char> seen;

    bool try_slot(int slot) {
        for (int r : (*neigh)[(*mids)[slot / 2]]) {
            if (seen[r]) continue;
            seen[r] = 1;
            if (mate_r[r] == -1 || try_slot(mate_r[r])) {
                mate_r[r] = slot;
                return true;
            }
        }
        return false;
    }

    // assignment[i] = {r1, r2} for mids[i]; false if infeasible
    bool assign(const std::vector<int>& middle_set, int nr,
                std::vector<std::array<int, 2>>* out) {
        mids = &middle_set;
        mate_r.assign(nr, -1);
        for (int slot = 0; slot < 2 * (int)middle_set.size(); slot++) {
            seen.assign(nr, 0);
            if (!try_slot(slot)) return false;
        }
        if (out) {
            out->assign(middle_set.size(), {-1, -1});
            for (int r = 0; r < nr; r++)
                if (mate_r[r] != -1) {
                    int slot = mate_r[r];
                    (*out)[slot / 2][slot % 2] = r;
                }
            for (auto& pr : *out) std::sort(pr.begin(), pr.end());
        }
        return true;
    }
};

}  // namespace

GeneralMatching max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    Blossom bl(n);
    for (auto& [a, b] : edges) bl.add_edge(a, b);
    GeneralMatching gm;
    gm.size = bl.solve();
    gm.mate = bl.match;
    return gm;
}

CenterLeftPacking max_center_left_p2(const BipartiteGraph& b) {
    CenterLeftPacking out;
    if (b.nl == 0 || b.nr == 0) return out;
    std::vector<std::vector<int>> neigh(b.nl);
    for (auto& [l, r] : b.edges) neigh[l].push_back(r);
    for (auto& v : neigh) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // gadget: copies 2l, 2l+1 with an internal edge; R node r is 2*nl + r
    std::vector<std::pair<int, int>> gedges;
    for (int l = 0; l < b.nl; l++) {
        gedges.push_back({2 * l, 2 * l + 1});
        for (int r : neigh[l]) {
            gedges.push_back({2 * l, 2 * b.nl + r});
            gedges.push_back({2 * l + 1, 2 * b.nl + r});
        }
    }
    GeneralMatching gm = max_matching(2 * b.nl + b.nr, gedges);
    int t = gm.size - b.nl;
    if (t <= 0) return out;

    // Tie-break: lexicographically smallest middle set, found by subset
    // backtracking with 2-matching feasibility pruning. Falls back to the
    // matching's own middles when the enumeration would be too large.
    std::vector<int> mids;
    bool lex_done = false;
    if (binomial_count(b.nl, t) <= budget().lex_subsets) {
        TwoMatcher tm;
        tm.neigh = &neigh;
        std::vector<int> cur;
        std::function<bool(int)> dfs = [&](int from) {
            if ((int)cur.size() == t) return true;
            for (int l = from; l <= b.nl - (t - (int)cur.size()); l++) {
                cur.push_back(l);
                if (tm.assign(cur, b.nr, nullptr) && dfs(l + 1)) return true;
                cur.pop_back();
            }
            return false;
        };
        if (dfs(0)) {
            mids = cur;
            lex_done = true;
        }
    }
    if (!lex_done) {
        for (int l = 0; l < b.nl; l++) {
            int m1 = gm.mate[2 * l], m2 = gm.mate[2 * l + 1];
            if (m1 >= 2 * b.nl && m2 >= 2 * b.nl) mids.push_back(l);
        }
    }

    TwoMatcher tm;
    tm.neigh = &neigh;
    std::vector<std::array<int, 2>> assign;
    if (!tm.assign(mids, b.nr, &assign)) {
        // cannot happen for middles coming from a valid matching
        throw std::logic_error("max_center_left_p2: endpoint assignment failed");
    }
    for (size_t i = 0; i < mids.size(); i++)
        out.paths.push_back({assign[i][0], mids[i], assign[i][1]});
    return out;
}

}  // namespace alphapack

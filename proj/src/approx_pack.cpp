#include "alphapack/approx_pack.hpp"

namespace alphapack {

namespace {

// First (in index order) group of `want` pairwise disjoint sets among
// candidates, none touching `blocked`. DFS with a generous node cap; the cap
// is a safety valve for adversarial CLI inputs, not something desk-scale
// instances reach.
bool find_disjoint_group(const std::vector<ThreeSet>& sets,
                         const std::vector<int>& candidates, const Bitset& blocked,
                         int want, std::vector<int>& out, long long& nodes) {
    if (want == 0) return true;
    std::vector<int> chosen;
    std::function<bool(size_t, Bitset&)> dfs = [&](size_t from, Bitset& used) {
        if ((int)chosen.size() == want) return true;
        if (--nodes < 0) return false;
        for (size_t i = from; i + (want - chosen.size()) <= candidates.size(); i++) {
            const ThreeSet& s = sets[candidates[i]];
            if (used.test(s[0]) || used.test(s[1]) || used.test(s[2])) continue;
            for (int e : s) used.set(e);
            chosen.push_back(candidates[i]);
            if (dfs(i + 1, used)) return true;
            chosen.pop_back();
            for (int e : s) used.reset(e);
        }
        return false;
    };
    Bitset used = blocked;
    if (!dfs(0, used)) return false;
    out = chosen;
    return true;
}

}  // namespace

SetPacking local_search_pack(int n, const std::vector<ThreeSet>& sets, int swap_size) {
    if (swap_size < 1) swap_size = 1;
    std::vector<int> packing;
    Bitset used(n);
    auto insert = [&](int idx) {
        packing.push_back(idx);
        for (int e : sets[idx]) used.set(e);
    };
    // greedy maximal, input order
    for (size_t i = 0; i < sets.size(); i++) {
        const ThreeSet& s = sets[i];
        if (!used.test(s[0]) && !used.test(s[1]) && !used.test(s[2])) insert((int)i);
    }

    long long nodes = 10'000'000;
    bool improved = true;
    while (improved && nodes > 0) {
        improved = false;
        for (int r = 0; r <= swap_size && !improved; r++) {
            if (r > (int)packing.size()) break;
            // removal subsets in lexicographic position order
            std::vector<int> pos(packing.size());
            for (size_t i = 0; i < packing.size(); i++) pos[i] = (int)i;
            for_each_combination(pos, r, [&](const std::vector<int>& rem) {
                Bitset blocked = used;
                for (int pi : rem)
                    for (int e : sets[packing[pi]]) blocked.reset(e);
                std::vector<int> candidates;
                for (size_t i = 0; i < sets.size(); i++) {
                    const ThreeSet& s = sets[i];
                    if (!blocked.test(s[0]) && !blocked.test(s[1]) && !blocked.test(s[2]))
                        candidates.push_back((int)i);
                }
                std::vector<int> group;
                if (!find_disjoint_group(sets, candidates, blocked, r + 1, group, nodes))
                    return nodes > 0;  // keep scanning unless the cap tripped
                // apply: drop the r removed, add the r+1 found
                std::vector<int> next;
                std::vector<char> drop(packing.size(), 0);
                for (int pi : rem) drop[pi] = 1;
                for (size_t i = 0; i < packing.size(); i++)
                    if (!drop[i]) next.push_back(packing[i]);
                for (int gi : group) next.push_back(gi);
                packing = std::move(next);
                used = Bitset(n);
                for (int idx : packing)
                    for (int e : sets[idx]) used.set(e);
                improved = true;
                return false;
            });
        }
    }
    std::sort(packing.begin(), packing.end());
    return SetPacking{packing};
}

}  // namespace alphapack

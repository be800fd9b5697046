#include "alphapack/rep_sets.hpp"

#include <map>
#include <unordered_map>

namespace alphapack {

namespace {

// ---- representation check ----
// A failure witness for "members represent family w.r.t. E' at slack q" is a
// pair (X in family, Y subseteq E'\X, |Y| <= q) such that every member trace
// intersects Y. Y is then a hitting set of the member traces restricted to
// E'\X, so the check is a bounded min-hitting-set search per X-trace.

struct HittingSearch {
    const std::vector<Bitset>* traces;  // member traces, inclusion-minimal
    long long nodes_left = 0;
    bool unknown = false;

    // Does a hitting set of size <= q within `allowed` exist?
    bool exists(const std::vector<int>& alive, const Bitset& allowed, int q) {
        if (alive.empty()) return true;
        if (--nodes_left < 0) { unknown = true; return false; }
        // the smallest restricted trace branches least
        int best = -1, best_cnt = INT32_MAX;
        for (int idx : alive) {
            int c = (*traces)[idx].intersect_count(allowed);
            if (c == 0) return false;  // unhittable trace
            if (c < best_cnt) { best_cnt = c; best = idx; }
        }
        if (q == 0) return false;
        if (q > 1) {
            // greedy disjoint traces lower-bound the hitting set size
            Bitset used(allowed.nbits);
            int lb = 0;
            for (int idx : alive) {
                Bitset t = (*traces)[idx] & allowed;
                if (!t.intersects(used)) { lb++; used = used | t; }
                if (lb > q) return false;
            }
        }
        Bitset branch = (*traces)[best] & allowed;
        for (int e : branch.elements()) {
            std::vector<int> next;
            next.reserve(alive.size());
            for (int idx : alive)
                if (!(*traces)[idx].test(e)) next.push_back(idx);
            if (exists(next, allowed, q - 1)) return true;
            if (unknown) return false;
        }
        return false;
    }
};

std::vector<Bitset> minimal_traces(const std::vector<Bitset>& members,
                                   const Bitset& e_prime) {
    std::vector<Bitset> tr;
    tr.reserve(members.size());
    for (const Bitset& m : members) tr.push_back(m & e_prime);
    std::sort(tr.begin(), tr.end(), [](const Bitset& a, const Bitset& b) {
        return a.count() < b.count();
    });
    std::vector<Bitset> out;
    for (const Bitset& t : tr) {
        bool dominated = false;
        for (const Bitset& kept : out)
            if (t.contains(kept)) { dominated = true; break; }
        if (!dominated) out.push_back(t);
    }
    return out;
}

std::vector<Bitset> dedup_traces(const std::vector<Bitset>& family,
                                 const Bitset& e_prime) {
    std::vector<Bitset> tr;
    tr.reserve(family.size());
    for (const Bitset& x : family) tr.push_back(x & e_prime);
    std::sort(tr.begin(), tr.end());
    tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
    return tr;
}

}  // namespace

std::optional<bool> representation_holds(const std::vector<Bitset>& members,
                                         const std::vector<Bitset>& family,
                                         const Bitset& e_prime, int q) {
    if (family.empty()) return true;
    if (members.empty()) return false;  // Y = empty already needs some member
    std::vector<Bitset> mtr = minimal_traces(members, e_prime);
    std::vector<Bitset> xtr = dedup_traces(family, e_prime);
    HittingSearch hs;
    hs.traces = &mtr;
    std::vector<int> all(mtr.size());
    for (size_t i = 0; i < mtr.size(); i++) all[i] = (int)i;
    for (const Bitset& x : xtr) {
        Bitset allowed = e_prime.and_not(x);
        hs.nodes_left = budget().hs_nodes;
        hs.unknown = false;
        if (hs.exists(all, allowed, q)) return false;  // blocking Y found
        if (hs.unknown) return std::nullopt;
    }
    return true;
}

RepFamily compute_representative(const std::vector<Bitset>& S, const Bitset& e_prime,
                                 int q) {
    if (q < 0) throw std::invalid_argument("compute_representative: negative slack");
    if (S.size() > 20000) throw BudgetError("compute_representative: family too large");
    RepFamily rep;
    rep.base = S;
    rep.sub_universe = e_prime;
    rep.slack = q;
    std::vector<char> kept(S.size(), 1);
    std::vector<Bitset> current;
    for (size_t j = 0; j < S.size(); j++) {
        kept[j] = 0;
        current.clear();
        for (size_t i = 0; i < S.size(); i++)
            if (kept[i]) current.push_back(S[i]);
        std::optional<bool> ok = representation_holds(current, S, e_prime, q);
        if (!(ok.has_value() && *ok)) kept[j] = 1;  // unknown keeps the set
    }
    for (size_t i = 0; i < S.size(); i++)
        if (kept[i]) rep.chosen.push_back((int)i);
    return rep;
}

namespace detail {

namespace {

struct LevelFamily {
    std::vector<WitnessedUnion> items;
    std::unordered_map<Bitset, int, BitsetHash> index;

    void insert(WitnessedUnion wu) {
        if (index.count(wu.elems)) return;  // keep the first witness
        index.emplace(wu.elems, (int)items.size());
        items.push_back(std::move(wu));
    }
    void replace(std::vector<WitnessedUnion> next) {
        items = std::move(next);
        index.clear();
        for (size_t i = 0; i < items.size(); i++) index.emplace(items[i].elems, (int)i);
    }
    size_t size() const { return items.size(); }
};

constexpr size_t kSubsetPhaseMax = 2000;
constexpr size_t kHardCap = 2000000;

// Trace-domination pruning: a member whose E'-trace contains another kept
// member's trace avoids strictly fewer Y sets, so dropping it preserves the
// representation property for every slack. Strictly stronger than the Def-2.2
// drop condition, hence sound at every later (smaller) sub-universe too.
void prune_dominated(LevelFamily& fam, const Bitset& e_prime, size_t threshold) {
    if (fam.size() <= threshold) return;
    size_t n = fam.size();
    std::vector<Bitset> traces(n);
    for (size_t i = 0; i < n; i++) traces[i] = fam.items[i].elems & e_prime;

    std::vector<char> kept(n, 1);
    // equality phase: first item of each distinct trace survives
    std::unordered_map<Bitset, int, BitsetHash> first;
    std::vector<int> distinct;
    for (size_t i = 0; i < n; i++) {
        if (first.emplace(traces[i], (int)i).second) distinct.push_back((int)i);
        else kept[i] = 0;
    }
    // subset phase on the distinct traces when affordable
    if (distinct.size() <= kSubsetPhaseMax) {
        std::vector<int> order = distinct;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return traces[a].count() < traces[b].count();
        });
        std::vector<int> antichain;
        for (int idx : order) {
            bool dominated = false;
            for (int a : antichain)
                if (traces[idx].contains(traces[a])) { dominated = true; break; }
            if (dominated) kept[idx] = 0;
            else antichain.push_back(idx);
        }
    }
    std::vector<WitnessedUnion> next;
    next.reserve(n);
    for (size_t i = 0; i < n; i++)
        if (kept[i]) next.push_back(std::move(fam.items[i]));
    fam.replace(std::move(next));
}

}  // namespace

std::vector<WitnessedUnion> rep_dp(const std::vector<ThreeSet>& sets,
                                   const DpOptions& opt) {
    int n = opt.n;
    std::vector<LevelFamily> levels(opt.levels + 1);
    levels[0].insert(WitnessedUnion{Bitset(n), {}});
    if (opt.levels == 0) return levels[0].items;

    auto extend_into = [&](LevelFamily& src, int set_idx, LevelFamily& dst) {
        const ThreeSet& s = sets[set_idx];
        Bitset sb = Bitset::of(n, {s[0], s[1], s[2]});
        for (const auto& wu : src.items) {
            if (wu.elems.intersects(sb)) continue;
            WitnessedUnion nx;
            nx.elems = wu.elems | sb;
            nx.sets = wu.sets;
            nx.sets.push_back(set_idx);
            dst.insert(std::move(nx));
            if (dst.size() > kHardCap) throw BudgetError("rep_dp: level family too large");
        }
    };

    if (opt.mode == DpMode::FullUniverse) {
        Bitset full(n);
        for (int e = 0; e < n; e++) full.set(e);
        for (int i = 1; i <= opt.levels; i++) {
            LevelFamily next;
            for (size_t si = 0; si < sets.size(); si++)
                extend_into(levels[i - 1], (int)si, next);
            prune_dominated(next, full, opt.prune_threshold);
            levels[i] = std::move(next);
        }
        return levels[opt.levels].items;
    }

    // Element-indexed modes: group admissible sets by their minimum and
    // process minima in increasing order. Extensions at element e use the
    // pre-e level states, so minima within a union strictly increase and
    // never collide below the current element.
    std::map<int, std::vector<int>> by_min;
    for (size_t i = 0; i < sets.size(); i++) {
        int mn = sets[i][0];
        if (opt.pivot >= 0 && mn > opt.pivot) continue;
        by_min[mn].push_back((int)i);
    }
    for (const auto& [e, idxs] : by_min) {
        for (int lvl = opt.levels - 1; lvl >= 0; lvl--) {
            if (levels[lvl].size() == 0) continue;
            for (int si : idxs) extend_into(levels[lvl], si, levels[lvl + 1]);
        }
        Bitset eprime(n);
        if (opt.mode == DpMode::ShrinkAbove) {
            for (int u = e + 1; u < n; u++) eprime.set(u);
        } else {
            eprime = opt.fixed_eprime;
        }
        for (int lvl = 1; lvl <= opt.levels; lvl++)
            prune_dominated(levels[lvl], eprime, opt.prune_threshold);
    }
    return levels[opt.levels].items;
}

}  // namespace detail

namespace {

PackingCollection collect(std::vector<detail::WitnessedUnion> final_level, int m) {
    PackingCollection out;
    out.m = m;
    out.packings.reserve(final_level.size());
    out.unions.reserve(final_level.size());
    for (auto& wu : final_level) {
        std::sort(wu.sets.begin(), wu.sets.end());
        out.packings.push_back(SetPacking{std::move(wu.sets)});
        out.unions.push_back(std::move(wu.elems));
    }
    return out;
}

}  // namespace

PackingCollection param_pack(const ThreeSetFamily& S, int k, double beta_star,
                             double c, int pivot_v) {
    (void)c;  // size/time tradeoff constant; inert in the exhaustive computation
    if (pivot_v < 0 || pivot_v >= S.n)
        throw std::invalid_argument("param_pack: pivot outside the universe");
    int m = round_half_down(beta_star * (double)k);
    if (m < 0 || m > k) throw std::invalid_argument("param_pack: bad beta_star");
    detail::DpOptions opt;
    opt.k = k;
    opt.levels = m;
    opt.slack_per_level = 3;
    opt.mode = detail::DpMode::ShrinkAbove;
    opt.n = S.n;
    opt.pivot = pivot_v;
    return collect(detail::rep_dp(S.sets, opt), m);
}

PackingCollection param_match(const TripartiteFamily& S, int k, double beta_star,
                              double c, int pivot_v) {
    (void)c;
    if (pivot_v < 0 || pivot_v >= S.n1)
        throw std::invalid_argument("param_match: pivot must lie in E1");
    int m = round_half_down(beta_star * (double)k);
    if (m < 0 || m > k) throw std::invalid_argument("param_match: bad beta_star");
    detail::DpOptions opt;
    opt.k = k;
    opt.levels = m;
    opt.slack_per_level = 2;
    opt.mode = detail::DpMode::Fixed23;
    opt.n = S.n();
    opt.pivot = pivot_v;
    opt.fixed_eprime = Bitset(S.n());
    for (int e = S.n1; e < S.n(); e++) opt.fixed_eprime.set(e);
    return collect(detail::rep_dp(S.sets, opt), m);
}

}  // namespace alphapack

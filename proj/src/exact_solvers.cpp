#include "alphapack/exact_solvers.hpp"

#include "alphapack/rep_sets.hpp"

namespace alphapack {

namespace {

void check_exact_budget(int n, int k, const char* who) {
    if (k > budget().exact_k_max || n > budget().exact_n_max) {
        std::string msg = std::string(who) + ": instance exceeds the desk budget (k <= " +
                          std::to_string(budget().exact_k_max) + ", |E| <= " +
                          std::to_string(budget().exact_n_max) + ")";
        throw BudgetError(msg);
    }
    if (k < 0) throw std::invalid_argument("k must be >= 0");
}

std::optional<SetPacking> first_witness(std::vector<detail::WitnessedUnion> final_level) {
    if (final_level.empty()) return std::nullopt;
    std::vector<int> idx = std::move(final_level.front().sets);
    std::sort(idx.begin(), idx.end());
    return SetPacking{std::move(idx)};
}

double block_success_3set(int k) {
    // P(a fixed k-packing becomes block-aligned with distinct blocks):
    // k! * 6^k / (3k)^(3k)
    double lg = std::lgamma((double)k + 1.0) + (double)k * std::log(6.0) -
                3.0 * k * std::log(3.0 * k);
    return std::exp(lg);
}

double block_success_3dm(int k) {
    // k! * 2^k / (2k)^(2k)
    double lg = std::lgamma((double)k + 1.0) + (double)k * std::log(2.0) -
                2.0 * k * std::log(2.0 * k);
    return std::exp(lg);
}

RandPlan make_plan(double p, int n, size_t family_size) {
    RandPlan plan;
    plan.per_trial_success = p;
    double t = std::ceil(8.0 / p);
    double per_trial_cost = (double)n + (double)family_size + 16.0;
    if (t * per_trial_cost > budget().rand_ops) {
        plan.exact_fallback = true;
        plan.trials = 0;
    } else {
        plan.trials = (long long)t;
    }
    return plan;
}

}  // namespace

RandPlan rand_plan_3set(int k, int n, size_t family_size) {
    if (k <= 0) return RandPlan{1, 1.0, false};
    return make_plan(block_success_3set(k), n, family_size);
}

RandPlan rand_plan_3dm(int k, int n, size_t family_size) {
    if (k <= 0) return RandPlan{1, 1.0, false};
    return make_plan(block_success_3dm(k), n, family_size);
}

std::optional<SetPacking> exact_3set_pack(const ThreeSetFamily& family, int k) {
    check_exact_budget(family.n, k, "exact_3set_pack");
    if (k == 0) return SetPacking{};
    if ((int)family.sets.size() < k || family.n < 3 * k) return std::nullopt;
    detail::DpOptions opt;
    opt.k = k;
    opt.levels = k;
    opt.slack_per_level = 3;
    opt.mode = detail::DpMode::FullUniverse;
    opt.n = family.n;
    return first_witness(detail::rep_dp(family.sets, opt));
}

std::optional<SetPacking> exact_3d_match(const TripartiteFamily& family, int k) {
    check_exact_budget(family.n(), k, "exact_3d_match");
    if (k == 0) return SetPacking{};
    if ((int)family.sets.size() < k) return std::nullopt;
    detail::DpOptions opt;
    opt.k = k;
    opt.levels = k;
    opt.slack_per_level = 2;
    opt.mode = detail::DpMode::Fixed23;
    opt.n = family.n();
    opt.pivot = -1;  // every minimum (all lie in E1) is admissible
    opt.fixed_eprime = Bitset(family.n());
    for (int e = family.n1; e < family.n(); e++) opt.fixed_eprime.set(e);
    return first_witness(detail::rep_dp(family.sets, opt));
}

std::optional<SetPacking> rand_3set_pack(const ThreeSetFamily& family, int k,
                                         uint64_t seed, long long trials) {
    check_exact_budget(family.n, k, "rand_3set_pack");
    if (k == 0) return SetPacking{};
    if ((int)family.sets.size() < k || family.n < 3 * k) return std::nullopt;
    if (trials <= 0) {
        RandPlan plan = rand_plan_3set(k, family.n, family.sets.size());
        if (plan.exact_fallback) return exact_3set_pack(family, k);
        trials = plan.trials;
    }
    int colors = 3 * k;
    std::vector<int> col(family.n);
    std::vector<int> block_set(k);
    for (long long t = 0; t < trials; t++) {
        Rng rng(seed + (uint64_t)t);
        for (int e = 0; e < family.n; e++) col[e] = (int)rng.below(colors);
        std::fill(block_set.begin(), block_set.end(), -1);
        int filled = 0;
        for (size_t i = 0; i < family.sets.size() && filled < k; i++) {
            const ThreeSet& s = family.sets[i];
            int c0 = col[s[0]], c1 = col[s[1]], c2 = col[s[2]];
            int b = c0 / 3;
            if (c1 / 3 != b || c2 / 3 != b) continue;
            if (c0 == c1 || c1 == c2 || c0 == c2) continue;
            if (block_set[b] == -1) { block_set[b] = (int)i; filled++; }
        }
        if (filled == k) {
            SetPacking p;
            p.chosen.assign(block_set.begin(), block_set.end());
            std::sort(p.chosen.begin(), p.chosen.end());
            return p;
        }
    }
    return std::nullopt;
}

std::optional<SetPacking> rand_3d_match(const TripartiteFamily& family, int k,
                                        uint64_t seed, long long trials) {
    check_exact_budget(family.n(), k, "rand_3d_match");
    if (k == 0) return SetPacking{};
    if ((int)family.sets.size() < k) return std::nullopt;
    if (trials <= 0) {
        RandPlan plan = rand_plan_3dm(k, family.n(), family.sets.size());
        if (plan.exact_fallback) return exact_3d_match(family, k);
        trials = plan.trials;
    }
    int n = family.n(), n23 = n - family.n1;
    int colors = 2 * k;
    std::vector<int> col(n23);  // colors for E2 u E3 only

    // per block: (e1, set index) candidates; then block -> E1 matching
    std::vector<std::vector<std::pair<int, int>>> cand(k);
    std::vector<int> e1_mate;  // e1 -> block or -1
    std::vector<char> seen;
    std::function<bool(int)> try_block = [&](int b) -> bool {
        for (auto& [e1, si] : cand[b]) {
            if (seen[e1]) continue;
            seen[e1] = 1;
            if (e1_mate[e1] == -1 || try_block(e1_mate[e1])) {
                e1_mate[e1] = b;
                return true;
            }
        }
        return false;
    };

    for (long long t = 0; t < trials; t++) {
        Rng rng(seed + (uint64_t)t);
        for (int i = 0; i < n23; i++) col[i] = (int)rng.below(colors);
        for (auto& c : cand) c.clear();
        for (size_t i = 0; i < family.sets.size(); i++) {
            const ThreeSet& s = family.sets[i];
            int c2 = col[s[1] - family.n1], c3 = col[s[2] - family.n1];
            int b = c2 / 2;
            if (c3 / 2 != b || c2 == c3) continue;
            cand[b].push_back({s[0], (int)i});
        }
        e1_mate.assign(family.n1, -1);
        int matched = 0;
        for (int b = 0; b < k; b++) {
            seen.assign(family.n1, 0);
            if (try_block(b)) matched++;
            else break;
        }
        if (matched == k) {
            SetPacking p;
            std::vector<int> block_choice(k, -1);
            for (int e1 = 0; e1 < family.n1; e1++)
                if (e1_mate[e1] != -1) {
                    int b = e1_mate[e1];
                    for (auto& [ce1, si] : cand[b])
                        if (ce1 == e1) { block_choice[b] = si; break; }
                }
            p.chosen.assign(block_choice.begin(), block_choice.end());
            std::sort(p.chosen.begin(), p.chosen.end());
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace alphapack

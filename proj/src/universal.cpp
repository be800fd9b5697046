#include "alphapack/universal.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace alphapack {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::BaseRandom: return "base-random";
        case Provenance::HashLift: return "hash-lift";
        case Provenance::PartitionCompose: return "partition-compose";
    }
    return "?";
}

double verify_pair_count(int n, int k, int p) {
    return binomial_count(n, p) * binomial_count(n - p, k - p);
}

namespace {

void check_params(int n, int k, int p, double alpha) {
    if (!(0 <= p && p <= k && k <= n))
        throw std::invalid_argument("universal set requires 0 <= p <= k <= n");
    if (!(0.0 < alpha && alpha <= 1.0))
        throw std::invalid_argument("alpha must be in (0, 1]");
}

std::vector<int> all_elements(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; i++) v[i] = i;
    return v;
}

void dedupe_stable(std::vector<Bitset>& members) {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> out;
    out.reserve(members.size());
    for (auto& m : members)
        if (seen.insert(m).second) out.push_back(std::move(m));
    members = std::move(out);
}

// Raw randomized draw per the base construction: t members, element-wise
// inclusion probability alpha*p/k.
std::vector<Bitset> draw_base_members(int n, int k, int p, double alpha, uint64_t seed,
                                      long long t) {
    double q = (k > 0) ? alpha * (double)p / (double)k : 0.0;
    Rng rng(seed);
    std::vector<Bitset> members;
    members.reserve(t);
    for (long long i = 0; i < t; i++) {
        Bitset f(n);
        for (int e = 0; e < n; e++)
            if (rng.bernoulli(q)) f.set(e);
        members.push_back(std::move(f));
    }
    dedupe_stable(members);
    return members;
}

// The t formula interpolates alpha*p through the gamma function; at
// fractional alpha*p it can undershoot the integer capture threshold, so
// retries double the target every other attempt. Verification stays the
// soundness gate either way.
long long grown_target(int n, int k, int p, double alpha, int attempt) {
    long long base = base_member_target(n, k, p, alpha);
    int shift = std::min(attempt / 2, 20);
    return std::min(base << shift, (long long)1 << 24);
}

bool verify_affordable(int n, int k, int p, size_t member_count) {
    double pairs = verify_pair_count(n, k, p);
    if (pairs > budget().verify_pairs) return false;
    return pairs * (double)std::max<size_t>(member_count, 1) <= budget().verify_cost;
}

// Verify when affordable; returns whether the family is known-good.
bool verify_if_affordable(UniversalFamily& fam) {
    if (!verify_affordable(fam.n, fam.k, fam.p, fam.members.size())) {
        fam.verified = false;
        return false;
    }
    fam.verified = verify_universal(fam).ok;
    return fam.verified;
}

UniversalFamily trivial_empty_member_family(int n, int k, int p, double alpha,
                                            uint64_t seed, Provenance prov) {
    UniversalFamily fam;
    fam.n = n; fam.k = k; fam.p = p; fam.alpha = alpha;
    fam.seed = seed;
    fam.provenance = prov;
    fam.members.push_back(Bitset(n));
    fam.verified = true;  // p = 0: the empty member avoids every Y
    return fam;
}

}  // namespace

VerifyUniversalResult verify_universal(const UniversalFamily& family) {
    int n = family.n, k = family.k, p = family.p;
    check_params(n, k, p, family.alpha);
    double pairs = verify_pair_count(n, k, p);
    if (pairs > budget().verify_pairs) {
        std::ostringstream os;
        os << "verify_universal: " << pairs << " pairs exceed budget "
           << budget().verify_pairs;
        throw BudgetError(os.str());
    }
    int thresh = universal_threshold(p, family.alpha);
    VerifyUniversalResult res;
    res.ok = true;
    auto pool = all_elements(n);
    for_each_combination(pool, p, [&](const std::vector<int>& xs) {
        Bitset X = Bitset::of(n, xs);
        std::vector<int> rest;
        rest.reserve(n - p);
        for (int e = 0; e < n; e++)
            if (!X.test(e)) rest.push_back(e);
        return for_each_combination(rest, k - p, [&](const std::vector<int>& ys) {
            Bitset Y = Bitset::of(n, ys);
            for (const Bitset& f : family.members)
                if (!f.intersects(Y) && f.intersect_count(X) >= thresh) return true;
            res.ok = false;
            res.counterexample = UniversalCounterexample{xs, ys};
            return false;
        });
    });
    return res;
}

long long base_member_target(int n, int k, int p, double alpha) {
    double ap = alpha * (double)p;
    // log of k^k / ((ap)^ap (k-ap)^(k-ap)) with 0^0 = 1; ln n clamped below at
    // ln 2 so tiny universes still draw at least one member
    double log_core = xlogx((double)k) - xlogx(ap) - xlogx((double)k - ap);
    double log_t = log_core - log_binomial_real((double)p, ap) +
                   std::log((double)k + 1.0) +
                   std::log(std::log((double)std::max(n, 2)));
    long long out = (long long)std::ceil(std::exp(log_t) - 1e-9);
    return std::max(out, 1LL);
}

UniversalFamily construct_base(int n, int k, int p, double alpha, uint64_t seed) {
    check_params(n, k, p, alpha);
    if (verify_pair_count(n, k, p) > budget().verify_pairs)
        throw BudgetError("construct_base: parameters exceed the verify budget");
    for (int attempt = 0; attempt < budget().retry_cap; attempt++) {
        UniversalFamily fam;
        fam.n = n; fam.k = k; fam.p = p; fam.alpha = alpha;
        fam.seed = seed + attempt;
        fam.provenance = Provenance::BaseRandom;
        fam.members = draw_base_members(n, k, p, alpha, seed + attempt,
                                        grown_target(n, k, p, alpha, attempt));
        if (verify_universal(fam).ok) {
            fam.verified = true;
            return fam;
        }
    }
    throw RetryError("construct_base: retry cap exceeded (parameters too tight)");
}

PerfectFunctionFamily build_perfect_family(int n, int k, uint64_t seed) {
    if (n < 0 || k < 0) throw std::invalid_argument("build_perfect_family: bad params");
    PerfectFunctionFamily fam;
    fam.n = n;
    fam.k = k;
    if (k == 0 || n < k) return fam;  // no k-subsets: vacuously perfect
    if (binomial_count(n, k) > budget().verify_pairs)
        throw BudgetError("build_perfect_family: C(n,k) exceeds budget");
    int range = k * k;

    // All k-subsets still lacking an injective function.
    std::vector<std::vector<int>> uncovered;
    for_each_combination(all_elements(n), k, [&](const std::vector<int>& s) {
        uncovered.push_back(s);
        return true;
    });

    Rng rng(seed);
    long long cap = 64LL * (long long)(8.0 * (k + 1) * std::log(std::max(n, 2)) + 8.0);
    std::vector<char> mark(range + 1);
    for (long long draws = 0; !uncovered.empty(); draws++) {
        if (draws > cap) throw RetryError("build_perfect_family: retry cap exceeded");
        std::vector<int> f(n);
        for (int e = 0; e < n; e++) f[e] = 1 + (int)rng.below(range);
        std::vector<std::vector<int>> still;
        still.reserve(uncovered.size());
        for (auto& s : uncovered) {
            bool injective = true;
            for (int e : s) {
                if (mark[f[e]]) { injective = false; break; }
                mark[f[e]] = 1;
            }
            for (int e : s) mark[f[e]] = 0;
            if (!injective) still.push_back(s);
        }
        if (still.size() < uncovered.size()) {
            fam.functions.push_back(std::move(f));
            uncovered = std::move(still);
        }
    }
    return fam;
}

bool verify_perfect(const PerfectFunctionFamily& fam) {
    if (fam.k == 0 || fam.n < fam.k) return true;
    std::vector<char> mark(fam.k * fam.k + 1);
    bool ok = true;
    for_each_combination(all_elements(fam.n), fam.k, [&](const std::vector<int>& s) {
        for (const auto& f : fam.functions) {
            bool injective = true;
            for (int e : s) {
                if (mark[f[e]]) { injective = false; break; }
                mark[f[e]] = 1;
            }
            for (int e : s) mark[f[e]] = 0;
            if (injective) return true;
        }
        ok = false;
        return false;
    });
    return ok;
}

UniversalFamily lift_by_hashing(const UniversalFamily& inner,
                                const PerfectFunctionFamily& perfect, int n) {
    int k = perfect.k;
    if (inner.k != k || inner.n != k * k || perfect.n != n)
        throw std::invalid_argument(
            "lift_by_hashing: inner must be a (k^2,k,p,alpha) family matching the "
            "perfect family");
    if (k == 0)
        return trivial_empty_member_family(n, 0, 0, inner.alpha, inner.seed,
                                           Provenance::HashLift);
    UniversalFamily out;
    out.n = n; out.k = k; out.p = inner.p; out.alpha = inner.alpha;
    out.seed = inner.seed;
    out.provenance = Provenance::HashLift;
    double product = (double)perfect.functions.size() * (double)inner.members.size();
    if (product > 5e6)
        throw BudgetError("lift_by_hashing: preimage family would exceed 5e6 members");
    out.members.reserve((size_t)product);
    for (const auto& f : perfect.functions) {
        for (const Bitset& m : inner.members) {
            Bitset pre(n);
            for (int e = 0; e < n; e++)
                if (m.test(f[e] - 1)) pre.set(e);
            out.members.push_back(std::move(pre));
        }
    }
    dedupe_stable(out.members);
    verify_if_affordable(out);
    return out;
}

int partition_width(int k) {
    if (k <= 1) return 1;
    double l = std::log2((double)k);
    int s = (int)std::floor(l * l);
    return std::min(std::max(s, 1), k);
}

UniversalFamily compose_by_partition(const UniversalBuilder& builder, int n, int k,
                                     int p, double alpha, int s_override) {
    check_params(n, k, p, alpha);
    if (p == 0)
        return trivial_empty_member_family(n, k, p, alpha, 0, Provenance::PartitionCompose);
    int s = s_override > 0 ? std::min(s_override, k) : partition_width(k);
    int t = (k + s - 1) / s;

    std::vector<UniversalFamily> widths(s + 1);
    for (int ph = 0; ph <= std::min(s, p); ph++) widths[ph] = builder(n, s, ph, alpha);

    // Restricted families are shared across partitions; memo on the block
    // interval [lo, hi) and the width index.
    std::map<std::tuple<int, int, int>, std::vector<Bitset>> restricted;
    auto restrict_to = [&](int lo, int hi, int ph) -> const std::vector<Bitset>& {
        auto key = std::make_tuple(lo, hi, ph);
        auto it = restricted.find(key);
        if (it != restricted.end()) return it->second;
        Bitset block(n);
        for (int e = lo; e < hi; e++) block.set(e);
        std::vector<Bitset> rs;
        rs.reserve(widths[ph].members.size());
        for (const Bitset& m : widths[ph].members) rs.push_back(m & block);
        dedupe_stable(rs);
        return restricted.emplace(key, std::move(rs)).first->second;
    };

    // Tuples (p_1..p_t), sum = p, 0 <= p_i <= s.
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(t);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == t) {
            if (left == 0) tuples.push_back(cur);
            return;
        }
        int max_here = std::min(s, left);
        for (int v = 0; v <= max_here; v++) {
            cur[i] = v;
            gen(i + 1, left - v);
        }
    };
    gen(0, p);

    // Consecutive partitions: t-1 non-decreasing boundaries in 0..n.
    std::vector<std::vector<int>> partitions;
    std::vector<int> bnd(t - 1);
    std::function<void(int, int)> genb = [&](int i, int lo) {
        if (i == t - 1) {
            partitions.push_back(bnd);
            return;
        }
        for (int v = lo; v <= n; v++) {
            bnd[i] = v;
            genb(i + 1, v);
        }
    };
    genb(0, 0);

    double work = 0;
    std::set<Bitset> members;
    std::vector<const std::vector<Bitset>*> parts(t);
    for (const auto& bounds : partitions) {
        for (const auto& tup : tuples) {
            double prod = 1;
            bool empty = false;
            for (int i = 0; i < t; i++) {
                int lo = i == 0 ? 0 : bounds[i - 1];
                int hi = i == t - 1 ? n : bounds[i];
                parts[i] = &restrict_to(lo, hi, tup[i]);
                prod *= (double)parts[i]->size();
                if (parts[i]->empty()) { empty = true; break; }
            }
            if (empty) continue;
            work += prod;
            if (work > budget().compose_work)
                throw BudgetError("compose_by_partition: enumeration exceeds budget");
            // Cross product of blockwise restrictions.
            std::vector<size_t> idx(t, 0);
            while (true) {
                Bitset u(n);
                for (int i = 0; i < t; i++) u = u | (*parts[i])[idx[i]];
                members.insert(std::move(u));
                int i = t - 1;
                while (i >= 0 && ++idx[i] == parts[i]->size()) idx[i--] = 0;
                if (i < 0) break;
            }
        }
    }

    UniversalFamily out;
    out.n = n; out.k = k; out.p = p; out.alpha = alpha;
    out.provenance = Provenance::PartitionCompose;
    out.members.assign(members.begin(), members.end());
    verify_if_affordable(out);
    return out;
}

UniversalFamily build_universal(int n, int k, int p, double alpha,
                                UniversalStrategy strategy, uint64_t seed) {
    check_params(n, k, p, alpha);
    if (p == 0)
        return trivial_empty_member_family(n, k, p, alpha, seed, Provenance::BaseRandom);

    auto base_raw = [&](int bn, int bk, int bp, uint64_t s) {
        UniversalFamily fam;
        fam.n = bn; fam.k = bk; fam.p = bp; fam.alpha = alpha;
        fam.seed = s;
        fam.provenance = Provenance::BaseRandom;
        // Verified draws when affordable, raw draw otherwise.
        if (verify_affordable(bn, bk, bp, (size_t)base_member_target(bn, bk, bp, alpha))) {
            for (int attempt = 0; attempt < budget().retry_cap; attempt++) {
                fam.seed = s + attempt;
                fam.members = draw_base_members(bn, bk, bp, alpha, s + attempt,
                                                grown_target(bn, bk, bp, alpha, attempt));
                if (verify_universal(fam).ok) {
                    fam.verified = true;
                    return fam;
                }
            }
            throw RetryError("build_universal: base retry cap exceeded");
        }
        fam.members = draw_base_members(bn, bk, bp, alpha, s,
                                        base_member_target(bn, bk, bp, alpha));
        fam.verified = false;
        return fam;
    };

    switch (strategy) {
        case UniversalStrategy::Base:
            return base_raw(n, k, p, seed);
        case UniversalStrategy::HashLift: {
            UniversalFamily inner = base_raw(k * k, k, p, seed);
            PerfectFunctionFamily perf = build_perfect_family(n, k, seed + 101);
            return lift_by_hashing(inner, perf, n);
        }
        case UniversalStrategy::Partition: {
            UniversalBuilder b = [&](int bn, int bk, int bp, double a) {
                (void)a;
                return base_raw(bn, bk, bp, seed + 211 * (bp + 1));
            };
            return compose_by_partition(b, n, k, p, alpha);
        }
        case UniversalStrategy::Pipeline: {
            int inner_n = k * k;
            int s = partition_width(k);
            // set2 (over set1) as the small-width builder for set3
            UniversalBuilder b = [&](int bn, int bk, int bp, double a) {
                (void)a;
                if (bp == 0)
                    return trivial_empty_member_family(bn, bk, bp, alpha,
                                                       seed, Provenance::HashLift);
                UniversalFamily inner2 = base_raw(bk * bk, bk, bp, seed + 307 * (bp + 1));
                PerfectFunctionFamily perf =
                    build_perfect_family(bn, bk, seed + 401 * (bp + 1));
                return lift_by_hashing(inner2, perf, bn);
            };
            (void)s;
            UniversalFamily composed = compose_by_partition(b, inner_n, k, p, alpha);
            PerfectFunctionFamily perf = build_perfect_family(n, k, seed + 503);
            return lift_by_hashing(composed, perf, n);
        }
    }
    throw std::logic_error("unknown strategy");
}

}  // namespace alphapack

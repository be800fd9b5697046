#pragma once
#include <cstdint>
#include <cmath>
#include <vector>
#include <string>
#include <stdexcept>
#include <functional>
#include <algorithm>

namespace alphapack {

// Thrown when an exhaustive enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a randomized construction fails to verify after the retry cap.
struct RetryError : std::runtime_error {
    explicit RetryError(const std::string& what) : std::runtime_error(what) {}
};

// -------------------- Bitset --------------------
// Dynamic bitset over elements 0..n-1, 64-bit blocks. Single-word graphs and
// universes (n <= 64) hit the one-block fast path automatically.
struct Bitset {
    int nbits = 0;
    std::vector<uint64_t> b;

    Bitset() = default;
    explicit Bitset(int n) : nbits(n), b((n + 63) / 64, 0ULL) {}

    void set(int i) { b[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { b[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (b[i >> 6] >> (i & 63)) & 1ULL; }

    bool empty() const {
        for (uint64_t x : b) if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : b) c += __builtin_popcountll(x);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < b.size(); i++) if (b[i] & o.b[i]) return true;
        return false;
    }
    int intersect_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < b.size(); i++) c += __builtin_popcountll(b[i] & o.b[i]);
        return c;
    }
    bool contains(const Bitset& o) const {  // o subseteq this
        for (size_t i = 0; i < b.size(); i++) if (o.b[i] & ~b[i]) return false;
        return true;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(*this);
        for (size_t i = 0; i < b.size(); i++) r.b[i] |= o.b[i];
        return r;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r(*this);
        for (size_t i = 0; i < b.size(); i++) r.b[i] &= o.b[i];
        return r;
    }
    Bitset and_not(const Bitset& o) const {
        Bitset r(*this);
        for (size_t i = 0; i < b.size(); i++) r.b[i] &= ~o.b[i];
        return r;
    }
    bool operator==(const Bitset& o) const { return nbits == o.nbits && b == o.b; }
    bool operator<(const Bitset& o) const { return b < o.b; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int bi = 0; bi < (int)b.size(); bi++) {
            uint64_t x = b[bi];
            while (x) {
                out.push_back((bi << 6) + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
        return out;
    }
    static Bitset of(int n, const std::vector<int>& elems) {
        Bitset r(n);
        for (int e : elems) r.set(e);
        return r;
    }
    size_t hash() const {
        size_t h = 1469598103934665603ULL;
        for (uint64_t x : b) { h ^= x; h *= 1099511628211ULL; }
        return h;
    }
};

struct BitsetHash {
    size_t operator()(const Bitset& s) const { return s.hash(); }
};

// -------------------- Rng --------------------
// splitmix64; self-contained so streams are identical across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed + 0x9E3779B97F4A7C15ULL) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, m)
    uint64_t below(uint64_t m) { return next() % m; }
    // uniform in [0, 1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; i--) std::swap(v[i - 1], v[below(i)]);
    }
};

// -------------------- combinations --------------------
// Enumerates all size-r subsets of `pool` in lexicographic order; visit gets
// the chosen elements. Returns false if some visit returned false (early stop).
template <typename F>
bool for_each_combination(const std::vector<int>& pool, int r, F&& visit) {
    int n = (int)pool.size();
    if (r < 0 || r > n) return true;
    std::vector<int> idx(r);
    for (int i = 0; i < r; i++) idx[i] = i;
    std::vector<int> chosen(r);
    while (true) {
        for (int i = 0; i < r; i++) chosen[i] = pool[idx[i]];
        if (!visit(chosen)) return false;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) i--;
        if (i < 0) return true;
        idx[i]++;
        for (int j = i + 1; j < r; j++) idx[j] = idx[j - 1] + 1;
    }
}

// log of binomial coefficient at real arguments, via lgamma; C(n, x) with
// 0 <= x <= n. Used by the universal-set size formula where alpha*p is not
// integral.
inline double log_binomial_real(double n, double x) {
    if (x < 0 || x > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
}

inline double binomial_real(double n, double x) { return std::exp(log_binomial_real(n, x)); }

// Exact binomial as double, saturating; enough for budget guards.
inline double binomial_count(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double v = 1.0;
    for (int i = 1; i <= r; i++) {
        v = v * (n - r + i) / i;
        if (v > 1e18) return 1e18;
    }
    return v;
}

// x * ln(x) with the 0^0 = 1 convention (0 * ln 0 = 0).
inline double xlogx(double x) { return x <= 0.0 ? 0.0 : x * std::log(x); }

// -------------------- budgets --------------------
// Central enumeration budgets. ALPHAPACK_BUDGET overrides the pair budget.
struct Budget {
    double verify_pairs = 1e8;       // C(n,p)*C(n-p,k-p) cap for verify_universal
    double verify_cost = 6e8;        // pairs * expected member probes, for auto-verify
    double compose_work = 1e8;       // partitions x tuples x member products
    double repcheck_pairs = 4e6;     // X-traces x Y-subsets for greedy elimination
    long long hs_nodes = 200000;     // branch cap per hitting-set feasibility query
    int exact_k_max = 7;
    int exact_n_max = 40;
    int brute_sets_max = 25;
    int brute_nodes_max = 15;
    double lex_subsets = 5000;       // middle-set enumeration cap in bipartite tie-break
    double rand_ops = 6e8;           // trials * per-trial cost cap before exact fallback
    int retry_cap = 64;

    static Budget from_env();
};

const Budget& budget();

}  // namespace alphapack

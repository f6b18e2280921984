#pragma once

// Small brute-force reference implementations used only by the tests. They
// deliberately avoid the library's own algorithms (no hook formulas, no
// Murnaghan-Nakayama, no restricted-growth enumeration).

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Partitions of n with parts at most k, by the two-term recurrence.
inline long partition_count(int n, int k) {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    return partition_count(n - k, k) + partition_count(n, k - 1);
}
inline long partition_count(int n) { return partition_count(n, n); }

/// Standard tableaux counted by removing the largest entry from each corner.
inline long syt_count(std::vector<int> shape) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner) continue;
        auto smaller = shape;
        --smaller[i];
        total += syt_count(smaller);
    }
    return total;
}

/// Weyl dimension formula for gl_d: Π_{i<j} (λ_i − λ_j + j − i) / (j − i).
inline mpz_class weyl_dimension(std::vector<int> lambda, int d) {
    if (static_cast<int>(lambda.size()) > d) return 0;
    lambda.resize(d, 0);
    mpq_class value = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) value *= mpq_class(lambda[i] - lambda[j] + j - i, j - i);
    }
    value.canonicalize();
    return value.get_num();
}

/// Coefficients 0..n of Π_i (1 − x^i)^{−g_i}, multiplying one geometric
/// series at a time.
inline std::vector<mpz_class> series_product(const std::vector<long>& generators, int n) {
    std::vector<mpz_class> poly(n + 1, 0);
    poly[0] = 1;
    for (std::size_t i = 1; i < generators.size(); ++i) {
        for (long copy = 0; copy < generators[i]; ++copy) {
            std::vector<mpz_class> next(n + 1, 0);
            for (int a = 0; a <= n; ++a) {
                for (int b = a; b <= n; b += static_cast<int>(i)) next[b] += poly[a];
            }
            poly = std::move(next);
        }
    }
    return poly;
}

inline mpz_class binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Bell numbers by the Bell triangle.
inline mpz_class bell(int n) {
    std::vector<mpz_class> row{1};
    for (int k = 0; k < n; ++k) {
        std::vector<mpz_class> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

inline mpz_class fact(int n) {
    mpz_class r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

using Block = std::set<int>;
using SetPart = std::set<Block>;

/// Set partitions of {0..p-1}: every map to block names, deduplicated as sets of sets.
inline std::set<SetPart> set_partitions(int p) {
    std::set<SetPart> out;
    std::vector<int> f(p, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == p) {
            std::map<int, Block> blocks;
            for (int e = 0; e < p; ++e) blocks[f[e]].insert(e);
            SetPart s;
            for (auto& [name, b] : blocks) s.insert(b);
            out.insert(s);
            return;
        }
        for (int v = 0; v < p; ++v) {
            f[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

/// A labeled set partition as a set of (block, label), label 0 meaning none.
using Labeled = std::set<std::pair<Block, int>>;

/// P_{p,q}: every set partition with every injective assignment of 1..q to blocks.
inline std::set<Labeled> labeled_pq(int p, int q) {
    std::set<Labeled> out;
    for (const auto& s : set_partitions(p)) {
        std::vector<Block> blocks(s.begin(), s.end());
        if (static_cast<int>(blocks.size()) < q) continue;
        std::vector<int> slot(blocks.size(), 0);
        std::function<void(int)> rec = [&](int label) {
            if (label > q) {
                Labeled x;
                for (std::size_t k = 0; k < blocks.size(); ++k) x.insert({blocks[k], slot[k]});
                out.insert(x);
                return;
            }
            for (std::size_t k = 0; k < blocks.size(); ++k) {
                if (slot[k]) continue;
                slot[k] = label;
                rec(label + 1);
                slot[k] = 0;
            }
        };
        rec(1);
    }
    return out;
}

/// P_p(Ω) for the standard alphabet: singletons take a label in 0..q, larger blocks 0.
inline std::set<Labeled> labeled_general(int p, int q) {
    std::set<Labeled> out;
    for (const auto& s : set_partitions(p)) {
        std::vector<Block> blocks(s.begin(), s.end());
        std::vector<int> label(blocks.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == blocks.size()) {
                Labeled x;
                for (std::size_t t = 0; t < blocks.size(); ++t) x.insert({blocks[t], label[t]});
                out.insert(x);
                return;
            }
            const int options = blocks[k].size() == 1 ? q : 0;
            for (int l = 0; l <= options; ++l) {
                label[k] = l;
                rec(k + 1);
            }
        };
        rec(0);
    }
    return out;
}

inline Labeled act(const std::vector<int>& sigma, const std::vector<int>& tau, const Labeled& x) {
    Labeled y;
    for (const auto& [block, label] : x) {
        Block image;
        for (int e : block) image.insert(sigma[e]);
        y.insert({image, label == 0 ? 0 : tau[label - 1] + 1});
    }
    return y;
}

inline long fixed_points(const std::set<Labeled>& xs, const std::vector<int>& sigma, const std::vector<int>& tau) {
    return std::count_if(xs.begin(), xs.end(), [&](const Labeled& x) { return act(sigma, tau, x) == x; });
}

/// Permutation with the given cycle lengths on consecutive blocks.
inline std::vector<int> permutation_of_type(const std::vector<int>& cycles) {
    std::vector<int> perm;
    int start = 0;
    for (int len : cycles) {
        for (int k = 0; k < len; ++k) perm.push_back(start + (k + 1) % len);
        start += len;
    }
    return perm;
}

/// Number of fixed points of a permutation on the cosets Σ_n / (Σ_a × Σ_{n-a}),
/// i.e. on a-subsets of {0..n-1}.
inline long subset_fixed_points(const std::vector<int>& perm, int a) {
    const int n = static_cast<int>(perm.size());
    long count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != a) continue;
        unsigned image = 0;
        for (int e = 0; e < n; ++e) {
            if (mask & (1u << e)) image |= 1u << perm[e];
        }
        count += image == mask;
    }
    return count;
}

}  // namespace oracle

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucurve/cost.hpp"
#include "ucurve/dataset.hpp"
#include "ucurve/feature_subset.hpp"
#include "ucurve/rng.hpp"

namespace ucurve::testing {

// Cost function backed by an explicit table keyed on the subset's bit string.
// Missing entries are a test bug, not a value.
inline CostFunction table_cost(int n, std::unordered_map<std::string, double> table) {
    return CostFunction(n, [table = std::move(table)](const FeatureSubset& x) {
        auto it = table.find(x.to_string());
        if (it == table.end())
            throw std::logic_error("table_cost: no entry for " + x.to_string());
        return it->second;
    });
}

inline CostFunction table_cost_fallback(int n, std::unordered_map<std::string, double> table,
                                        std::function<double(const FeatureSubset&)> fallback) {
    return CostFunction(
        n, [table = std::move(table), fallback = std::move(fallback)](const FeatureSubset& x) {
            auto it = table.find(x.to_string());
            return it == table.end() ? fallback(x) : it->second;
        });
}

// Wraps a cost function so that every body call bumps *counter. Used to check
// that the memoizing ledger never evaluates a subset twice.
inline CostFunction counting_cost(const CostFunction& base, std::shared_ptr<long> counter) {
    return CostFunction(base.degree(), [base, counter](const FeatureSubset& x) {
        ++*counter;
        return base(x);
    });
}

// A curve c over a chain is U-shaped iff no element is strictly above some
// element on each side: max(c(A), c(B)) >= c(X) for A before X before B.
inline bool is_u_shaped(const std::vector<double>& c) {
    const std::size_t n = c.size();
    if (n < 3) return true;
    std::vector<double> prefix_min(n), suffix_min(n);
    prefix_min[0] = c[0];
    for (std::size_t i = 1; i < n; ++i) prefix_min[i] = std::min(prefix_min[i - 1], c[i]);
    suffix_min[n - 1] = c[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], c[i]);
    for (std::size_t j = 1; j + 1 < n; ++j)
        if (prefix_min[j - 1] < c[j] && suffix_min[j + 1] < c[j]) return false;
    return true;
}

// Maximal chain from the empty set to the full set, adding features in a
// uniformly shuffled order.
inline std::vector<FeatureSubset> random_maximal_chain(int n, SeededRng& rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    std::vector<FeatureSubset> chain;
    chain.reserve(static_cast<std::size_t>(n) + 1);
    FeatureSubset cur = FeatureSubset::empty_set(n);
    chain.push_back(cur);
    for (int k : order) {
        cur.set(k);
        chain.push_back(cur);
    }
    return chain;
}

/**
 * Reference implementation of the penalized entropy score, kept structurally
 * independent of the library's: samples are grouped through an ordered map
 * keyed by the projected value tuple, class tallies live in per-pattern
 * ordered maps, and the formula is computed directly.
 */
inline double reference_entropy_score(const Dataset& d, const FeatureSubset& x) {
    if (d.rows.empty()) throw std::invalid_argument("reference_entropy_score: no samples");
    std::map<std::vector<double>, std::map<int, long>> groups;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        std::vector<double> key;
        for (int j = 0; j < d.feature_count; ++j)
            if (x.test(j)) key.push_back(d.rows[i][static_cast<std::size_t>(j)]);
        groups[key][d.labels[i]] += 1;
    }
    const double t = static_cast<double>(d.rows.size());
    double once = 0.0;
    double weighted = 0.0;
    for (const auto& [key, by_class] : groups) {
        long m = 0;
        for (const auto& [label, count] : by_class) m += count;
        if (m < 2) {
            once += 1.0;
            continue;
        }
        double h = 0.0;
        for (const auto& [label, count] : by_class) {
            const double p = static_cast<double>(count) / static_cast<double>(m);
            h -= p * std::log(p);
        }
        h /= std::log(static_cast<double>(d.class_count));
        weighted += (static_cast<double>(m) / t) * h;
    }
    return once / t + weighted;
}

// 4-feature cost table whose restriction to every maximal chain is U-shaped;
// unique global minimum at 0111 with cost 1.
inline CostFunction four_feature_table() {
    return table_cost(4, {
        {"0000", 10.0}, {"1000", 8.0},  {"0100", 7.0},  {"0010", 6.0},
        {"0001", 2.5},  {"1100", 6.5},  {"1010", 4.0},  {"1001", 3.0},
        {"0110", 5.5},  {"0101", 2.4},  {"0011", 2.2},  {"1110", 7.2},
        {"1101", 5.2},  {"1011", 4.8},  {"0111", 1.0},  {"1111", 7.5},
    });
}

// 6-feature table shaped so that exhausting the neighbourhood of 010101
// first pushes 010001 (lower adjacent, equal or cheaper) and then 010111.
// Unlisted subsets cost 50 + |X|, far above everything the scan touches.
inline CostFunction exhausting_table() {
    return table_cost_fallback(6,
                               {
                                   {"010101", 10.0}, {"010001", 9.0},  {"010111", 10.0},
                                   {"000101", 11.0}, {"010100", 12.0}, {"110101", 13.0},
                                   {"011101", 12.0}, {"000111", 9.0},  {"010011", 10.0},
                                   {"010110", 11.0}, {"110111", 12.0}, {"011111", 11.0},
                               },
                               [](const FeatureSubset& x) { return 50.0 + x.count(); });
}

/**
 * 6-feature cost with a unique global minimum at {4,5} that greedy forward
 * selection provably misses: the cheapest singleton is {0}, every pair
 * through feature 0 costs 0.05, and the walk from {0,1} never reaches the
 * 0.0 valley at {4,5}. Chain steps are dominated by the (|X|-2)^2 term, so
 * every maximal chain is still U-shaped.
 */
inline CostFunction greedy_trap() {
    return CostFunction(6, [](const FeatureSubset& x) {
        const int k = x.count();
        const double base = static_cast<double>((k - 2) * (k - 2));
        double bump = 0.0;
        if (k == 0) {
            bump = 0.1;
        } else if (k == 1) {
            if (x.test(0))
                bump = 0.01;
            else if (x.test(4) || x.test(5))
                bump = 0.2;
            else
                bump = 0.22;
        } else if (k == 2) {
            if (x.test(4) && x.test(5))
                bump = 0.0;
            else if (x.test(0))
                bump = 0.05;
            else
                bump = 0.21;
        } else {
            bump = 0.15;
        }
        return base + bump;
    });
}

/**
 * 6-feature cost that violates the U-shape on some chains: inside the ideal
 * set {0..4} the cost falls with size (10 - |X|), but 111100 is bumped up to
 * 8 while its subset 111000 drops to 6, so chains through both oscillate
 * down-up-down on the way to the global minimum 111110 at cost 5. Everything
 * outside {0..4} is expensive. Used to exercise behaviour when the
 * decomposability assumption fails and pruning may or may not hide the
 * optimum.
 */
inline CostFunction oscillating_cost() {
    return CostFunction(6, [](const FeatureSubset& x) {
        static const FeatureSubset black = FeatureSubset::from_string("111110");
        const int k = x.count();
        if (!x.is_subset_of(black)) return 20.0 + k;
        const std::string s = x.to_string();
        if (s == "111100") return 8.0;
        if (s == "111000") return 6.0;
        if (s == "110100" || s == "101100" || s == "011100") return 8.0;
        return 10.0 - k;
    });
}

}  // namespace ucurve::testing

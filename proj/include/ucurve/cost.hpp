#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ucurve/feature_subset.hpp"

namespace ucurve {

/**
 * A cost function over the subsets of a feature set of known degree.
 * Evaluation must be pure: repeated calls on the same subset return the same
 * value. Callers that care about evaluation counts go through
 * evaluate_counted, never through operator() directly.
 */
class CostFunction {
public:
    using Body = std::function<double(const FeatureSubset&)>;

    CostFunction(int degree, Body body) : n_(degree), body_(std::move(body)) {
        if (n_ < 1 || n_ > kMaxDegree)
            throw std::invalid_argument("CostFunction: degree out of range");
        if (!body_)
            throw std::invalid_argument("CostFunction: empty body");
    }

    int degree() const { return n_; }

    double operator()(const FeatureSubset& x) const {
        if (x.width() != n_)
            throw std::invalid_argument("CostFunction: subset width " +
                                        std::to_string(x.width()) +
                                        " does not match degree " + std::to_string(n_));
        return body_(x);
    }

private:
    int n_;
    Body body_;
};

/**
 * Memoizing evaluation cache owned by a single run. distinct_count() is the
 * "computed nodes" metric reported by the benchmark commands: the number of
 * subsets whose cost body actually ran.
 */
class EvaluationLedger {
public:
    std::size_t distinct_count() const { return cache_.size(); }

    std::optional<double> lookup(const FeatureSubset& x) const {
        auto it = cache_.find(x);
        if (it == cache_.end()) return std::nullopt;
        return it->second;
    }

    void store(const FeatureSubset& x, double cost) { cache_.emplace(x, cost); }

private:
    std::unordered_map<FeatureSubset, double, FeatureSubset::Hash> cache_;
};

inline double evaluate_counted(const CostFunction& cost, const FeatureSubset& x,
                               EvaluationLedger& ledger) {
    if (auto hit = ledger.lookup(x)) return *hit;
    double v = cost(x);
    ledger.store(x, v);
    return v;
}

/**
 * Generator of cost functions that are decomposable in U-shaped chain curves
 * by construction:
 *
 *   c(X) = u(|X|) + sum of delta_i over i in X
 *
 * where u strictly decreases to a valley and strictly increases after it,
 * with every adjacent gap at least `gap`, and every delta_i is nonnegative
 * and strictly below gap / (2n). A chain step changes |X| by one and adds or
 * removes a single delta, so the step inherits the sign of the u step and
 * every maximal chain is U-shaped. The deltas are pairwise distinct, which
 * makes the global minimum unique: the valley-size subset collecting the
 * smallest deltas.
 */
struct SyntheticUInstance {
    int n = 0;
    int valley = 0;
    double gap = 1.0;
    std::vector<double> u;      // n + 1 values indexed by cardinality
    std::vector<double> delta;  // n values, distinct, each < gap / (2n)

    double evaluate(const FeatureSubset& x) const {
        double acc = u[static_cast<std::size_t>(x.count())];
        for (int i = 0; i < n; ++i)
            if (x.test(i)) acc += delta[static_cast<std::size_t>(i)];
        return acc;
    }

    CostFunction cost() const {
        return CostFunction(n, [inst = *this](const FeatureSubset& x) {
            return inst.evaluate(x);
        });
    }
};

SyntheticUInstance make_synthetic_instance(int n, std::uint64_t seed);

inline CostFunction synth_u_instance(int n, std::uint64_t seed) {
    return make_synthetic_instance(n, seed).cost();
}

} // namespace ucurve

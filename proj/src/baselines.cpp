#include "ucurve/baselines.hpp"

#include <algorithm>

namespace ucurve {

namespace {

struct SizedBest {
    FeatureSubset subset;
    double cost;
};

} // namespace

BaselineOutcome sffs(const CostFunction& cost, const SffsConfig& config,
                     std::size_t result_capacity) {
    if (config.delta < 0)
        throw std::invalid_argument("sffs: delta must be nonnegative");
    if (config.target_dim && (*config.target_dim < 0 || *config.target_dim > cost.degree()))
        throw std::invalid_argument("sffs: target_dim outside 0..degree");

    const int n = cost.degree();
    BaselineOutcome out(result_capacity);
    std::vector<std::optional<SizedBest>> best(static_cast<std::size_t>(n) + 1);

    auto record = [&](const FeatureSubset& x, double c) {
        auto& slot = best[static_cast<std::size_t>(x.count())];
        if (!slot || c < slot->cost) slot = SizedBest{x, c};
    };
    auto best_size = [&]() {
        int arg = 0;
        double v = best[0]->cost;
        for (int k = 1; k <= n; ++k) {
            auto& slot = best[static_cast<std::size_t>(k)];
            if (slot && slot->cost < v) {
                v = slot->cost;
                arg = k;
            }
        }
        return arg;
    };
    auto stop_size = [&]() {
        int base = config.target_dim ? *config.target_dim : best_size();
        return std::min(n, base + config.delta);
    };

    FeatureSubset x = FeatureSubset::empty_set(n);
    record(x, evaluate_counted(cost, x, out.ledger));
    int k = 0;

    while (k < stop_size()) {
        // forward: cheapest inclusion, lowest index on ties
        std::optional<int> pick;
        double pick_cost = 0;
        for (int i = 0; i < n; ++i) {
            if (x.test(i)) continue;
            double c = evaluate_counted(cost, x.with_bit(i), out.ledger);
            if (!pick || c < pick_cost) {
                pick = i;
                pick_cost = c;
            }
        }
        if (!pick) break;
        x.set(*pick);
        ++k;
        record(x, pick_cost);

        // floating backward: drop features while that strictly improves the
        // recorded best of the smaller size
        while (k >= 2) {
            std::optional<int> drop;
            double drop_cost = 0;
            for (int i = 0; i < n; ++i) {
                if (!x.test(i)) continue;
                double c = evaluate_counted(cost, x.without_bit(i), out.ledger);
                if (!drop || c < drop_cost) {
                    drop = i;
                    drop_cost = c;
                }
            }
            if (!drop || drop_cost >= best[static_cast<std::size_t>(k) - 1]->cost) break;
            x.reset(*drop);
            --k;
            record(x, drop_cost);
        }
    }

    for (const auto& slot : best)
        if (slot) out.results.insert(slot->subset, slot->cost);
    return out;
}

BaselineOutcome exhaustive(const CostFunction& cost, std::size_t result_capacity,
                           bool allow_large) {
    const int n = cost.degree();
    if (n > kExhaustiveGuard && !allow_large)
        throw std::invalid_argument("exhaustive: degree " + std::to_string(n) + " above guard " +
                                    std::to_string(kExhaustiveGuard) +
                                    "; pass the explicit override to enumerate anyway");
    BaselineOutcome out(result_capacity);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        FeatureSubset x(n);
        for (int i = 0; i < n; ++i)
            if ((bits >> i) & 1u) x.set(i);
        out.results.insert(x, evaluate_counted(cost, x, out.ledger));
    }
    return out;
}

} // namespace ucurve

#pragma once

#include <optional>

#include "ucurve/cost.hpp"
#include "ucurve/results.hpp"

namespace ucurve {

// Degrees above this need an explicit opt-in before the exhaustive sweep
// agrees to enumerate 2^n subsets.
inline constexpr int kExhaustiveGuard = 24;

struct SffsConfig {
    int delta = 3;                 // how far past the best size the sweep climbs
    std::optional<int> target_dim; // fixed stop at target_dim + delta when set
};

struct BaselineOutcome {
    ResultList results;
    EvaluationLedger ledger;

    BaselineOutcome(std::size_t capacity) : results(capacity) {}
};

/**
 * Sequential forward floating selection, minimizing. Starting from the empty
 * set, each round adds the feature whose inclusion costs least (ties go to
 * the lowest feature index), then keeps removing features while a removal
 * lands strictly below the best recorded subset of that smaller size. The
 * best subset of every visited size is recorded; the sweep stops once the
 * working size reaches target_dim + delta, or, without a target, delta past
 * the best size seen so far (capped at the degree). The returned list ranks
 * the recorded per-size bests.
 */
BaselineOutcome sffs(const CostFunction& cost, const SffsConfig& config,
                     std::size_t result_capacity = 1);

// Evaluates every subset. Refuses degrees above kExhaustiveGuard unless
// allow_large is set.
BaselineOutcome exhaustive(const CostFunction& cost, std::size_t result_capacity = 1,
                           bool allow_large = false);

} // namespace ucurve

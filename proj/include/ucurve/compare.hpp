#pragma once

#include <optional>
#include <string>

#include "ucurve/cost.hpp"
#include "ucurve/report.hpp"
#include "ucurve/search.hpp"

namespace ucurve {

struct CompareOptions {
    std::uint64_t seed = 1;
    int repeats = 5;
    int delta = 3;
    DirectionPolicy direction{};
    // budget for the threshold-stopped search when the complete run is
    // unavailable to prove optimality
    std::uint64_t fallback_budget = 100000;
    bool skip_complete = false;  // leave the UCC columns as NA
    bool force_complete = false; // run UCC above the exhaustive-style guard
};

struct CompareOutcome {
    CompareRow row;
    double sffs_best = 0.0;
    double uc_best_mean = 0.0;
    std::optional<double> ucc_best;
};

/**
 * Benchmarks one cost function: SFFS once, then the complete search (UCC)
 * and the threshold-stopped search (UC, which stops at the first cost
 * strictly below the SFFS best, or equal to it when the complete run proved
 * that best optimal) over `repeats` seeds. Node counts and times of the
 * stochastic runs are means over the repeats. Winner is UC when the mean UC
 * best lands strictly below the SFFS best, EQUAL when it matches, and SFFS
 * in the degenerate case of a budget-stopped run that never caught up.
 */
CompareOutcome compare_algorithms(const std::string& test_name, const CostFunction& cost,
                                  const CompareOptions& options);

} // namespace ucurve

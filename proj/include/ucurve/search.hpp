#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "ucurve/cost.hpp"
#include "ucurve/restriction.hpp"
#include "ucurve/results.hpp"
#include "ucurve/rng.hpp"

namespace ucurve {

enum class Direction { down_up, up_down };

struct DirectionPolicy {
    enum class Kind { fixed, adaptive };
    Kind kind = Kind::fixed;
    double p = 0.5;  // probability of a bottom-up iteration under `fixed`

    static DirectionPolicy fixed(double p) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("DirectionPolicy: p must lie in [0,1]");
        return DirectionPolicy{Kind::fixed, p};
    }
    static DirectionPolicy adaptive() { return DirectionPolicy{Kind::adaptive, 0.5}; }
};

struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t result_capacity = 1;
    DirectionPolicy direction{};
    std::optional<std::uint64_t> max_evaluations;  // budgeted mode when set
    std::optional<int> exhaust_trial_limit;        // adjacency-scan heuristic
    std::optional<double> target_cost;             // stop once strictly beaten
    bool stop_on_equal_target = false;             // ... or matched, when set
    std::ostream* trace = nullptr;                 // tab-separated event log
};

// One walked chain: the minimum found, the element whose cost increase
// stopped the walk (absent when the walk ran out of lattice), and the chain
// element preceding the last strict descent (absent when the walk never
// strictly descended). In a bottom-up walk the penultimate sits below the
// minimum and the stop element above it; a top-down walk mirrors both. Both
// flank elements cost strictly more than the minimum, which is what licenses
// cutting the intervals behind them.
struct ChainRecord {
    Direction direction;
    std::optional<FeatureSubset> penultimate;
    FeatureSubset minimum;
    double minimum_cost = 0.0;
    std::optional<FeatureSubset> stop;
};

enum class StopReason { space_exhausted, budget_exhausted, target_reached };

struct SearchOutcome {
    ResultList results;
    EvaluationLedger ledger;
    StopReason stop = StopReason::space_exhausted;
    std::uint64_t iterations = 0;
    // local minima popped by the exhausting procedure, split by lattice half
    std::uint64_t minima_lower_half = 0;
    std::uint64_t minima_upper_half = 0;

    SearchOutcome(std::size_t capacity) : results(capacity) {}
};

/**
 * Branch-and-bound minimizer over the subset lattice for cost functions
 * whose restriction to maximal chains is U-shaped. The search keeps two
 * antichain restriction sets describing the region already covered; every
 * iteration walks a chain from a minimal (or maximal) element of the
 * residual space, stops at the first strict cost increase, prunes the
 * intervals the U-shape condition licenses, and exhausts the neighbourhood
 * of the chain minimum. Complete runs visit or prune the entire lattice.
 */
class UCurveSearch {
public:
    UCurveSearch(const CostFunction& cost, const SearchConfig& config);

    SearchOutcome run();

    // stepwise interface, exposed for tests and diagnostics
    Direction select_direction();
    std::optional<ChainRecord> down_up_direction();
    std::optional<ChainRecord> up_down_direction();
    void minimum_exhausting(const FeatureSubset& m);
    bool exhausted() const;

    const RestrictionSet& lower() const { return lower_; }
    const RestrictionSet& upper() const { return upper_; }
    const ResultList& results() const { return results_; }
    const EvaluationLedger& ledger() const { return ledger_; }
    bool stop_requested() const { return stop_.has_value(); }

    SearchOutcome take_outcome();

private:
    double eval(const FeatureSubset& x);
    void record_result(const FeatureSubset& x, double cost);
    void add_restriction(Side side, const FeatureSubset& a, const char* origin);
    std::optional<ChainRecord> walk_chain(Direction dir);
    void trace_line(const std::string& line);

    const CostFunction& cost_;
    SearchConfig config_;
    int n_;
    SeededRng rng_;
    RestrictionSet lower_;
    RestrictionSet upper_;
    ResultList results_;
    EvaluationLedger ledger_;
    std::uint64_t iterations_ = 0;
    std::uint64_t minima_lower_half_ = 0;
    std::uint64_t minima_upper_half_ = 0;
    std::optional<StopReason> stop_;
};

inline SearchOutcome run_ucurve(const CostFunction& cost, const SearchConfig& config) {
    UCurveSearch search(cost, config);
    return search.run();
}

} // namespace ucurve

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ucurve/baselines.hpp"
#include "ucurve/cost.hpp"
#include "ucurve/search.hpp"

using namespace ucurve;
using namespace ucurve::testing;

namespace {

std::vector<std::vector<std::string>> parse_trace(const std::string& text) {
    std::vector<std::vector<std::string>> events;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::size_t from = 0;
        while (true) {
            std::size_t tab = line.find('\t', from);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(from));
                break;
            }
            fields.push_back(line.substr(from, tab - from));
            from = tab + 1;
        }
        events.push_back(std::move(fields));
    }
    return events;
}

// all subsets of the cut interval: [empty, anchor] on the lower side,
// [anchor, full] on the upper side
std::vector<FeatureSubset> cut_interval(const FeatureSubset& anchor, Side side) {
    const int n = anchor.width();
    std::vector<FeatureSubset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        FeatureSubset x = FeatureSubset::empty_set(n);
        for (int b = 0; b < n; ++b)
            if ((mask >> b) & 1) x.set(b);
        const bool inside = side == Side::lower ? x.is_subset_of(anchor)
                                                : anchor.is_subset_of(x);
        if (inside) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("complete search finds the unique minimum of the four-feature table") {
    auto cost = four_feature_table();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SearchConfig config;
        config.seed = seed;
        auto outcome = run_ucurve(cost, config);
        CHECK(outcome.results.best().subset.to_string() == "0111");
        CHECK(outcome.results.best().cost == 1.0);
        CHECK(outcome.stop == StopReason::space_exhausted);
        CHECK(outcome.ledger.distinct_count() <= 16);
        CHECK(outcome.iterations >= 1);
    }
}

TEST_CASE("both fixed walk directions solve the table") {
    auto cost = four_feature_table();
    for (double p : {0.0, 1.0}) {
        SearchConfig config;
        config.seed = 5;
        config.direction = DirectionPolicy::fixed(p);
        auto outcome = run_ucurve(cost, config);
        CHECK(outcome.results.best().subset.to_string() == "0111");
        CHECK(outcome.stop == StopReason::space_exhausted);
    }
}

TEST_CASE("plateaus never license a cut that hides the minimum") {
    // flat cost 5 with a lone dip at 0100 and an expensive top; every chain
    // is U-shaped, yet a cut anchored on a plateau element would cover the
    // dip without evidence
    CostFunction cost(4, [](const FeatureSubset& x) {
        if (x.to_string() == "0100") return 3.0;
        if (x.count() == 4) return 9.0;
        return 5.0;
    });
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        for (double p : {0.0, 0.5, 1.0}) {
            SearchConfig config;
            config.seed = seed;
            config.direction = DirectionPolicy::fixed(p);
            auto outcome = run_ucurve(cost, config);
            CHECK(outcome.results.best().subset.to_string() == "0100");
            CHECK(outcome.results.best().cost == 3.0);
        }
    }
}

TEST_CASE("exhausting a minimum pushes cheaper neighbours and prunes costlier ones") {
    auto cost = exhausting_table();
    std::ostringstream trace;
    SearchConfig config;
    config.seed = 1;
    config.result_capacity = 8;  // so every popped minimum lands in the list
    config.trace = &trace;
    UCurveSearch search(cost, config);
    search.minimum_exhausting(FeatureSubset::from_string("010101"));

    auto events = parse_trace(trace.str());
    std::vector<std::vector<std::string>> pushes;
    std::vector<std::vector<std::string>> pops;
    for (const auto& e : events) {
        if (e[0] == "push") pushes.push_back(e);
        if (e[0] == "pop") pops.push_back(e);
    }
    // the seed element enters first, then its two surviving neighbours in
    // scan order: lower adjacents by ascending feature, then upper ones
    REQUIRE(pushes.size() >= 3);
    CHECK(pushes[0][1] == "010101");
    CHECK(pushes[1][1] == "010001");
    CHECK(pushes[1][2] == "9");
    CHECK(pushes[2][1] == "010111");
    CHECK(pushes[2][2] == "10");

    // every pushed element is eventually popped and recorded
    CHECK(pops.size() == pushes.size());
    for (const auto& p : pushes) {
        bool popped = false;
        for (const auto& q : pops)
            if (q[1] == p[1]) popped = true;
        CHECK(popped);
    }
    // the popped minima all landed in the result updates
    bool seed_elem_recorded = false;
    for (const auto& e : events)
        if (e[0] == "result" && e[1] == "010101") seed_elem_recorded = true;
    CHECK(seed_elem_recorded);

    // costlier neighbours were cut on the side they were scanned from
    bool lower_cut = false;
    bool upper_cut = false;
    for (const auto& e : events) {
        if (e[0] != "restrict") continue;
        if (e[1] == "lower" && e[2] == "000101" && e[3] == "exhaust") lower_cut = true;
        if (e[1] == "upper" && e[2] == "110101" && e[3] == "exhaust") upper_cut = true;
    }
    CHECK(lower_cut);
    CHECK(upper_cut);
}

TEST_CASE("the scan-abandon limit pops after enough consecutive costlier neighbours") {
    auto cost = exhausting_table();
    std::ostringstream trace;
    SearchConfig config;
    config.seed = 1;
    config.exhaust_trial_limit = 1;
    config.trace = &trace;
    UCurveSearch search(cost, config);
    search.minimum_exhausting(FeatureSubset::from_string("010101"));

    auto events = parse_trace(trace.str());
    // the very first scanned neighbour (000101, costlier) trips the limit,
    // so the seed pops without pushing anything else
    REQUIRE(events.size() >= 3);
    CHECK(events[0][0] == "push");
    CHECK(events[1][0] == "restrict");
    CHECK(events[1][2] == "000101");
    CHECK(events[2][0] == "pop");
    CHECK(events[2][1] == "010101");
}

TEST_CASE("chain cuts are justified by the recorded walk costs") {
    // parse complete traces and re-check every chain-origin cut: the whole
    // cut interval must cost strictly more than the walk's minimum
    SeededRng meta(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(meta.below(5));
        auto inst = make_synthetic_instance(n, 300 + static_cast<std::uint64_t>(trial));
        auto cost = inst.cost();
        std::ostringstream trace;
        SearchConfig config;
        config.seed = static_cast<std::uint64_t>(trial);
        config.trace = &trace;
        auto outcome = run_ucurve(cost, config);
        auto brute = exhaustive(cost);
        CHECK(outcome.results.best().subset == brute.results.best().subset);

        auto events = parse_trace(trace.str());
        double block_min = 0.0;
        bool in_block = false;
        for (const auto& e : events) {
            if (e[0] == "chain") {
                const double c = std::stod(e[3]);
                block_min = in_block ? std::min(block_min, c) : c;
                in_block = true;
                continue;
            }
            if (e[0] == "restrict" && e[3] == "chain") {
                REQUIRE(in_block);
                const Side side = e[1] == "lower" ? Side::lower : Side::upper;
                const FeatureSubset anchor = FeatureSubset::from_string(e[2]);
                for (const auto& x : cut_interval(anchor, side)) {
                    CHECK(cost(x) > block_min);
                }
            }
        }
    }
}

TEST_CASE("evaluation budget stops the search and is never overspent") {
    auto cost = synth_u_instance(12, 7);
    SearchConfig free_run;
    free_run.seed = 3;
    const auto complete = run_ucurve(cost, free_run);
    const std::uint64_t full_cost = complete.ledger.distinct_count();
    REQUIRE(full_cost >= 2);

    for (std::uint64_t budget : {std::uint64_t{1}, full_cost / 2, full_cost - 1}) {
        SearchConfig config;
        config.seed = 3;
        config.max_evaluations = budget;
        auto outcome = run_ucurve(cost, config);
        CHECK(outcome.stop == StopReason::budget_exhausted);
        CHECK(outcome.ledger.distinct_count() <= budget);
        CHECK_FALSE(outcome.results.empty());
    }
    // a budget the complete run never reaches leaves the stop untouched
    SearchConfig config;
    config.seed = 3;
    config.max_evaluations = full_cost + 10;
    auto outcome = run_ucurve(cost, config);
    CHECK(outcome.stop == StopReason::space_exhausted);
    CHECK(outcome.results.best().subset == complete.results.best().subset);
}

TEST_CASE("target cost stops the search") {
    auto cost = four_feature_table();

    SearchConfig strict;
    strict.seed = 11;
    strict.target_cost = 2.0;  // only 0111 at cost 1 lies strictly below
    auto outcome = run_ucurve(cost, strict);
    CHECK(outcome.stop == StopReason::target_reached);
    CHECK(outcome.results.best().cost < 2.0);

    // nothing lies strictly below the optimum, so the run completes
    SearchConfig unreachable;
    unreachable.seed = 11;
    unreachable.target_cost = 1.0;
    outcome = run_ucurve(cost, unreachable);
    CHECK(outcome.stop == StopReason::space_exhausted);
    CHECK(outcome.results.best().cost == 1.0);

    // ... unless equality is accepted
    SearchConfig equal_ok;
    equal_ok.seed = 11;
    equal_ok.target_cost = 1.0;
    equal_ok.stop_on_equal_target = true;
    outcome = run_ucurve(cost, equal_ok);
    CHECK(outcome.stop == StopReason::target_reached);
    CHECK(outcome.results.best().cost == 1.0);
    CHECK(outcome.results.best().subset.to_string() == "0111");
}

TEST_CASE("identical seeds replay identical traces") {
    auto cost = synth_u_instance(9, 21);
    auto run_traced = [&cost](std::uint64_t seed) {
        std::ostringstream trace;
        SearchConfig config;
        config.seed = seed;
        config.direction = DirectionPolicy::adaptive();
        config.trace = &trace;
        run_ucurve(cost, config);
        return trace.str();
    };
    CHECK(run_traced(5) == run_traced(5));
    CHECK(run_traced(6) == run_traced(6));
}

TEST_CASE("fixed direction policies only walk their own way") {
    auto cost = synth_u_instance(8, 33);
    auto walk_tags = [&cost](double p) {
        std::ostringstream trace;
        SearchConfig config;
        config.seed = 9;
        config.direction = DirectionPolicy::fixed(p);
        config.trace = &trace;
        run_ucurve(cost, config);
        std::set<std::string> tags;
        for (const auto& e : parse_trace(trace.str()))
            if (e[0] == "chain") tags.insert(e[1]);
        return tags;
    };
    const std::set<std::string> down{"down_up"};
    const std::set<std::string> up{"up_down"};
    CHECK(walk_tags(1.0) == down);
    CHECK(walk_tags(0.0) == up);
    CHECK_THROWS_AS(DirectionPolicy::fixed(1.5), std::invalid_argument);
}

TEST_CASE("adaptive direction keeps per-half minima tallies") {
    auto cost = synth_u_instance(9, 55);
    SearchConfig config;
    config.seed = 2;
    config.direction = DirectionPolicy::adaptive();
    auto outcome = run_ucurve(cost, config);
    CHECK(outcome.stop == StopReason::space_exhausted);
    CHECK(outcome.minima_lower_half + outcome.minima_upper_half >= 1);
}

TEST_CASE("result capacity keeps a sorted prefix of everything seen") {
    auto cost = synth_u_instance(8, 14);
    SearchConfig config;
    config.seed = 4;
    config.result_capacity = 5;
    auto outcome = run_ucurve(cost, config);
    const auto& entries = outcome.results.entries();
    REQUIRE(entries.size() == 5);
    for (std::size_t i = 1; i < entries.size(); ++i)
        CHECK(entries[i - 1].cost <= entries[i].cost);
    auto brute = exhaustive(cost);
    CHECK(outcome.results.best().subset == brute.results.best().subset);
    CHECK(outcome.results.best().cost == brute.results.best().cost);
}

TEST_CASE("ledger count equals the number of cost-body invocations") {
    auto counter = std::make_shared<long>(0);
    auto base = synth_u_instance(9, 62);
    auto cost = counting_cost(base, counter);
    SearchConfig config;
    config.seed = 8;
    auto outcome = run_ucurve(cost, config);
    CHECK(outcome.stop == StopReason::space_exhausted);
    CHECK(*counter == static_cast<long>(outcome.ledger.distinct_count()));
    CHECK(outcome.ledger.distinct_count() <= (1u << 9));
}

TEST_CASE("budgeted search handles degrees past the word size") {
    auto cost = synth_u_instance(70, 19);
    SearchConfig config;
    config.seed = 12;
    config.max_evaluations = 400;
    auto outcome = run_ucurve(cost, config);
    CHECK(outcome.stop == StopReason::budget_exhausted);
    CHECK(outcome.ledger.distinct_count() <= 400);
    CHECK(outcome.results.best().subset.width() == 70);
}

TEST_CASE("search copes with a cost that is not u-decomposable") {
    auto cost = oscillating_cost();
    auto brute = exhaustive(cost);
    REQUIRE(brute.results.best().subset.to_string() == "111110");
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        SearchConfig config;
        config.seed = seed;
        auto outcome = run_ucurve(cost, config);
        CHECK(outcome.stop == StopReason::space_exhausted);
        CHECK_FALSE(outcome.results.empty());
        if (outcome.results.best().subset == brute.results.best().subset) ++hits;
    }
    // no guarantee without the chain condition, but the neighbourhood
    // exhaustion recovers the optimum for a healthy share of seeds
    CHECK(hits >= 100);
    MESSAGE("oscillating fixture recovery rate: ", hits, "/200 seeds");
}

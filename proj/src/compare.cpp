#include "ucurve/compare.hpp"

#include <chrono>
#include <sstream>

#include "ucurve/baselines.hpp"

namespace ucurve {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_mean(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string fmt_time(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(4);
    os << v;
    return os.str();
}

} // namespace

CompareOutcome compare_algorithms(const std::string& test_name, const CostFunction& cost,
                                  const CompareOptions& options) {
    if (options.repeats < 1)
        throw std::invalid_argument("compare_algorithms: repeats must be positive");

    CompareOutcome out;
    out.row.test = test_name;

    auto t0 = std::chrono::steady_clock::now();
    BaselineOutcome sffs_run = sffs(cost, SffsConfig{options.delta, std::nullopt});
    double sffs_time = seconds_since(t0);
    out.sffs_best = sffs_run.results.best().cost;
    out.row.nodes_sffs = std::to_string(sffs_run.ledger.distinct_count());
    out.row.time_sffs = fmt_time(sffs_time);

    bool complete_allowed =
        !options.skip_complete && (cost.degree() <= kExhaustiveGuard || options.force_complete);

    double ucc_nodes = 0, ucc_time = 0;
    if (complete_allowed) {
        for (int r = 0; r < options.repeats; ++r) {
            SearchConfig cfg;
            cfg.seed = options.seed + static_cast<std::uint64_t>(r);
            cfg.direction = options.direction;
            auto t1 = std::chrono::steady_clock::now();
            SearchOutcome run = run_ucurve(cost, cfg);
            ucc_time += seconds_since(t1);
            ucc_nodes += static_cast<double>(run.ledger.distinct_count());
            double best = run.results.best().cost;
            if (!out.ucc_best || best < *out.ucc_best) out.ucc_best = best;
        }
        ucc_nodes /= options.repeats;
        ucc_time /= options.repeats;
        out.row.nodes_ucc = fmt_mean(ucc_nodes);
        out.row.time_ucc = fmt_time(ucc_time);
    } else {
        out.row.nodes_ucc = "NA";
        out.row.time_ucc = "NA";
    }

    double uc_nodes = 0, uc_time = 0, uc_best_acc = 0;
    for (int r = 0; r < options.repeats; ++r) {
        SearchConfig cfg;
        cfg.seed = options.seed + static_cast<std::uint64_t>(r);
        cfg.direction = options.direction;
        cfg.target_cost = out.sffs_best;
        cfg.stop_on_equal_target = out.ucc_best && *out.ucc_best == out.sffs_best;
        if (!complete_allowed) cfg.max_evaluations = options.fallback_budget;
        auto t1 = std::chrono::steady_clock::now();
        SearchOutcome run = run_ucurve(cost, cfg);
        uc_time += seconds_since(t1);
        uc_nodes += static_cast<double>(run.ledger.distinct_count());
        uc_best_acc += run.results.best().cost;
    }
    uc_nodes /= options.repeats;
    uc_time /= options.repeats;
    out.uc_best_mean = uc_best_acc / options.repeats;
    out.row.nodes_uc = fmt_mean(uc_nodes);
    out.row.time_uc = fmt_time(uc_time);

    if (out.uc_best_mean < out.sffs_best)
        out.row.winner = "UC";
    else if (out.uc_best_mean == out.sffs_best)
        out.row.winner = "EQUAL";
    else
        out.row.winner = "SFFS";
    return out;
}

} // namespace ucurve

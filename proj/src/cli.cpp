#include "ucurve/report.hpp"

#include "ucurve/baselines.hpp"
#include "ucurve/compare.hpp"
#include "ucurve/cost.hpp"
#include "ucurve/dataset.hpp"
#include "ucurve/mce.hpp"
#include "ucurve/restriction.hpp"
#include "ucurve/rng.hpp"
#include "ucurve/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ucurve {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string trim_copy(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::string strip_quotes(std::string text) {
    if (text.size() >= 2 && ((text.front() == '"' && text.back() == '"') ||
                             (text.front() == '\'' && text.back() == '\''))) {
        return text.substr(1, text.size() - 2);
    }
    return text;
}

// Turns a flat key=value file into command-line tokens for the given
// subcommand, dropping keys the explicit arguments already set so that flags
// always override the file.  Comma lists expand only for repeatable options.
std::vector<std::string> config_tokens(const CLI::App& sub,
                                       const std::vector<std::string>& explicit_args,
                                       const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);

    std::vector<std::string> tokens;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim_copy(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " is not key=value: " + stripped);
        }
        const std::string key = trim_copy(stripped.substr(0, eq));
        const std::string value = strip_quotes(trim_copy(stripped.substr(eq + 1)));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " has an empty key");
        }
        if (key == "config") continue;

        const std::string flag = "--" + key;
        const bool given_explicitly =
            std::any_of(explicit_args.begin(), explicit_args.end(), [&](const std::string& a) {
                return a == flag || a.rfind(flag + "=", 0) == 0;
            });
        if (given_explicitly) continue;

        const CLI::Option* opt = sub.get_option_no_throw(flag);
        if (value.empty()) {
            tokens.push_back(flag);
        } else if (opt != nullptr && opt->get_items_expected_max() > 1) {
            std::istringstream pieces(value);
            std::string piece;
            while (std::getline(pieces, piece, ',')) {
                tokens.push_back(flag + "=" + trim_copy(piece));
            }
        } else {
            // Unknown keys become unknown tokens; the parser reports them.
            tokens.push_back(flag + "=" + value);
        }
    }
    return tokens;
}

// Splices config-file tokens into args right after the subcommand name.
void apply_config_file(const CLI::App& app, std::vector<std::string>& args) {
    if (args.empty()) return;
    const CLI::App* sub = app.get_subcommand_no_throw(args.front());
    if (sub == nullptr) return;

    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(std::string("--config=").size());
        }
    }
    if (path.empty()) return;

    const auto tokens = config_tokens(*sub, args, path);
    args.insert(args.begin() + 1, tokens.begin(), tokens.end());
}

DirectionPolicy parse_direction(const std::string& text) {
    if (text == "adaptive") return DirectionPolicy::adaptive();
    if (text.rfind("p=", 0) == 0) {
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(text.substr(2), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid direction: " + text);
        }
        if (used != text.size() - 2) throw std::invalid_argument("invalid direction: " + text);
        return DirectionPolicy::fixed(p);
    }
    throw std::invalid_argument("invalid direction: " + text + " (expected p=<float> or adaptive)");
}

DataFormat parse_data_format(const std::string& text) {
    if (text == "csv-last") return DataFormat::csv_labeled_last;
    if (text == "csv-first") return DataFormat::csv_labeled_first;
    if (text == "svmlight") return DataFormat::svmlight_like;
    throw std::invalid_argument("unknown data format: " + text);
}

long parse_step_arg(const std::string& step, const std::string& prefix) {
    const std::string tail = step.substr(prefix.size());
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tail, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid preprocess step: " + step);
    }
    if (used != tail.size() || value <= 0) {
        throw std::invalid_argument("invalid preprocess step: " + step);
    }
    return value;
}

// Sparse filters run first on the raw values; remaining steps apply in the
// order given.
Dataset apply_preprocess(Dataset data, const std::vector<std::string>& steps) {
    for (const auto& step : steps) {
        if (step.rfind("filter=", 0) == 0) {
            data = filter_sparse_features(data, parse_step_arg(step, "filter="));
        }
    }
    for (const auto& step : steps) {
        if (step.rfind("filter=", 0) == 0) continue;
        if (step == "binarize") {
            data = zscore_binarize(data);
        } else if (step.rfind("quantize=", 0) == 0) {
            data = quantize_levels(data, static_cast<int>(parse_step_arg(step, "quantize=")));
        } else {
            throw std::invalid_argument("unknown preprocess step: " + step);
        }
    }
    return data;
}

std::string basename_of(const std::string& path) {
    const auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string dataset_label(const std::string& path, const std::vector<std::string>& steps) {
    std::string label = basename_of(path);
    if (!steps.empty()) {
        label += "[";
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i != 0) label += ",";
            label += steps[i];
        }
        label += "]";
    }
    return label;
}

struct CostBundle {
    std::string id;
    int degree = 0;
    std::shared_ptr<CostFunction> cost;
};

CostBundle make_data_cost(const std::string& path, const std::string& format,
                          const std::vector<std::string>& steps) {
    Dataset data = load_dataset(path, parse_data_format(format));
    data = apply_preprocess(data, steps);
    if (data.class_count < 2) {
        throw DataError("dataset has fewer than 2 classes: " + path);
    }
    CostBundle bundle;
    bundle.id = dataset_label(path, steps);
    bundle.degree = data.feature_count;
    bundle.cost = std::make_shared<CostFunction>(make_pmce_cost(data));
    return bundle;
}

CostBundle make_synth_cost(int n, std::uint64_t synth_seed) {
    auto instance = make_synthetic_instance(n, synth_seed);
    CostBundle bundle;
    std::ostringstream id;
    id << "synth(n=" << n << ",seed=" << synth_seed << ")";
    bundle.id = id.str();
    bundle.degree = n;
    bundle.cost = std::make_shared<CostFunction>(instance.cost());
    return bundle;
}

struct RunOptions {
    std::string algo;
    std::string mode = "ucc";
    std::string cost = "pmce";
    std::string data;
    std::string format = "csv-last";
    std::vector<std::string> preprocess;
    int n = 8;
    std::uint64_t synth_seed = 42;
    std::uint64_t seed = 1;
    int repeats = 1;
    int delta = 3;
    int target_dim = 0;        // 0 = unset
    std::size_t capacity = 1;
    std::string direction = "p=0.5";
    std::uint64_t budget = 0;  // 0 = unset
    int exhaust_trials = 0;    // 0 = unset
    std::string trace_path;
    bool force = false;
    std::string out = "md";
};

std::string run_config_echo(const RunOptions& o) {
    std::ostringstream echo;
    echo << "algo=" << o.algo;
    if (o.algo == "ucurve") {
        echo << ";mode=" << o.mode << ";direction=" << o.direction;
        if (o.budget != 0) echo << ";budget=" << o.budget;
        if (o.exhaust_trials != 0) echo << ";exhaust-trials=" << o.exhaust_trials;
    }
    if (o.algo == "sffs") {
        echo << ";delta=" << o.delta;
        if (o.target_dim != 0) echo << ";target-dim=" << o.target_dim;
    }
    echo << ";capacity=" << o.capacity << ";cost=" << o.cost;
    return echo.str();
}

int cmd_run(const RunOptions& o) {
    const CostBundle bundle =
        o.cost == "synth" ? make_synth_cost(o.n, o.synth_seed)
                          : make_data_cost(o.data, o.format, o.preprocess);

    std::ofstream trace_out;
    if (!o.trace_path.empty()) {
        trace_out.open(o.trace_path);
        if (!trace_out) throw DataError("cannot open trace file: " + o.trace_path);
    }

    const std::string config_echo = run_config_echo(o);
    std::vector<RunReport> rows;
    for (int r = 0; r < o.repeats; ++r) {
        const std::uint64_t run_seed = o.seed + static_cast<std::uint64_t>(r);
        RunReport row;
        row.dataset_id = bundle.id;
        row.config_echo = config_echo;
        row.seed = std::to_string(run_seed);
        Timer timer;
        if (o.algo == "ucurve") {
            SearchConfig config;
            config.seed = run_seed;
            config.result_capacity = o.capacity;
            config.direction = parse_direction(o.direction);
            if (o.mode == "uc") config.max_evaluations = o.budget;
            if (o.exhaust_trials != 0) config.exhaust_trial_limit = o.exhaust_trials;
            if (trace_out.is_open()) config.trace = &trace_out;
            auto outcome = run_ucurve(*bundle.cost, config);
            row.algorithm = o.mode == "uc" ? "ucurve-uc" : "ucurve-ucc";
            row.best_subset = outcome.results.best().subset.to_string();
            row.best_cost = outcome.results.best().cost;
            row.computed_nodes = static_cast<double>(outcome.ledger.distinct_count());
        } else if (o.algo == "sffs") {
            SffsConfig config;
            config.delta = o.delta;
            if (o.target_dim != 0) config.target_dim = o.target_dim;
            auto outcome = sffs(*bundle.cost, config, o.capacity);
            row.algorithm = "sffs";
            row.best_subset = outcome.results.best().subset.to_string();
            row.best_cost = outcome.results.best().cost;
            row.computed_nodes = static_cast<double>(outcome.ledger.distinct_count());
        } else {
            auto outcome = exhaustive(*bundle.cost, o.capacity, o.force);
            row.algorithm = "exhaustive";
            row.best_subset = outcome.results.best().subset.to_string();
            row.best_cost = outcome.results.best().cost;
            row.computed_nodes = static_cast<double>(outcome.ledger.distinct_count());
        }
        row.wall_time_seconds = timer.seconds();
        rows.push_back(std::move(row));
    }

    if (o.repeats > 1) {
        RunReport mean;
        mean.algorithm = rows.front().algorithm;
        mean.dataset_id = bundle.id;
        mean.config_echo = config_echo;
        mean.seed = "mean";
        std::size_t best_at = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            mean.best_cost += rows[i].best_cost;
            mean.computed_nodes += rows[i].computed_nodes;
            mean.wall_time_seconds += rows[i].wall_time_seconds;
            if (rows[i].best_cost < rows[best_at].best_cost) best_at = i;
        }
        const double count = static_cast<double>(rows.size());
        mean.best_cost /= count;
        mean.computed_nodes /= count;
        mean.wall_time_seconds /= count;
        mean.best_subset = rows[best_at].best_subset;
        rows.push_back(std::move(mean));
    }

    std::cout << format_run_reports(rows, parse_output_format(o.out));
    return 0;
}

struct CompareCliOptions {
    std::vector<std::string> data;
    std::string format = "csv-last";
    std::vector<std::string> preprocess;
    std::string cost = "pmce";
    std::vector<int> synth_n;
    std::uint64_t synth_seed = 42;
    std::uint64_t seed = 1;
    int repeats = 5;
    int delta = 3;
    std::string direction = "p=0.5";
    std::uint64_t budget = 100000;
    bool skip_complete = false;
    bool force = false;
    std::string out = "md";
};

int cmd_compare(const CompareCliOptions& o) {
    CompareOptions options;
    options.seed = o.seed;
    options.repeats = o.repeats;
    options.delta = o.delta;
    options.direction = parse_direction(o.direction);
    options.fallback_budget = o.budget;
    options.skip_complete = o.skip_complete;
    options.force_complete = o.force;

    std::vector<CostBundle> bundles;
    if (o.cost == "synth") {
        std::vector<int> sizes = o.synth_n.empty() ? std::vector<int>{8} : o.synth_n;
        for (int n : sizes) bundles.push_back(make_synth_cost(n, o.synth_seed));
    } else {
        for (const auto& path : o.data) {
            bundles.push_back(make_data_cost(path, o.format, o.preprocess));
        }
    }

    std::vector<CompareRow> rows;
    for (const auto& bundle : bundles) {
        rows.push_back(compare_algorithms(bundle.id, *bundle.cost, options).row);
    }
    std::cout << format_compare_rows(rows, parse_output_format(o.out));
    return 0;
}

struct SelftestOptions {
    int trials = 200;
    int cases = 1000;
    int n_max = 12;
    std::uint64_t seed = 7;
};

FeatureSubset random_subset(SeededRng& rng, int n) {
    FeatureSubset s = FeatureSubset::empty_set(n);
    for (int b = 0; b < n; ++b) {
        if (rng.below(2) == 1) s.set(b);
    }
    return s;
}

int cmd_selftest(const SelftestOptions& o) {
    bool ok = true;

    int matched = 0;
    const int span = o.n_max - 3;  // degrees cycle 4..n_max
    for (int i = 0; i < o.trials; ++i) {
        const int n = 4 + (span > 0 ? i % span : 0);
        auto instance = make_synthetic_instance(n, o.seed * 1000 + static_cast<std::uint64_t>(i));
        auto cost = instance.cost();
        SearchConfig config;
        config.seed = o.seed + static_cast<std::uint64_t>(i);
        auto searched = run_ucurve(cost, config);
        auto brute = exhaustive(cost);
        const auto& got = searched.results.best();
        const auto& want = brute.results.best();
        if (got.subset == want.subset && got.cost == want.cost) {
            ++matched;
        } else {
            ok = false;
            std::cout << "MISMATCH trial " << i << " n=" << n << " search="
                      << got.subset.to_string() << " cost=" << got.cost
                      << " exhaustive=" << want.subset.to_string() << " cost=" << want.cost
                      << "\n";
        }
    }
    std::cout << "oracle equivalence: " << matched << "/" << o.trials
              << " optima match exhaustive\n";

    SeededRng rng(o.seed + 9001);
    int membership_ok = 0;
    int minimality_ok = 0;
    int duality_ok = 0;
    for (int i = 0; i < o.cases; ++i) {
        const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(o.n_max - 1)));
        RestrictionSet lower(Side::lower, n);
        std::vector<FeatureSubset> raw;
        const int inserts = 1 + static_cast<int>(rng.below(4));
        for (int j = 0; j < inserts; ++j) {
            FeatureSubset r = random_subset(rng, n);
            while (r.all()) r = random_subset(rng, n);  // keep the space nonempty
            raw.push_back(r);
            lower.insert(r);
        }
        const FeatureSubset probe = random_subset(rng, n);

        bool covered = false;
        for (const auto& r : raw) {
            if (probe.is_subset_of(r)) covered = true;
        }
        if (in_lower_space(probe, lower) == !covered) {
            ++membership_ok;
        } else {
            ok = false;
            std::cout << "MEMBERSHIP MISMATCH case " << i << " n=" << n << " probe="
                      << probe.to_string() << "\n";
        }

        const FeatureSubset low = minimal_element(lower, rng);
        bool minimal = in_lower_space(low, lower);
        for (int b = 0; b < n && minimal; ++b) {
            if (low.test(b) && in_lower_space(low.without_bit(b), lower)) minimal = false;
        }
        if (minimal) {
            ++minimality_ok;
        } else {
            ok = false;
            std::cout << "MINIMALITY MISMATCH case " << i << " n=" << n << " element="
                      << low.to_string() << "\n";
        }

        RestrictionSet mirror(Side::upper, n);
        for (const auto& r : raw) mirror.insert(r.complement());
        if (in_upper_space(probe.complement(), mirror) == in_lower_space(probe, lower)) {
            ++duality_ok;
        } else {
            ok = false;
            std::cout << "DUALITY MISMATCH case " << i << " n=" << n << " probe="
                      << probe.to_string() << "\n";
        }
    }
    std::cout << "restriction membership: " << membership_ok << "/" << o.cases << " agree\n";
    std::cout << "minimal-element minimality: " << minimality_ok << "/" << o.cases
              << " minimal\n";
    std::cout << "lower/upper duality: " << duality_ok << "/" << o.cases << " agree\n";
    std::cout << (ok ? "selftest OK\n" : "selftest FAILED\n");
    return ok ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"U-curve subset search benchmark"};
    app.require_subcommand(0, 1);

    RunOptions run_opts;
    auto* run = app.add_subcommand("run", "Run one algorithm and report per-run results");
    std::string run_config;
    run->add_option("--config", run_config,
                    "Flat key=value file supplying defaults; explicit flags win");
    run->add_option("--algo", run_opts.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"ucurve", "sffs", "exhaustive"}));
    run->add_option("--mode", run_opts.mode, "ucurve stop mode: ucc runs to exhaustion, uc needs --budget")
        ->check(CLI::IsMember({"uc", "ucc"}));
    run->add_option("--cost", run_opts.cost, "Cost function")
        ->check(CLI::IsMember({"pmce", "synth"}));
    run->add_option("--data", run_opts.data, "Dataset path (pmce cost)");
    run->add_option("--format", run_opts.format, "Dataset format")
        ->check(CLI::IsMember({"csv-last", "csv-first", "svmlight"}));
    run->add_option("--preprocess", run_opts.preprocess,
                    "Preprocess step: binarize, quantize=k, filter=m (repeatable)");
    run->add_option("--n", run_opts.n, "Synthetic instance degree")->check(CLI::Range(1, 1024));
    run->add_option("--synth-seed", run_opts.synth_seed, "Synthetic instance seed");
    run->add_option("--seed", run_opts.seed, "Run seed (repeat r uses seed+r)");
    run->add_option("--repeats", run_opts.repeats, "Independent runs")->check(CLI::Range(1, 1000000));
    run->add_option("--delta", run_opts.delta, "sffs sweep margin")->check(CLI::Range(0, 1024));
    run->add_option("--target-dim", run_opts.target_dim, "sffs target dimension")
        ->check(CLI::Range(1, 1024));
    run->add_option("--result-capacity", run_opts.capacity, "Best-list capacity")
        ->check(CLI::Range(1, 1000000));
    run->add_option("--direction", run_opts.direction, "ucurve direction policy: p=<float> or adaptive");
    run->add_option("--budget", run_opts.budget, "Evaluation budget (ucurve --mode uc)");
    run->add_option("--exhaust-trials", run_opts.exhaust_trials,
                    "Consecutive costlier adjacents before abandoning an exhausting scan");
    run->add_option("--trace", run_opts.trace_path, "Write a per-event trace (requires --repeats 1)");
    run->add_flag("--force", run_opts.force, "Allow exhaustive above the degree guard");
    run->add_option("--out", run_opts.out, "Output format")
        ->check(CLI::IsMember({"csv", "md", "json-lines"}));

    CompareCliOptions cmp_opts;
    auto* cmp = app.add_subcommand("compare", "Benchmark sffs vs budgeted and complete ucurve");
    std::string cmp_config;
    cmp->add_option("--config", cmp_config,
                    "Flat key=value file supplying defaults; explicit flags win");
    cmp->add_option("--data", cmp_opts.data, "Dataset path (repeatable; one table row each)");
    cmp->add_option("--format", cmp_opts.format, "Dataset format")
        ->check(CLI::IsMember({"csv-last", "csv-first", "svmlight"}));
    cmp->add_option("--preprocess", cmp_opts.preprocess,
                    "Preprocess step: binarize, quantize=k, filter=m (repeatable)");
    cmp->add_option("--cost", cmp_opts.cost, "Cost function")
        ->check(CLI::IsMember({"pmce", "synth"}));
    cmp->add_option("--n", cmp_opts.synth_n, "Synthetic degree (repeatable; one row each)");
    cmp->add_option("--synth-seed", cmp_opts.synth_seed, "Synthetic instance seed");
    cmp->add_option("--seed", cmp_opts.seed, "Base seed; repeat r uses seed+r");
    cmp->add_option("--repeats", cmp_opts.repeats, "Runs per ucurve column")
        ->check(CLI::Range(1, 1000000));
    cmp->add_option("--delta", cmp_opts.delta, "sffs sweep margin")->check(CLI::Range(0, 1024));
    cmp->add_option("--direction", cmp_opts.direction, "ucurve direction policy");
    cmp->add_option("--budget", cmp_opts.budget, "UC fallback budget when UCC is unavailable")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 62));
    cmp->add_flag("--skip-complete", cmp_opts.skip_complete, "Skip the UCC column");
    cmp->add_flag("--force", cmp_opts.force, "Run UCC above the degree guard");
    cmp->add_option("--out", cmp_opts.out, "Output format")
        ->check(CLI::IsMember({"csv", "md", "json-lines"}));

    SelftestOptions self_opts;
    auto* self = app.add_subcommand("selftest", "Search-vs-exhaustive and lattice property checks");
    std::string self_config;
    self->add_option("--config", self_config,
                     "Flat key=value file supplying defaults; explicit flags win");
    self->add_option("--trials", self_opts.trials, "Search-vs-exhaustive trials")
        ->check(CLI::Range(1, 1000000));
    self->add_option("--cases", self_opts.cases, "Restriction property cases")
        ->check(CLI::Range(1, 1000000));
    self->add_option("--n", self_opts.n_max, "Maximum instance degree")->check(CLI::Range(4, 16));
    self->add_option("--seed", self_opts.seed, "Base seed");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        apply_config_file(app, args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
    std::reverse(args.begin(), args.end());  // parse(vector) consumes back-to-front

    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(run)) {
            if (run_opts.cost == "pmce" && run_opts.data.empty()) {
                throw std::invalid_argument("--cost pmce requires --data");
            }
            if (run_opts.cost == "synth" && run->count("--data") != 0) {
                throw std::invalid_argument("--cost synth does not take --data");
            }
            if (run_opts.algo != "ucurve" && run->count("--mode") != 0) {
                throw std::invalid_argument("--mode applies only to --algo ucurve");
            }
            if (run_opts.algo != "ucurve" &&
                (run->count("--direction") != 0 || run->count("--exhaust-trials") != 0)) {
                throw std::invalid_argument(
                    "--direction/--exhaust-trials apply only to --algo ucurve");
            }
            if (run_opts.algo != "sffs" &&
                (run->count("--delta") != 0 || run->count("--target-dim") != 0)) {
                throw std::invalid_argument("--delta/--target-dim apply only to --algo sffs");
            }
            if (run_opts.budget != 0 && !(run_opts.algo == "ucurve" && run_opts.mode == "uc")) {
                throw std::invalid_argument("--budget requires --algo ucurve --mode uc");
            }
            if (run_opts.algo == "ucurve" && run_opts.mode == "uc" && run_opts.budget == 0) {
                throw std::invalid_argument("--mode uc requires --budget");
            }
            if (!run_opts.trace_path.empty() && run_opts.repeats != 1) {
                throw std::invalid_argument("--trace requires --repeats 1");
            }
            if (!run_opts.trace_path.empty() && run_opts.algo != "ucurve") {
                throw std::invalid_argument("--trace applies only to --algo ucurve");
            }
            return cmd_run(run_opts);
        }
        if (app.got_subcommand(cmp)) {
            if (cmp_opts.cost == "pmce" && cmp_opts.data.empty()) {
                throw std::invalid_argument("--cost pmce requires at least one --data");
            }
            if (cmp_opts.cost == "synth" && !cmp_opts.data.empty()) {
                throw std::invalid_argument("--cost synth does not take --data");
            }
            return cmd_compare(cmp_opts);
        }
        if (app.got_subcommand(self)) {
            return cmd_selftest(self_opts);
        }
        std::cout << app.help();
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ucurve

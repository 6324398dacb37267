#include "ucurve/search.hpp"

#include <sstream>

namespace ucurve {

namespace {

std::string fmt_cost(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

UCurveSearch::UCurveSearch(const CostFunction& cost, const SearchConfig& config)
    : cost_(cost),
      config_(config),
      n_(cost.degree()),
      rng_(config.seed),
      lower_(Side::lower, n_),
      upper_(Side::upper, n_),
      results_(config.result_capacity) {
    if (config_.max_evaluations && *config_.max_evaluations == 0)
        throw std::invalid_argument("SearchConfig: max_evaluations must be positive");
    if (config_.exhaust_trial_limit && *config_.exhaust_trial_limit < 1)
        throw std::invalid_argument("SearchConfig: exhaust_trial_limit must be positive");
}

void UCurveSearch::trace_line(const std::string& line) {
    if (config_.trace) *config_.trace << line << '\n';
}

double UCurveSearch::eval(const FeatureSubset& x) {
    double v = evaluate_counted(cost_, x, ledger_);
    if (!stop_) {
        if (config_.target_cost &&
            (v < *config_.target_cost ||
             (config_.stop_on_equal_target && v == *config_.target_cost))) {
            record_result(x, v);
            stop_ = StopReason::target_reached;
        } else if (config_.max_evaluations &&
                   ledger_.distinct_count() >= *config_.max_evaluations) {
            record_result(x, v);
            stop_ = StopReason::budget_exhausted;
        }
    }
    return v;
}

void UCurveSearch::record_result(const FeatureSubset& x, double cost) {
    if (results_.insert(x, cost))
        trace_line("result\t" + x.to_string() + "\t" + fmt_cost(cost));
}

void UCurveSearch::add_restriction(Side side, const FeatureSubset& a, const char* origin) {
    bool changed = side == Side::lower ? update_lower_restriction(lower_, a)
                                       : update_upper_restriction(upper_, a);
    if (changed)
        trace_line(std::string("restrict\t") + (side == Side::lower ? "lower" : "upper") +
                   "\t" + a.to_string() + "\t" + origin);
}

Direction UCurveSearch::select_direction() {
    double p;
    if (config_.direction.kind == DirectionPolicy::Kind::fixed) {
        p = config_.direction.p;
    } else {
        // bias toward the half of the lattice that produced more minima so far
        std::uint64_t total = minima_lower_half_ + minima_upper_half_;
        p = static_cast<double>(1 + minima_lower_half_) / static_cast<double>(2 + total);
    }
    return rng_.real01() < p ? Direction::down_up : Direction::up_down;
}

std::optional<ChainRecord> UCurveSearch::walk_chain(Direction dir) {
    const bool up = dir == Direction::down_up;
    FeatureSubset start = up ? minimal_element(lower_, rng_) : maximal_element(upper_, rng_);

    // a start element already covered from the other side is absorbed without
    // any cost evaluation and the iteration ends
    bool covered = up ? !in_upper_space(start, upper_) : !in_lower_space(start, lower_);
    if (covered) {
        trace_line("discard\t" + start.to_string());
        add_restriction(up ? Side::lower : Side::upper, start, "discard");
        return std::nullopt;
    }

    SearchSpaceView space{&lower_, &upper_};
    const char* tag = up ? "down_up" : "up_down";

    std::optional<FeatureSubset> penultimate;
    std::optional<FeatureSubset> current;  // chain minimum so far
    double current_cost = 0.0;
    FeatureSubset next = start;
    double next_cost = eval(next);
    trace_line(std::string("chain\t") + tag + "\t" + next.to_string() + "\t" + fmt_cost(next_cost));
    if (stop_)
        return ChainRecord{dir, std::nullopt, next, next_cost, std::nullopt};
    std::optional<FeatureSubset> stop_elem;

    // walk while the cost keeps from rising strictly; plateaus are traversed.
    // The penultimate anchor moves only on strict descents: everything below
    // the element preceding the last strict drop is provably costlier than
    // the chain minimum, while a plateau step would justify nothing.
    while (!stop_) {
        if (current && next_cost < current_cost) penultimate = current;
        current = next;
        current_cost = next_cost;
        auto options = adjacents_in_space(*current, space, up ? Side::upper : Side::lower);
        if (options.empty()) break;
        next = options[static_cast<std::size_t>(rng_.below(options.size()))];
        next_cost = eval(next);
        trace_line(std::string("chain\t") + tag + "\t" + next.to_string() + "\t" +
                   fmt_cost(next_cost));
        if (next_cost > current_cost) {
            stop_elem = next;
            break;
        }
    }

    ChainRecord record{dir, penultimate, *current, current_cost, stop_elem};
    if (stop_) {
        // premature unwind: the cuts below need the strict-increase evidence,
        // so only the best chain element is recorded
        record_result(*current, current_cost);
        return record;
    }

    if (penultimate)
        add_restriction(up ? Side::lower : Side::upper, *penultimate, "chain");
    if (stop_elem)
        add_restriction(up ? Side::upper : Side::lower, *stop_elem, "chain");
    record_result(*current, current_cost);
    minimum_exhausting(*current);
    return record;
}

std::optional<ChainRecord> UCurveSearch::down_up_direction() {
    return walk_chain(Direction::down_up);
}

std::optional<ChainRecord> UCurveSearch::up_down_direction() {
    return walk_chain(Direction::up_down);
}

void UCurveSearch::minimum_exhausting(const FeatureSubset& m) {
    SearchSpaceView space{&lower_, &upper_};
    std::vector<FeatureSubset> stack;
    std::unordered_set<FeatureSubset, FeatureSubset::Hash> on_stack;
    stack.push_back(m);
    on_stack.insert(m);
    trace_line("push\t" + m.to_string() + "\t" + fmt_cost(eval(m)));

    while (!stack.empty() && !stop_) {
        FeatureSubset t = stack.back();
        double t_cost = eval(t);
        bool exhausted_here = true;
        int costlier_streak = 0;
        for (int pass = 0; pass < 2 && !stop_; ++pass) {
            Side side = pass == 0 ? Side::lower : Side::upper;
            auto adj = adjacents_in_space(t, space, side);
            bool limit_hit = false;
            for (auto& a : adj) {
                if (on_stack.count(a)) continue;
                if (!space.contains(a)) continue;  // cuts made earlier in this scan
                double a_cost = eval(a);
                if (stop_) return;
                if (a_cost <= t_cost) {
                    stack.push_back(a);
                    on_stack.insert(stack.back());
                    trace_line("push\t" + stack.back().to_string() + "\t" + fmt_cost(a_cost));
                    exhausted_here = false;
                    costlier_streak = 0;
                } else {
                    add_restriction(side, a, "exhaust");
                    ++costlier_streak;
                    if (config_.exhaust_trial_limit &&
                        costlier_streak >= *config_.exhaust_trial_limit) {
                        limit_hit = true;
                        break;
                    }
                }
            }
            if (limit_hit) break;
        }
        if (stop_) return;
        if (exhausted_here) {
            stack.pop_back();
            on_stack.erase(t);
            trace_line("pop\t" + t.to_string() + "\t" + fmt_cost(t_cost));
            record_result(t, t_cost);
            add_restriction(Side::lower, t, "exhaust");
            add_restriction(Side::upper, t, "exhaust");
            if (2 * t.count() <= n_)
                ++minima_lower_half_;
            else
                ++minima_upper_half_;
        }
    }
}

bool UCurveSearch::exhausted() const { return space_is_exhausted(lower_, upper_); }

SearchOutcome UCurveSearch::take_outcome() {
    SearchOutcome out(config_.result_capacity);
    out.results = std::move(results_);
    out.ledger = std::move(ledger_);
    out.stop = stop_.value_or(StopReason::space_exhausted);
    out.iterations = iterations_;
    out.minima_lower_half = minima_lower_half_;
    out.minima_upper_half = minima_upper_half_;
    return out;
}

SearchOutcome UCurveSearch::run() {
    while (true) {
        if (exhausted()) {
            stop_.reset();  // completion, not an interruption
            break;
        }
        if (stop_) break;
        ++iterations_;
        Direction dir = select_direction();
        if (dir == Direction::down_up)
            down_up_direction();
        else
            up_down_direction();
    }
    return take_outcome();
}

} // namespace ucurve

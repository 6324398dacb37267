#pragma once

#include <vector>

#include "ucurve/cost.hpp"
#include "ucurve/dataset.hpp"
#include "ucurve/feature_subset.hpp"

namespace ucurve {

/**
 * Per-pattern class tallies of a dataset projected onto a feature subset.
 * Only the tallies matter for the entropy: the pattern identities are
 * dropped once grouping is done.
 */
struct MceModel {
    long t = 0;       // total samples
    int class_count = 0;
    std::vector<std::vector<long>> pattern_class_counts;
};

// Groups the samples by their values on the features in x. An empty x yields
// a single pattern holding every sample.
MceModel project_dataset(const Dataset& d, const FeatureSubset& x);

/**
 * Penalized mean conditional entropy of the label given the projected
 * pattern:
 *
 *   N / t  +  sum over patterns seen at least twice of  P(x) * H(Y | x)
 *
 * where N counts the patterns observed exactly once and H uses logarithms in
 * base class_count, with 0 log 0 taken as 0. Values land in [0, 1]: the
 * penalty term treats a once-seen pattern as maximally uninformative, which
 * punishes subsets so large that the samples cannot populate their pattern
 * space.
 */
double penalized_mce(const MceModel& model);

// Cost function over subsets of d's features: project, then score.
CostFunction make_pmce_cost(const Dataset& d);

} // namespace ucurve

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ucurve {

// Raised for malformed input files and preprocessing dead ends. The CLI maps
// it to its data-error exit code.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

enum class DataFormat { csv_labeled_last, csv_labeled_first, svmlight_like };

/**
 * Labeled samples with numeric feature values. Labels are dense class
 * indices assigned in first-appearance order of the raw label tokens.
 * Loaders fill raw numeric values; the preprocessing steps below produce the
 * small nonnegative integer values the entropy cost expects. provenance
 * accumulates one line per pipeline step.
 */
struct Dataset {
    int feature_count = 0;
    int class_count = 0;
    std::vector<std::vector<double>> rows;  // sample major, feature_count wide
    std::vector<int> labels;                // parallel to rows
    std::vector<std::string> provenance;

    long sample_count() const { return static_cast<long>(rows.size()); }
};

Dataset load_dataset(const std::string& path, DataFormat format);

// Per-feature z-score against the population standard deviation, then
// threshold at zero: values at or below the mean map to 0, above it to 1.
// A zero-variance feature maps to all zeros.
Dataset zscore_binarize(const Dataset& d);

// Keeps features observed with a nonzero raw value in at least min_nonnull
// samples. Dropping every feature is an error.
Dataset filter_sparse_features(const Dataset& d, int min_nonnull);

// Per-feature equal-frequency quantization into k levels; a feature with
// fewer distinct values than k uses its distinct-value count instead.
Dataset quantize_levels(const Dataset& d, int k);

// CSV re-export, label last, provenance as leading '#' comment lines.
void save_csv(const Dataset& d, const std::string& path);

} // namespace ucurve

#include "ucurve/mce.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <unordered_map>

namespace ucurve {

namespace {

bool byte_packable(const Dataset& d) {
    for (const auto& r : d.rows)
        for (double v : r) {
            if (v < 0.0 || v > 255.0) return false;
            if (v != static_cast<double>(static_cast<long long>(v))) return false;
        }
    return true;
}

// Packs the selected values of one sample into a string key. Small integer
// data uses one byte per value; anything else falls back to the raw double
// bytes, which still groups exactly equal values together.
std::string pack_key(const std::vector<double>& row, const std::vector<int>& sel, bool bytes) {
    std::string key;
    if (bytes) {
        key.resize(sel.size());
        for (std::size_t k = 0; k < sel.size(); ++k)
            key[k] = static_cast<char>(static_cast<unsigned char>(
                row[static_cast<std::size_t>(sel[k])]));
    } else {
        key.resize(sel.size() * sizeof(double));
        for (std::size_t k = 0; k < sel.size(); ++k)
            std::memcpy(key.data() + k * sizeof(double),
                        &row[static_cast<std::size_t>(sel[k])], sizeof(double));
    }
    return key;
}

MceModel project_impl(const Dataset& d, const FeatureSubset& x, bool bytes) {
    MceModel m;
    m.t = d.sample_count();
    m.class_count = d.class_count;
    std::vector<int> sel;
    for (int i = 0; i < x.width(); ++i)
        if (x.test(i)) sel.push_back(i);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(static_cast<std::size_t>(m.t) * 2);
    for (long i = 0; i < m.t; ++i) {
        std::string key = pack_key(d.rows[static_cast<std::size_t>(i)], sel, bytes);
        auto [it, fresh] = index.emplace(std::move(key), m.pattern_class_counts.size());
        if (fresh)
            m.pattern_class_counts.emplace_back(static_cast<std::size_t>(m.class_count), 0);
        ++m.pattern_class_counts[it->second][static_cast<std::size_t>(
            d.labels[static_cast<std::size_t>(i)])];
    }
    return m;
}

} // namespace

MceModel project_dataset(const Dataset& d, const FeatureSubset& x) {
    if (x.width() != d.feature_count)
        throw std::invalid_argument("project_dataset: subset width " +
                                    std::to_string(x.width()) + " vs " +
                                    std::to_string(d.feature_count) + " features");
    if (d.sample_count() == 0)
        throw std::invalid_argument("project_dataset: empty dataset");
    return project_impl(d, x, byte_packable(d));
}

double penalized_mce(const MceModel& model) {
    if (model.t <= 0)
        throw std::invalid_argument("penalized_mce: model holds no samples");
    if (model.class_count < 2)
        throw std::invalid_argument("penalized_mce: needs at least two classes");
    double t = static_cast<double>(model.t);
    double log_base = std::log(static_cast<double>(model.class_count));
    long singles = 0;
    double acc = 0.0;
    for (const auto& counts : model.pattern_class_counts) {
        long m = 0;
        for (long c : counts) m += c;
        if (m == 1) {
            ++singles;
            continue;
        }
        double h = 0.0;
        for (long c : counts) {
            if (c == 0) continue;
            double p = static_cast<double>(c) / static_cast<double>(m);
            h -= p * std::log(p);
        }
        acc += (static_cast<double>(m) / t) * (h / log_base);
    }
    return static_cast<double>(singles) / t + acc;
}

CostFunction make_pmce_cost(const Dataset& d) {
    if (d.sample_count() == 0)
        throw std::invalid_argument("make_pmce_cost: empty dataset");
    if (d.class_count < 2)
        throw std::invalid_argument("make_pmce_cost: needs at least two classes");
    bool bytes = byte_packable(d);
    auto data = std::make_shared<Dataset>(d);
    return CostFunction(d.feature_count, [data, bytes](const FeatureSubset& x) {
        return penalized_mce(project_impl(*data, x, bytes));
    });
}

} // namespace ucurve

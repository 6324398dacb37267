#include "ucurve/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ucurve {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool comma = line.find(',') != std::string::npos;
    for (char ch : line) {
        bool sep = comma ? ch == ',' : (ch == ' ' || ch == '\t');
        if (sep) {
            if (comma || !cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (comma || !cur.empty()) out.push_back(cur);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_value(const std::string& token, long row) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw DataError("row " + std::to_string(row) + ": non-numeric value '" + token + "'");
    }
    if (used != token.size())
        throw DataError("row " + std::to_string(row) + ": non-numeric value '" + token + "'");
    return v;
}

int label_index(const std::string& token, std::vector<std::string>& seen) {
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] == token) return static_cast<int>(i);
    seen.push_back(token);
    return static_cast<int>(seen.size()) - 1;
}

Dataset load_csv(std::istream& in, const std::string& path, bool label_first) {
    Dataset d;
    std::vector<std::string> classes;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        std::vector<std::string> fields = split_fields(body);
        for (auto& f : fields) f = trimmed(f);
        if (fields.size() < 2)
            throw DataError("row " + std::to_string(row) + ": expected at least one feature and a label");
        std::string label = label_first ? fields.front() : fields.back();
        std::vector<std::string> values(fields.begin() + (label_first ? 1 : 0),
                                        fields.end() - (label_first ? 0 : 1));
        if (d.feature_count == 0)
            d.feature_count = static_cast<int>(values.size());
        else if (static_cast<int>(values.size()) != d.feature_count)
            throw DataError("row " + std::to_string(row) + ": has " + std::to_string(values.size()) +
                            " features, expected " + std::to_string(d.feature_count));
        std::vector<double> r;
        r.reserve(values.size());
        for (const auto& v : values) r.push_back(parse_value(v, row));
        d.rows.push_back(std::move(r));
        d.labels.push_back(label_index(label, classes));
    }
    if (d.rows.empty())
        throw DataError(path + ": no samples");
    d.class_count = static_cast<int>(classes.size());
    d.provenance.push_back("loaded " + path + " (" + std::to_string(d.rows.size()) + " samples, " +
                           std::to_string(d.feature_count) + " features, " +
                           std::to_string(d.class_count) + " classes)");
    return d;
}

Dataset load_svmlight(std::istream& in, const std::string& path) {
    // "label idx:value idx:value ..." with 1-based sparse feature indices;
    // absent features are zero, degree is the largest index in the file
    struct Raw {
        int label;
        std::vector<std::pair<int, double>> entries;
    };
    std::vector<Raw> raws;
    std::vector<std::string> classes;
    int max_index = 0;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        std::istringstream fields(body);
        std::string label;
        fields >> label;
        Raw raw;
        raw.label = label_index(label, classes);
        std::string pair;
        while (fields >> pair) {
            std::size_t colon = pair.find(':');
            if (colon == std::string::npos)
                throw DataError("row " + std::to_string(row) + ": expected idx:value, got '" + pair + "'");
            long idx = 0;
            try {
                idx = std::stol(pair.substr(0, colon));
            } catch (const std::exception&) {
                idx = 0;
            }
            if (idx < 1)
                throw DataError("row " + std::to_string(row) + ": bad feature index in '" + pair + "'");
            double v = parse_value(pair.substr(colon + 1), row);
            raw.entries.emplace_back(static_cast<int>(idx), v);
            max_index = std::max(max_index, static_cast<int>(idx));
        }
        raws.push_back(std::move(raw));
    }
    if (raws.empty())
        throw DataError(path + ": no samples");
    if (max_index == 0)
        throw DataError(path + ": no feature entries");
    Dataset d;
    d.feature_count = max_index;
    d.class_count = static_cast<int>(classes.size());
    for (const auto& raw : raws) {
        std::vector<double> r(static_cast<std::size_t>(max_index), 0.0);
        for (auto [idx, v] : raw.entries) r[static_cast<std::size_t>(idx) - 1] = v;
        d.rows.push_back(std::move(r));
        d.labels.push_back(raw.label);
    }
    d.provenance.push_back("loaded " + path + " (" + std::to_string(d.rows.size()) + " samples, " +
                           std::to_string(d.feature_count) + " features, " +
                           std::to_string(d.class_count) + " classes)");
    return d;
}

} // namespace

Dataset load_dataset(const std::string& path, DataFormat format) {
    std::ifstream in(path);
    if (!in)
        throw DataError(path + ": cannot open");
    switch (format) {
        case DataFormat::csv_labeled_last: return load_csv(in, path, false);
        case DataFormat::csv_labeled_first: return load_csv(in, path, true);
        case DataFormat::svmlight_like: return load_svmlight(in, path);
    }
    throw DataError(path + ": unknown format");
}

Dataset zscore_binarize(const Dataset& d) {
    Dataset out = d;
    long t = d.sample_count();
    if (t == 0)
        throw DataError("zscore_binarize: empty dataset");
    for (int j = 0; j < d.feature_count; ++j) {
        double mean = 0;
        for (const auto& r : d.rows) mean += r[static_cast<std::size_t>(j)];
        mean /= static_cast<double>(t);
        double var = 0;
        for (const auto& r : d.rows) {
            double c = r[static_cast<std::size_t>(j)] - mean;
            var += c * c;
        }
        var /= static_cast<double>(t);
        double sd = std::sqrt(var);
        for (long i = 0; i < t; ++i) {
            double raw = d.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            double z = sd == 0.0 ? 0.0 : (raw - mean) / sd;
            out.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = z > 0.0 ? 1.0 : 0.0;
        }
    }
    out.provenance.push_back("zscore_binarize");
    return out;
}

Dataset filter_sparse_features(const Dataset& d, int min_nonnull) {
    if (min_nonnull < 0)
        throw std::invalid_argument("filter_sparse_features: min_nonnull must be nonnegative");
    std::vector<int> kept;
    for (int j = 0; j < d.feature_count; ++j) {
        long nonnull = 0;
        for (const auto& r : d.rows)
            if (r[static_cast<std::size_t>(j)] != 0.0) ++nonnull;
        if (nonnull >= min_nonnull) kept.push_back(j);
    }
    if (kept.empty())
        throw DataError("filter_sparse_features: no feature has " + std::to_string(min_nonnull) +
                        " nonzero samples");
    Dataset out;
    out.feature_count = static_cast<int>(kept.size());
    out.class_count = d.class_count;
    out.labels = d.labels;
    out.rows.reserve(d.rows.size());
    for (const auto& r : d.rows) {
        std::vector<double> nr;
        nr.reserve(kept.size());
        for (int j : kept) nr.push_back(r[static_cast<std::size_t>(j)]);
        out.rows.push_back(std::move(nr));
    }
    out.provenance = d.provenance;
    std::string ids;
    for (int j : kept) ids += (ids.empty() ? "" : " ") + std::to_string(j + 1);
    out.provenance.push_back("filter_sparse_features min_nonnull=" + std::to_string(min_nonnull) +
                             " kept " + std::to_string(kept.size()) + " of " +
                             std::to_string(d.feature_count) + " features: " + ids);
    return out;
}

Dataset quantize_levels(const Dataset& d, int k) {
    if (k < 1)
        throw std::invalid_argument("quantize_levels: k must be positive");
    long t = d.sample_count();
    if (t == 0)
        throw DataError("quantize_levels: empty dataset");
    Dataset out = d;
    for (int j = 0; j < d.feature_count; ++j) {
        // first-rank rule: equal raw values share the level of their first
        // sorted position, so a value never straddles a bin boundary
        std::vector<double> sorted;
        sorted.reserve(static_cast<std::size_t>(t));
        for (const auto& r : d.rows) sorted.push_back(r[static_cast<std::size_t>(j)]);
        std::sort(sorted.begin(), sorted.end());
        std::map<double, long> first_rank;
        for (long i = static_cast<long>(sorted.size()) - 1; i >= 0; --i)
            first_rank[sorted[static_cast<std::size_t>(i)]] = i;
        int eff = std::min<int>(k, static_cast<int>(first_rank.size()));
        for (long i = 0; i < t; ++i) {
            double raw = d.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            long rank = first_rank[raw];
            long level = rank * eff / t;
            out.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<double>(level);
        }
    }
    out.provenance.push_back("quantize_levels k=" + std::to_string(k));
    return out;
}

void save_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw DataError(path + ": cannot open for writing");
    for (const auto& p : d.provenance) out << "# " << p << '\n';
    for (long i = 0; i < d.sample_count(); ++i) {
        const auto& r = d.rows[static_cast<std::size_t>(i)];
        for (double v : r) {
            if (v == static_cast<double>(static_cast<long long>(v)))
                out << static_cast<long long>(v);
            else
                out << v;
            out << ',';
        }
        out << d.labels[static_cast<std::size_t>(i)] << '\n';
    }
}

} // namespace ucurve

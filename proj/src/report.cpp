#include "ucurve/report.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ucurve {

namespace {

std::string fmt_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

// Node counts are integers except in mean rows; print them without a
// trailing ".0" when they are whole.
std::string fmt_nodes(double v) {
    if (v >= 0.0 && v == std::floor(v) && v < 9.007199254740992e15) {
        std::ostringstream out;
        out << static_cast<unsigned long long>(v);
        return out.str();
    }
    return fmt_double(v);
}

nlohmann::ordered_json nodes_json(double v) {
    if (v >= 0.0 && v == std::floor(v) && v < 9.007199254740992e15) {
        return nlohmann::ordered_json(static_cast<unsigned long long>(v));
    }
    return nlohmann::ordered_json(v);
}

template <typename Row>
std::string md_table(const std::vector<std::string>& header,
                     const std::vector<Row>& rows,
                     const std::function<std::vector<std::string>(const Row&)>& cells) {
    std::ostringstream out;
    auto emit = [&out](const std::vector<std::string>& fields) {
        out << "|";
        for (const auto& f : fields) out << " " << f << " |";
        out << "\n";
    };
    emit(header);
    std::vector<std::string> rule(header.size(), "---");
    emit(rule);
    for (const auto& row : rows) emit(cells(row));
    return out.str();
}

template <typename Row>
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<Row>& rows,
                      const std::function<std::vector<std::string>(const Row&)>& cells) {
    std::ostringstream out;
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) out << ",";
            out << fields[i];
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(cells(row));
    return out.str();
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "md") return OutputFormat::md;
    if (name == "json-lines") return OutputFormat::json_lines;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string format_run_reports(const std::vector<RunReport>& rows, OutputFormat format) {
    std::vector<std::string> header(kRunReportColumns.begin(), kRunReportColumns.end());
    std::function<std::vector<std::string>(const RunReport&)> cells =
        [](const RunReport& r) -> std::vector<std::string> {
        return {r.algorithm,
                r.best_subset,
                fmt_double(r.best_cost),
                fmt_nodes(r.computed_nodes),
                fmt_double(r.wall_time_seconds),
                r.seed,
                r.dataset_id,
                r.config_echo};
    };
    switch (format) {
        case OutputFormat::md:
            return md_table(header, rows, cells);
        case OutputFormat::csv:
            return csv_table(header, rows, cells);
        case OutputFormat::json_lines: {
            std::ostringstream out;
            for (const auto& r : rows) {
                nlohmann::ordered_json j;
                j["algorithm"] = r.algorithm;
                j["best_subset"] = r.best_subset;
                j["best_cost"] = r.best_cost;
                j["computed_nodes"] = nodes_json(r.computed_nodes);
                j["wall_time_seconds"] = r.wall_time_seconds;
                j["seed"] = r.seed;
                j["dataset"] = r.dataset_id;
                j["config"] = r.config_echo;
                out << j.dump() << "\n";
            }
            return out.str();
        }
    }
    throw std::logic_error("unreachable output format");
}

std::string format_compare_rows(const std::vector<CompareRow>& rows, OutputFormat format) {
    std::vector<std::string> header(kCompareColumns.begin(), kCompareColumns.end());
    std::function<std::vector<std::string>(const CompareRow&)> cells =
        [](const CompareRow& r) -> std::vector<std::string> {
        return {r.test,     r.winner,  r.nodes_sffs, r.nodes_uc,
                r.nodes_ucc, r.time_sffs, r.time_uc, r.time_ucc};
    };
    switch (format) {
        case OutputFormat::md:
            return md_table(header, rows, cells);
        case OutputFormat::csv:
            return csv_table(header, rows, cells);
        case OutputFormat::json_lines: {
            std::ostringstream out;
            for (const auto& r : rows) {
                nlohmann::ordered_json j;
                j["test"] = r.test;
                j["winner"] = r.winner;
                j["computed_nodes"] = {{"sffs", r.nodes_sffs},
                                       {"uc", r.nodes_uc},
                                       {"ucc", r.nodes_ucc}};
                j["time_seconds"] = {{"sffs", r.time_sffs},
                                     {"uc", r.time_uc},
                                     {"ucc", r.time_ucc}};
                out << j.dump() << "\n";
            }
            return out.str();
        }
    }
    throw std::logic_error("unreachable output format");
}

}  // namespace ucurve

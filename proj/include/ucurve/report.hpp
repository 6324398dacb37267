#pragma once

#include <array>
#include <string>
#include <vector>

namespace ucurve {

enum class OutputFormat { csv, md, json_lines };

// Accepts "csv", "md", "json-lines".
OutputFormat parse_output_format(const std::string& name);

// One row per run; aggregate rows use seed == "mean" and carry fractional
// node counts, hence the double.
struct RunReport {
    std::string algorithm;
    std::string best_subset;
    double best_cost = 0.0;
    double computed_nodes = 0.0;
    double wall_time_seconds = 0.0;
    std::string seed;
    std::string dataset_id;
    std::string config_echo;
};

inline constexpr std::array<const char*, 8> kRunReportColumns = {
    "algorithm",         "best_subset", "best_cost", "computed_nodes",
    "wall_time_seconds", "seed",        "dataset",   "config",
};

std::string format_run_reports(const std::vector<RunReport>& rows, OutputFormat format);

struct CompareRow {
    std::string test;
    std::string winner;
    std::string nodes_sffs;
    std::string nodes_uc;
    std::string nodes_ucc;
    std::string time_sffs;
    std::string time_uc;
    std::string time_ucc;
};

inline constexpr std::array<const char*, 8> kCompareColumns = {
    "Test",
    "Winner",
    "Computed nodes SFFS",
    "Computed nodes UC",
    "Computed nodes UCC",
    "Time SFFS",
    "Time UC",
    "Time UCC",
};

std::string format_compare_rows(const std::vector<CompareRow>& rows, OutputFormat format);

int run_cli(int argc, const char* const* argv);

}  // namespace ucurve

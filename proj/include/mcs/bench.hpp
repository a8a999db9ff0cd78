#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcs/graph.hpp"
#include "mcs/search.hpp"

namespace mcs {

/// A solver configuration under test, e.g. "rl" or "lsm+lum".
struct VariantSpec {
    Heuristic tag = Heuristic::mcsplit;
    bool lum = false;

    std::string name() const;
    static VariantSpec parse(std::string_view text);
};

std::vector<VariantSpec> parse_variant_list(std::string_view csv);

/// One benchmark execution: an instance under one variant.
struct RunRow {
    std::string instance;
    std::string variant;   // heuristic name without the +lum suffix
    bool lum = false;
    bool connected = false;
    bool error = false;    // instance failed to load; solved/size/nodes meaningless
    bool solved = false;
    int size = 0;
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    std::string series_name() const;
};

inline constexpr const char* kCsvHeader = "instance,variant,lum,connected,solved,size,nodes,seconds";

void write_csv(const std::vector<RunRow>& rows, std::ostream& out);
std::vector<RunRow> parse_csv(std::istream& in);

enum class InstanceClass { easy, moderate, tough };
const char* instance_class_name(InstanceClass c);

struct ClassifiedInstance {
    std::string instance;
    InstanceClass cls;
};

/// Easy: every variant solved within easy_secs. Tough: no variant solved.
/// Moderate: everything else.
std::vector<ClassifiedInstance> classify_instances(const std::vector<RunRow>& rows,
                                                   double easy_secs);

struct VariantGeomean {
    std::string series;
    double geomean_nodes = 0.0;
    int runs = 0;
};

/// Geometric-mean node counts per variant over the given instances.
std::vector<VariantGeomean> geomean_nodes(const std::vector<RunRow>& rows,
                                          const std::vector<std::string>& instances);

struct CactusSeries {
    std::string series;
    std::vector<std::pair<double, int>> points;  // (t seconds, instances solved within t)
};

/// Per-variant cumulative solved counts at each sorted solve time.
std::vector<CactusSeries> emit_cactus_data(const std::vector<RunRow>& rows);

void write_cactus_csv(const std::vector<CactusSeries>& series, std::ostream& out);

struct BenchConfig {
    std::filesystem::path list_path;
    std::vector<VariantSpec> variants;
    GraphFormat format = GraphFormat::binary;
    bool directed = false;
    bool labelled = false;
    bool connected = false;
    bool swap = false;
    double timeout_seconds = 1800.0;
    std::optional<std::uint64_t> node_budget;
    std::uint64_t t_short = kDefaultShortThreshold;
    std::uint64_t t_long = kDefaultLongThreshold;
    double easy_secs = 10.0;
    int jobs = 1;
};

/// List file: one instance per line, "<pattern> <target> [id]", '#'
/// comments. Relative paths resolve against the list file's directory;
/// when absent there, MCS_FIXTURE_DIR is tried as an alternate root.
struct InstanceEntry {
    std::filesystem::path pattern;
    std::filesystem::path target;
    std::string id;
};

std::vector<InstanceEntry> read_instance_list(const std::filesystem::path& list_path);

/// Runs every instance x variant, writes the CSV to csv_out and the
/// classification, per-instance node table, geometric means and the
/// lsm+lum vs rl comparison to summary_out.
std::vector<RunRow> run_benchmark(const BenchConfig& config, std::ostream& csv_out,
                                  std::ostream& summary_out);

void write_summary(const std::vector<RunRow>& rows, double easy_secs, std::ostream& out);

}  // namespace mcs

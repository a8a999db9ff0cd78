#include "mcs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace mcs {

std::string VariantSpec::name() const {
    std::string s = heuristic_name(tag);
    if (lum) s += "+lum";
    return s;
}

VariantSpec VariantSpec::parse(std::string_view text) {
    VariantSpec spec;
    if (text.ends_with("+lum")) {
        spec.lum = true;
        text.remove_suffix(4);
    }
    spec.tag = heuristic_from_name(text);
    return spec;
}

std::vector<VariantSpec> parse_variant_list(std::string_view csv) {
    std::vector<VariantSpec> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        auto item = csv.substr(start, comma - start);
        if (!item.empty()) out.push_back(VariantSpec::parse(item));
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty variant list");
    return out;
}

std::string RunRow::series_name() const {
    return lum ? variant + "+lum" : variant;
}

namespace {

std::string format_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << s;
    return os.str();
}

}  // namespace

void write_csv(const std::vector<RunRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const RunRow& r : rows) {
        out << r.instance << ',' << r.variant << ',' << (r.lum ? 1 : 0) << ','
            << (r.connected ? 1 : 0) << ',';
        if (r.error)
            out << "error";
        else
            out << (r.solved ? 1 : 0);
        out << ',' << r.size << ',' << r.nodes << ',' << format_seconds(r.seconds) << '\n';
    }
}

std::vector<RunRow> parse_csv(std::istream& in) {
    std::vector<RunRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == kCsvHeader) continue;  // header is optional on input
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (fields.size() != 8) throw ParseError("bad CSV row: " + line);
        RunRow r;
        r.instance = fields[0];
        r.variant = fields[1];
        r.lum = fields[2] == "1";
        r.connected = fields[3] == "1";
        if (fields[4] == "error") {
            r.error = true;
        } else {
            r.solved = fields[4] == "1";
        }
        r.size = std::stoi(fields[5]);
        r.nodes = std::stoull(fields[6]);
        r.seconds = std::stod(fields[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

const char* instance_class_name(InstanceClass c) {
    switch (c) {
        case InstanceClass::easy: return "easy";
        case InstanceClass::moderate: return "moderate";
        case InstanceClass::tough: return "tough";
    }
    return "?";
}

std::vector<ClassifiedInstance> classify_instances(const std::vector<RunRow>& rows,
                                                   double easy_secs) {
    std::vector<std::string> order;
    std::map<std::string, std::pair<bool, bool>> state;  // id -> (all easy, any solved)
    for (const RunRow& r : rows) {
        auto [it, inserted] = state.try_emplace(r.instance, true, false);
        if (inserted) order.push_back(r.instance);
        const bool solved_fast = !r.error && r.solved && r.seconds <= easy_secs;
        it->second.first = it->second.first && solved_fast;
        it->second.second = it->second.second || (!r.error && r.solved);
    }
    std::vector<ClassifiedInstance> out;
    for (const std::string& id : order) {
        auto [all_easy, any_solved] = state[id];
        InstanceClass cls = !any_solved ? InstanceClass::tough
                            : all_easy  ? InstanceClass::easy
                                        : InstanceClass::moderate;
        out.push_back({id, cls});
    }
    return out;
}

std::vector<VariantGeomean> geomean_nodes(const std::vector<RunRow>& rows,
                                          const std::vector<std::string>& instances) {
    std::set<std::string> wanted(instances.begin(), instances.end());
    std::vector<std::string> series_order;
    std::map<std::string, std::pair<double, int>> acc;  // series -> (sum log nodes, count)
    for (const RunRow& r : rows) {
        if (r.error || !wanted.count(r.instance)) continue;
        auto [it, inserted] = acc.try_emplace(r.series_name(), 0.0, 0);
        if (inserted) series_order.push_back(r.series_name());
        it->second.first += std::log(static_cast<double>(std::max<std::uint64_t>(r.nodes, 1)));
        it->second.second += 1;
    }
    std::vector<VariantGeomean> out;
    for (const std::string& s : series_order) {
        auto [sum, count] = acc[s];
        out.push_back({s, count ? std::exp(sum / count) : 0.0, count});
    }
    return out;
}

std::vector<CactusSeries> emit_cactus_data(const std::vector<RunRow>& rows) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> times;
    for (const RunRow& r : rows) {
        auto [it, inserted] = times.try_emplace(r.series_name());
        if (inserted) order.push_back(r.series_name());
        if (!r.error && r.solved) it->second.push_back(r.seconds);
    }
    std::vector<CactusSeries> out;
    for (const std::string& s : order) {
        CactusSeries series{s, {}};
        auto& ts = times[s];
        std::sort(ts.begin(), ts.end());
        for (std::size_t i = 0; i < ts.size(); ++i)
            series.points.emplace_back(ts[i], static_cast<int>(i + 1));
        out.push_back(std::move(series));
    }
    return out;
}

void write_cactus_csv(const std::vector<CactusSeries>& series, std::ostream& out) {
    out << "series,t,n\n";
    for (const CactusSeries& s : series)
        for (auto [t, n] : s.points) out << s.series << ',' << format_seconds(t) << ',' << n << '\n';
}

std::vector<InstanceEntry> read_instance_list(const std::filesystem::path& list_path) {
    std::ifstream in(list_path);
    if (!in) throw std::runtime_error("cannot open instance list: " + list_path.string());
    const std::filesystem::path list_dir = list_path.parent_path();
    std::vector<InstanceEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, id;
        if (!(ls >> a >> b)) {
            if (!a.empty()) throw ParseError("bad instance list line: " + line);
            continue;
        }
        ls >> id;
        auto resolve = [&list_dir](const std::string& p) {
            std::filesystem::path path(p);
            if (path.is_absolute()) return path;
            std::filesystem::path beside = list_dir / path;
            if (std::filesystem::exists(beside)) return beside;
            if (const char* env = std::getenv("MCS_FIXTURE_DIR"); env && *env)
                return std::filesystem::path(env) / path;
            return beside;
        };
        if (id.empty())
            id = std::filesystem::path(a).stem().string() + "__" +
                 std::filesystem::path(b).stem().string();
        out.push_back({resolve(a), resolve(b), id});
    }
    return out;
}

namespace {

struct Task {
    std::size_t instance_idx;
    std::size_t variant_idx;
};

}  // namespace

std::vector<RunRow> run_benchmark(const BenchConfig& config, std::ostream& csv_out,
                                  std::ostream& summary_out) {
    const auto instances = read_instance_list(config.list_path);

    // Load each instance once; solver runs share the immutable graphs.
    struct Loaded {
        bool ok = false;
        Graph g0, g1;
    };
    std::vector<Loaded> loaded(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        try {
            Graph a = load_graph(instances[i].pattern, config.format, config.directed,
                                 config.labelled);
            Graph b = load_graph(instances[i].target, config.format, config.directed,
                                 config.labelled);
            if (config.swap) std::swap(a, b);
            loaded[i] = {true, std::move(a), std::move(b)};
        } catch (const std::exception&) {
            loaded[i].ok = false;
        }
    }

    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (std::size_t v = 0; v < config.variants.size(); ++v) tasks.push_back({i, v});
    std::vector<RunRow> rows(tasks.size());

    auto run_task = [&](const Task& task) {
        const InstanceEntry& inst = instances[task.instance_idx];
        const VariantSpec& vs = config.variants[task.variant_idx];
        RunRow row;
        row.instance = inst.id;
        row.variant = heuristic_name(vs.tag);
        row.lum = vs.lum;
        row.connected = config.connected;
        const Loaded& ld = loaded[task.instance_idx];
        if (!ld.ok) {
            row.error = true;
            return row;
        }
        SolverConfig sc;
        sc.variant = {vs.tag, vs.lum};
        sc.connected = config.connected;
        sc.timeout_seconds = config.timeout_seconds;
        sc.node_budget = config.node_budget;
        sc.t_short = config.t_short;
        sc.t_long = config.t_long;
        SolveResult res = solve(ld.g0, ld.g1, sc);
        row.solved = res.stats.completed;
        row.size = res.solution.size();
        row.nodes = res.stats.nodes_expanded;
        row.seconds = res.stats.wall_time;
        return row;
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) rows[t] = run_task(tasks[t]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= tasks.size()) break;
                    rows[t] = run_task(tasks[t]);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    write_csv(rows, csv_out);
    write_summary(rows, config.easy_secs, summary_out);
    return rows;
}

void write_summary(const std::vector<RunRow>& rows, double easy_secs, std::ostream& out) {
    const auto classes = classify_instances(rows, easy_secs);
    out << "== classification (easy <= " << easy_secs << "s) ==\n";
    std::vector<std::string> moderate;
    for (const auto& c : classes) {
        out << c.instance << ": " << instance_class_name(c.cls) << '\n';
        if (c.cls == InstanceClass::moderate) moderate.push_back(c.instance);
    }

    std::vector<std::string> series_order;
    for (const RunRow& r : rows)
        if (std::find(series_order.begin(), series_order.end(), r.series_name()) ==
            series_order.end())
            series_order.push_back(r.series_name());

    out << "== per-instance nodes (moderate instances) ==\n";
    out << "instance";
    for (const auto& s : series_order) out << ',' << s;
    out << '\n';
    for (const std::string& id : moderate) {
        out << id;
        for (const auto& s : series_order) {
            auto it = std::find_if(rows.begin(), rows.end(), [&](const RunRow& r) {
                return r.instance == id && r.series_name() == s;
            });
            out << ',';
            if (it != rows.end() && !it->error) out << it->nodes;
        }
        out << '\n';
    }

    out << "== geometric mean nodes over " << moderate.size() << " moderate instances ==\n";
    const auto means = geomean_nodes(rows, moderate);
    for (const auto& m : means)
        out << m.series << ": " << std::fixed << std::setprecision(1) << m.geomean_nodes
            << " (" << m.runs << " runs)\n";

    auto find_mean = [&means](const std::string& s) -> const VariantGeomean* {
        for (const auto& m : means)
            if (m.series == s) return &m;
        return nullptr;
    };
    const VariantGeomean* ll = find_mean("lsm+lum");
    const VariantGeomean* rl = find_mean("rl");
    if (ll && rl && ll->runs && rl->runs && rl->geomean_nodes > 0) {
        const double ratio = ll->geomean_nodes / rl->geomean_nodes;
        out << "== comparison ==\n";
        out << "lsm+lum/rl geometric-mean node ratio: " << std::setprecision(4) << ratio
            << (ratio <= 1.0 ? " (lsm+lum <= rl)" : " (lsm+lum > rl)") << '\n';
    }
}

}  // namespace mcs

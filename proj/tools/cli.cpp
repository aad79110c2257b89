// Copyright 2026 The paulipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <boost/tokenizer.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "hash.hpp"
#include "json.hpp"
#include "paulipart/baselines.hpp"
#include "paulipart/errors.hpp"
#include "paulipart/metrics.hpp"
#include "paulipart/observable_set.hpp"
#include "paulipart/partitioner.hpp"
#include "paulipart/qubo.hpp"
#include "paulipart/report_io.hpp"

#ifndef PAULIPART_VERSION
#define PAULIPART_VERSION "0.0.0"
#endif

namespace paulipart::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading " + path.string());
    }
    return buffer.str();
}

void emit(const std::string &out_path, const std::string &content, std::ostream &out) {
    if (out_path.empty() || out_path == "-") {
        out << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot write " + out_path);
    }
    file << content;
    file.close();
    if (!file) {
        throw IoError("error writing " + out_path);
    }
}

std::string utc_timestamp(bool reproducible) {
    if (reproducible) {
        return "1970-01-01T00:00:00Z";
    }
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

std::string report_name(Algorithm algo) {
    switch (algo) {
        case Algorithm::ising:
            return "ising";
        case Algorithm::bh:
            return "boppana_halldorsson";
        case Algorithm::bk:
            return "bron_kerbosch";
    }
    return "?";
}

// Command-line overrides, kept as text and routed through apply_setting so
// that flags and config files share one parser.
struct RunFlags {
    std::string config;
    std::vector<std::tuple<const char *, const char *, CLI::Option *, std::string *>> bound;
    std::map<std::string, std::string> values;

    void add(CLI::App *app, const std::string &flag, const char *section, const char *key, const std::string &help) {
        auto *storage = &values[flag];
        CLI::Option *opt = app->add_option(flag, *storage, help);
        bound.emplace_back(section, key, opt, storage);
    }
};

void add_run_flags(CLI::App *app, RunFlags &flags) {
    flags.add(app, "--algo", "partition", "algo", "ising, bh or bk");
    flags.add(app, "--mode", "partition", "mode", "commutativity: gc or qwc");
    flags.add(app, "--nbit", "partition", "n_bit", "solver capacity (variables per call)");
    flags.add(app, "--m", "partition", "m", "conflict penalty, > 1");
    flags.add(app, "--r", "partition", "r", "refinement passes of the two-pass window");
    flags.add(app, "--solver", "partition", "solver", "exact or anneal");
    flags.add(app, "--budget", "partition", "budget", "Bron-Kerbosch node-expansion budget");
    flags.add(app, "--steps", "anneal", "mc_steps", "annealer sweeps per restart");
    flags.add(app, "--restarts", "anneal", "restarts", "annealer restarts");
    flags.add(app, "--seed", "anneal", "seed", "seed for the annealer and the bh pivots");
    flags.add(app, "--t-start", "anneal", "t_start", "initial annealing temperature");
    flags.add(app, "--t-end", "anneal", "t_end", "final annealing temperature");
    app->add_option("--config", flags.config, "INI file with [anneal] and [partition] sections");
}

RunSettings base_settings(const std::string &config_flag) {
    RunSettings settings;
    std::string path = config_flag;
    if (path.empty()) {
        if (const char *env = std::getenv("PAULIPART_CONFIG")) {
            path = env;
        }
    }
    if (!path.empty()) {
        apply_config_file(settings, path);
    }
    return settings;
}

RunSettings settings_from(const RunFlags &flags) {
    RunSettings settings = base_settings(flags.config);
    for (const auto &[section, key, opt, storage] : flags.bound) {
        if (opt->count() > 0) {
            apply_setting(settings, section, key, *storage);
        }
    }
    settings.resolve();
    return settings;
}

PartitionReport execute(const RunSettings &s, const CommutativityGraph &graph) {
    switch (s.algo) {
        case Algorithm::ising: {
            const auto &p = s.partition;
            if (p.solver == SolverKind::exact && std::min(p.n_bit, graph.size()) > kMaxExactVariables) {
                throw ProblemTooLarge("the exact solver handles at most " + std::to_string(kMaxExactVariables) +
                                      " variables per call; lower --nbit or use --solver anneal");
            }
            return partition_all(graph, p);
        }
        case Algorithm::bh:
            return boppana_halldorsson_partition(graph, s.partition.anneal.seed);
        case Algorithm::bk:
            return bron_kerbosch_partition(graph, s.budget);
    }
    throw std::logic_error("unhandled algorithm");
}

void scrub_timings(PartitionReport &report) {
    std::fill(report.per_call_durations.begin(), report.per_call_durations.end(), 0.0);
    report.wall_seconds = 0.0;
}

ordered_json seeds_of(const RunSettings &s) {
    ordered_json seeds = ordered_json::array();
    if ((s.algo == Algorithm::ising && s.partition.solver == SolverKind::anneal) || s.algo == Algorithm::bh) {
        seeds.push_back(s.partition.anneal.seed);
    }
    return seeds;
}

int cmd_tomography(int n, const std::string &out_path, std::ostream &out) {
    if (n < 1 || n > static_cast<int>(kMaxTomographyQubits)) {
        throw std::invalid_argument("tomography needs 1 <= n <= " + std::to_string(kMaxTomographyQubits));
    }
    std::ostringstream text;
    write_observables(gen_full_tomography(static_cast<std::size_t>(n)), text);
    emit(out_path, text.str(), out);
    return kOk;
}

int cmd_graph(const std::string &input, const std::string &mode, const std::string &out_path, std::ostream &out) {
    ObservableSet set = parse_observables(read_file(input), input);
    CommutativityGraph graph = CommutativityGraph::build(set, parse_mode(mode));
    std::ostringstream text;
    graph.write_edge_list(text);
    emit(out_path, text.str(), out);
    return kOk;
}

int cmd_partition(const std::vector<std::string> &args, const std::string &input, const RunFlags &flags,
                  const std::string &out_path, bool reproducible, std::ostream &out, std::ostream &err) {
    RunSettings settings = settings_from(flags);
    std::string started = utc_timestamp(reproducible);
    std::string content = read_file(input);
    ObservableSet set = parse_observables(content, input);
    CommutativityGraph graph = CommutativityGraph::build(set, settings.partition.mode);
    PartitionReport report = execute(settings, graph);
    if (reproducible) {
        scrub_timings(report);
    }
    auto violation = validate_report(report, graph);

    ordered_json doc = report_to_json(report);
    ordered_json command = ordered_json::array({"paulipart"});
    for (const auto &a : args) {
        command.push_back(a);
    }
    ordered_json manifest;
    manifest["tool"] = "paulipart";
    manifest["version"] = PAULIPART_VERSION;
    manifest["command_line"] = std::move(command);
    manifest["config"] = settings_snapshot(settings);
    manifest["input"] = {{"path", input},
                         {"sha256", sha256_tag(content)},
                         {"n_strings", set.size()},
                         {"n_qubits", set.n_qubits()}};
    manifest["seeds"] = seeds_of(settings);
    manifest["started_at"] = started;
    manifest["finished_at"] = utc_timestamp(reproducible);
    doc["manifest"] = std::move(manifest);
    emit(out_path, doc.dump(2) + "\n", out);

    if (violation) {
        err << "invalid report: " << *violation << "\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_validate(const std::string &report_path, const std::string &input, std::ostream &out) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(report_path));
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(report_path + ": " + e.what());
    }
    PartitionReport report = report_from_json(doc);
    std::string expected;
    try {
        expected = doc.at("manifest").at("input").at("sha256").get<std::string>();
    } catch (const nlohmann::json::exception &) {
        throw ParseError(report_path + ": report has no manifest input hash");
    }
    std::string content = read_file(input);
    std::string actual = sha256_tag(content);
    if (actual != expected) {
        out << "FAIL: input hash mismatch (report " << expected << ", input " << actual << ")\n";
        return kInvalid;
    }
    ObservableSet set = parse_observables(content, input);
    CommutativityGraph graph = CommutativityGraph::build(set, report.mode);
    auto violation = validate_report(report, graph);
    if (!violation) {
        auto n_parts = doc.find("n_partitions");
        if (n_parts != doc.end() && (!n_parts->is_number_unsigned() || *n_parts != report.partitions.size())) {
            violation = "n_partitions does not match the partition list";
        }
    }
    if (!violation) {
        auto g = doc.find("gamma");
        auto expected_gamma = report.gamma();
        if (g != doc.end()) {
            bool ok = expected_gamma ? g->is_number() && std::abs(g->get<double>() - *expected_gamma) <=
                                                             1e-9 * std::max(1.0, *expected_gamma)
                                     : g->is_null();
            if (!ok) {
                violation = "gamma does not equal F / n_bit";
            }
        }
    }
    if (violation) {
        out << "FAIL: " << *violation << "\n";
        return kInvalid;
    }
    out << "PASS: " << report.partitions.size() << " partitions cover " << report.n_strings
        << " strings, F = " << format_number(report.reduction_factor) << "\n";
    return kOk;
}

std::string json_setting_text(const nlohmann::json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number()) {
        return v.dump();
    }
    throw ParseError("suite value " + v.dump() + " is not a string, number or boolean");
}

struct BenchRow {
    std::string algorithm;
    std::string input;
    std::string status = "ok";
    bool reference = false;
    std::optional<PartitionReport> report;
};

const std::vector<std::string> kBenchColumns = {"algorithm", "N",          "n_bit", "D",           "n_partitions",
                                                "F",         "gamma",      "p_inv", "s",           "solver_calls",
                                                "wall_seconds", "input",   "status"};

int cmd_bench(const std::string &suite_path, const std::string &config, const std::string &out_path,
              bool reproducible, std::ostream &out, std::ostream &err) {
    nlohmann::json suite;
    try {
        suite = nlohmann::json::parse(read_file(suite_path));
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(suite_path + ": " + e.what());
    }
    const nlohmann::json *runs = &suite;
    if (suite.is_object()) {
        auto it = suite.find("runs");
        if (it == suite.end()) {
            throw ParseError(suite_path + ": suite object has no 'runs' array");
        }
        runs = &*it;
    }
    if (!runs->is_array()) {
        throw ParseError(suite_path + ": 'runs' must be an array");
    }

    static const std::map<std::string, std::pair<const char *, const char *>> keys = {
        {"algo", {"partition", "algo"}},       {"mode", {"partition", "mode"}},
        {"nbit", {"partition", "n_bit"}},      {"m", {"partition", "m"}},
        {"r", {"partition", "r"}},             {"solver", {"partition", "solver"}},
        {"budget", {"partition", "budget"}},   {"steps", {"anneal", "mc_steps"}},
        {"restarts", {"anneal", "restarts"}},  {"seed", {"anneal", "seed"}},
        {"t_start", {"anneal", "t_start"}},    {"t_end", {"anneal", "t_end"}},
    };
    struct Job {
        RunSettings settings;
        BenchRow row;
        fs::path path;
    };
    std::vector<Job> jobs;
    const fs::path base = fs::path(suite_path).parent_path();
    const RunSettings defaults = base_settings(config);
    for (std::size_t k = 0; k < runs->size(); ++k) {
        const auto &run = (*runs)[k];
        if (!run.is_object()) {
            throw ParseError(suite_path + ": run " + std::to_string(k) + " is not an object");
        }
        Job job{defaults, {}, {}};
        for (const auto &[key, value] : run.items()) {
            if (key == "input") {
                job.row.input = value.get<std::string>();
            } else if (key == "reference") {
                job.row.reference = value.get<bool>();
            } else if (auto it = keys.find(key); it != keys.end()) {
                apply_setting(job.settings, it->second.first, it->second.second, json_setting_text(value));
            } else {
                throw ParseError(suite_path + ": run " + std::to_string(k) + " has unknown key '" + key + "'");
            }
        }
        if (job.row.input.empty()) {
            throw ParseError(suite_path + ": run " + std::to_string(k) + " has no input");
        }
        job.settings.resolve();
        job.path = fs::path(job.row.input).is_absolute() ? fs::path(job.row.input) : base / job.row.input;
        job.row.algorithm = report_name(job.settings.algo);
        jobs.push_back(std::move(job));
    }

    std::map<std::string, std::unique_ptr<ObservableSet>> sets;
    std::map<std::pair<std::string, int>, std::unique_ptr<CommutativityGraph>> graphs;
    for (auto &job : jobs) {
        try {
            std::string key = job.path.lexically_normal().string();
            auto &set = sets[key];
            if (!set) {
                set = std::make_unique<ObservableSet>(parse_observables(read_file(job.path), job.row.input));
            }
            auto &graph = graphs[{key, static_cast<int>(job.settings.partition.mode)}];
            if (!graph) {
                graph = std::make_unique<CommutativityGraph>(
                    CommutativityGraph::build(*set, job.settings.partition.mode));
            }
            PartitionReport report = execute(job.settings, *graph);
            if (reproducible) {
                scrub_timings(report);
            }
            if (auto violation = validate_report(report, *graph)) {
                err << job.row.input << ": invalid report: " << *violation << "\n";
                job.row.status = "invalid";
            }
            job.row.report = std::move(report);
        } catch (const BudgetExceeded &e) {
            err << job.row.input << ": " << e.what() << "\n";
            job.row.status = "timeout";
        } catch (const std::exception &e) {
            err << job.row.input << ": " << e.what() << "\n";
            job.row.status = "error";
        }
    }

    std::map<std::string, double> reference_f;
    for (const auto &job : jobs) {
        if (job.row.reference && job.row.report && job.row.status == "ok") {
            reference_f.emplace(job.path.lexically_normal().string(), job.row.report->reduction_factor);
        }
    }

    std::ostringstream csv;
    for (std::size_t c = 0; c < kBenchColumns.size(); ++c) {
        csv << (c ? "," : "") << kBenchColumns[c];
    }
    csv << "\n";
    for (const auto &job : jobs) {
        const auto &row = job.row;
        std::vector<std::string> cells;
        if (row.report) {
            const auto &r = *row.report;
            auto f1 = reference_f.find(job.path.lexically_normal().string());
            cells = {row.algorithm,
                     std::to_string(r.n_strings),
                     r.n_bit ? std::to_string(*r.n_bit) : "",
                     format_number(r.relative_dimension),
                     std::to_string(r.partitions.size()),
                     format_number(r.reduction_factor),
                     r.gamma() ? format_number(*r.gamma()) : "",
                     f1 != reference_f.end() ? format_number(1.0 / p_ratio(r.reduction_factor, f1->second)) : "",
                     format_number(r.two_pass_fraction),
                     std::to_string(r.solver_calls),
                     format_number(r.wall_seconds),
                     row.input,
                     row.status};
        } else {
            cells = {row.algorithm};
            cells.resize(kBenchColumns.size() - 2, "N/A");
            cells.push_back(row.input);
            cells.push_back(row.status);
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            csv << (c ? "," : "") << csv_field(cells[c]);
        }
        csv << "\n";
    }
    emit(out_path, csv.str(), out);
    return kOk;
}

int cmd_fit(const std::string &csv_path, const std::string &out_path, std::ostream &out, std::ostream &err) {
    std::istringstream in(read_file(csv_path));
    using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(csv_path + ": empty file");
    }
    std::map<std::string, std::size_t> column;
    {
        Tokenizer header(line);
        std::size_t c = 0;
        for (const auto &name : header) {
            column[name] = c++;
        }
    }
    for (const char *required : {"algorithm", "N", "wall_seconds", "status"}) {
        if (!column.count(required)) {
            throw ParseError(csv_path + ": missing column '" + required + "'");
        }
    }
    std::map<std::string, std::vector<std::pair<double, double>>> points;
    std::vector<std::string> order;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        Tokenizer tok(line);
        std::vector<std::string> cells(tok.begin(), tok.end());
        if (cells.size() != column.size()) {
            throw ParseError(csv_path + ": wrong number of cells", line_no);
        }
        if (cells[column["status"]] != "ok") {
            continue;
        }
        double n = 0.0;
        double t = 0.0;
        const std::string &ns = cells[column["N"]];
        const std::string &ts = cells[column["wall_seconds"]];
        if (std::from_chars(ns.data(), ns.data() + ns.size(), n).ec != std::errc() ||
            std::from_chars(ts.data(), ts.data() + ts.size(), t).ec != std::errc()) {
            throw ParseError(csv_path + ": N or wall_seconds is not a number", line_no);
        }
        const std::string &algo = cells[column["algorithm"]];
        if (!points.count(algo)) {
            order.push_back(algo);
        }
        points[algo].emplace_back(n, t);
    }
    std::ostringstream text;
    text << "algorithm,a,b,r_squared,points\n";
    for (const auto &algo : order) {
        try {
            PowerLawFit fit = fit_power_law(points[algo]);
            text << csv_field(algo) << "," << format_number(fit.a) << "," << format_number(fit.b) << ","
                 << format_number(fit.r_squared) << "," << points[algo].size() << "\n";
        } catch (const std::invalid_argument &e) {
            err << algo << ": no fit: " << e.what() << "\n";
        }
    }
    emit(out_path, text.str(), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Partition Pauli strings into mutually commuting groups", "paulipart"};
    app.require_subcommand(1);
    app.set_version_flag("--version", PAULIPART_VERSION);

    int tomo_n = 0;
    std::string out_path;
    auto *tomo = app.add_subcommand("tomography", "Write all 4^n - 1 non-identity n-qubit strings");
    tomo->add_option("n", tomo_n, "number of qubits (1..8)")->required();
    tomo->add_option("--out", out_path, "output file (default stdout)");

    std::string input;
    std::string mode = "gc";
    auto *graph = app.add_subcommand("graph", "Write the commutativity graph as an edge list");
    graph->add_option("input", input, "observable file")->required();
    graph->add_option("--mode", mode, "gc or qwc");
    graph->add_option("--out", out_path, "output file (default stdout)");

    RunFlags flags;
    bool reproducible = false;
    auto *part = app.add_subcommand("partition", "Partition an observable file and write a JSON report");
    part->add_option("input", input, "observable file")->required();
    add_run_flags(part, flags);
    part->add_option("--out", out_path, "report file (default stdout)");
    part->add_flag("--reproducible", reproducible, "zero timings and pin timestamps");

    std::string report_path;
    auto *validate = app.add_subcommand("validate", "Check a report against its input");
    validate->add_option("report", report_path, "JSON report")->required();
    validate->add_option("--input", input, "observable file the report was made from")->required();

    std::string suite;
    std::string config;
    auto *bench = app.add_subcommand("bench", "Run a JSON suite and write a metrics CSV");
    bench->add_option("suite", suite, "suite file")->required();
    bench->add_option("--config", config, "INI defaults for every run");
    bench->add_option("--out", out_path, "CSV file (default stdout)");
    bench->add_flag("--reproducible", reproducible, "zero timings");

    std::string csv;
    auto *fit = app.add_subcommand("fit", "Fit wall_seconds = a N^b per algorithm of a bench CSV");
    fit->add_option("csv", csv, "bench CSV")->required();
    fit->add_option("--out", out_path, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (tomo->parsed()) {
            return cmd_tomography(tomo_n, out_path, out);
        }
        if (graph->parsed()) {
            return cmd_graph(input, mode, out_path, out);
        }
        if (part->parsed()) {
            return cmd_partition(args, input, flags, out_path, reproducible, out, err);
        }
        if (validate->parsed()) {
            return cmd_validate(report_path, input, out);
        }
        if (bench->parsed()) {
            return cmd_bench(suite, config, out_path, reproducible, out, err);
        }
        if (fit->parsed()) {
            return cmd_fit(csv, out_path, out, err);
        }
    } catch (const BudgetExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::logic_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}

}  // namespace paulipart::cli

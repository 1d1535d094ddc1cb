#include "relay/io.hpp"

#include "relay/errors.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relay {
namespace {

using json = nlohmann::ordered_json;

// Pin floats to 9 significant digits; the shortest round-trip form of the
// re-parsed value is the digit string itself, so dumps stay byte-stable.
double round9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

// json type errors surface as invalid input, with the document named.
template <class F>
auto guarded(const char* what, F&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid ") + what + ": " + e.what());
    }
}

const json& require(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("invalid ") + what + ": missing key \"" + key +
                                    "\"");
    return *it;
}

void check_schema(const json& j, const char* id, const char* what) {
    if (require(j, "schema", what).get<std::string>() != id)
        throw std::invalid_argument(std::string("invalid ") + what + ": schema is not \"" + id +
                                    "\"");
}

json point_to(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(std::string("invalid ") + what + ": expected an [x, y] pair");
    return Point{j[0].get<double>(), j[1].get<double>()};
}

json scenario_to_jobj(const Scenario& sc) {
    json j;
    j["schema"] = "relay-placer/1";
    j["field"] = json::array({sc.field_width, sc.field_height});
    j["r"] = sc.r;
    j["R"] = sc.R;
    j["sink"] = point_to(sc.sink);
    json sensors = json::array();
    for (Point p : sc.sensors) sensors.push_back(point_to(p));
    j["sensors"] = std::move(sensors);
    return j;
}

Scenario scenario_from_jobj(const json& j) {
    const char* what = "scenario";
    check_schema(j, "relay-placer/1", what);
    Scenario sc;
    const json& field = require(j, "field", what);
    Point wh = point_from(field, what);
    sc.field_width = wh.x;
    sc.field_height = wh.y;
    sc.r = require(j, "r", what).get<double>();
    sc.R = require(j, "R", what).get<double>();
    sc.sink = point_from(require(j, "sink", what), what);
    for (const json& s : require(j, "sensors", what))
        sc.sensors.push_back(point_from(s, what));
    sc.validate();
    return sc;
}

json solution_to_jobj(const CoverSolution& sol) {
    json j;
    j["schema"] = "solution/1";
    j["algorithm"] = cover_algorithm_name(sol.algorithm);
    json positions = json::array();
    for (const auto& cp : sol.positions) {
        json p;
        p["id"] = cp.position_id;
        p["covered"] = cp.covered;
        p["anchor"] = point_to(cp.anchor);
        p["second_pass"] = cp.second_pass;
        positions.push_back(std::move(p));
    }
    j["positions"] = std::move(positions);
    j["degrees"] = sol.degrees;
    return j;
}

CoverSolution solution_from_jobj(const json& j) {
    const char* what = "solution";
    check_schema(j, "solution/1", what);
    CoverSolution sol;
    sol.algorithm = cover_algorithm_from_name(require(j, "algorithm", what).get<std::string>());
    for (const json& p : require(j, "positions", what)) {
        ChosenPosition cp;
        cp.position_id = require(p, "id", what).get<int>();
        cp.covered = require(p, "covered", what).get<std::vector<int>>();
        cp.anchor = point_from(require(p, "anchor", what), what);
        cp.second_pass = require(p, "second_pass", what).get<bool>();
        sol.positions.push_back(std::move(cp));
    }
    sol.degrees = require(j, "degrees", what).get<std::vector<int>>();
    return sol;
}

json deployment_to_jobj(const Deployment& dep) {
    json j;
    j["schema"] = "deployment/1";
    json relays = json::array();
    for (const auto& rl : dep.relays) {
        json r;
        r["position"] = point_to(rl.position);
        r["role"] = rl.role == RelayRole::Cover ? "cover" : "connectivity";
        if (rl.source_position_id)
            r["source_position_id"] = *rl.source_position_id;
        else
            r["source_position_id"] = nullptr;
        relays.push_back(std::move(r));
    }
    j["relays"] = std::move(relays);
    j["sink_candidate_uses"] = dep.sink_candidate_uses;
    return j;
}

Deployment deployment_from_jobj(const json& j) {
    const char* what = "deployment";
    check_schema(j, "deployment/1", what);
    Deployment dep;
    for (const json& r : require(j, "relays", what)) {
        Relay rl;
        rl.position = point_from(require(r, "position", what), what);
        std::string role = require(r, "role", what).get<std::string>();
        if (role == "cover")
            rl.role = RelayRole::Cover;
        else if (role == "connectivity")
            rl.role = RelayRole::Connectivity;
        else
            throw std::invalid_argument("invalid deployment: unknown role \"" + role + "\"");
        const json& src = require(r, "source_position_id", what);
        if (!src.is_null()) rl.source_position_id = src.get<int>();
        dep.relays.push_back(std::move(rl));
    }
    dep.sink_candidate_uses = require(j, "sink_candidate_uses", what).get<int>();
    return dep;
}

json topology_to_jobj(const TopologyGraph& g) {
    json j;
    j["schema"] = "topology/1";
    j["comm_radius"] = g.comm_radius;
    json nodes = json::array();
    for (const auto& node : g.nodes) {
        json nj;
        nj["position"] = point_to(node.p);
        switch (node.kind) {
        case NodeKind::Relay: nj["kind"] = "relay"; break;
        case NodeKind::Sink: nj["kind"] = "sink"; break;
        case NodeKind::Steiner: nj["kind"] = "steiner"; break;
        }
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json::array({e.u, e.v, round9(e.weight)}));
    j["edges"] = std::move(edges);
    j["connected"] = is_connected(g);
    return j;
}

json config_to_jobj(const PipelineConfig& c) {
    json j;
    j["name"] = c.display_name();
    j["cover_algorithm"] = cover_algorithm_name(c.cover_algorithm);
    j["placement"] = placement_method_name(c.placement);
    j["coverage_k"] = c.coverage_k;
    j["seed"] = c.seed;
    j["weights"] = json::array({c.weights.alpha, c.weights.beta, c.weights.gamma});
    j["greedy_alpha"] = c.greedy_alpha;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format \"" + name + "\"");
}

CoverAlgorithm cover_algorithm_from_name(const std::string& name) {
    if (name == "lsaa") return CoverAlgorithm::Lsaa;
    if (name == "lsaadc") return CoverAlgorithm::Lsaadc;
    if (name == "weighted_greedy" || name == "greedy") return CoverAlgorithm::WeightedGreedy;
    if (name == "grid") return CoverAlgorithm::Grid;
    if (name == "exact") return CoverAlgorithm::ExactOracle;
    throw std::invalid_argument("unknown cover algorithm \"" + name + "\"");
}

PlacementMethod placement_method_from_name(const std::string& name) {
    if (name == "rlsa") return PlacementMethod::Rlsa;
    if (name == "ilsm") return PlacementMethod::Ilsm;
    if (name == "rlsm") return PlacementMethod::Rlsm;
    throw std::invalid_argument("unknown placement method \"" + name + "\"");
}

std::string scenario_to_json(const Scenario& scenario) { return dump(scenario_to_jobj(scenario)); }

Scenario scenario_from_json(const std::string& text) {
    json j = parse_text(text);
    return guarded("scenario", [&] { return scenario_from_jobj(j); });
}

std::string solution_to_json(const CoverSolution& solution) {
    return dump(solution_to_jobj(solution));
}

CoverSolution solution_from_json(const std::string& text) {
    json j = parse_text(text);
    return guarded("solution", [&] { return solution_from_jobj(j); });
}

std::string deployment_to_json(const Deployment& deployment) {
    return dump(deployment_to_jobj(deployment));
}

Deployment deployment_from_json(const std::string& text) {
    json j = parse_text(text);
    return guarded("deployment", [&] { return deployment_from_jobj(j); });
}

std::string topology_to_json(const TopologyGraph& graph) { return dump(topology_to_jobj(graph)); }

std::string connect_result_to_json(const Deployment& deployment, const TopologyGraph& graph) {
    json j;
    j["schema"] = "connect/1";
    j["deployment"] = deployment_to_jobj(deployment);
    j["topology"] = topology_to_jobj(graph);
    return dump(j);
}

std::string run_result_to_json(const RunResult& result, const Scenario& scenario,
                               const PipelineConfig& config, bool include_timings) {
    json j;
    j["schema"] = "run/1";
    j["prng"] = kPrngId;
    j["scenario"] = scenario_to_jobj(scenario);
    j["config"] = config_to_jobj(config);
    j["solution"] = solution_to_jobj(result.solution);
    j["deployment"] = deployment_to_jobj(result.deployment);
    j["topology"] = topology_to_jobj(result.topology);
    json m;
    m["relay_count_cover"] = result.metrics.relay_count_cover;
    m["relay_count_connectivity"] = result.metrics.relay_count_connectivity;
    m["total_relays"] =
        result.metrics.relay_count_cover + result.metrics.relay_count_connectivity;
    m["avg_node_degree"] = round9(result.metrics.avg_node_degree);
    m["avg_pairwise_relay_distance"] = round9(result.metrics.avg_pairwise_relay_distance);
    if (include_timings) m["runtime_ms"] = round9(result.metrics.runtime_ms);
    if (result.metrics.ratio_to_optimum)
        m["ratio_to_optimum"] = round9(*result.metrics.ratio_to_optimum);
    j["metrics"] = std::move(m);
    return dump(j);
}

std::string render_results(const MetricsTable& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::string out = "n,config_name,metric_name,mean,stddev,trials\n";
        for (const auto& row : table.rows) {
            out += std::to_string(row.n);
            out += ',';
            out += row.config_name;
            out += ',';
            out += row.metric_name;
            out += ',';
            out += fmt9(row.mean);
            out += ',';
            out += fmt9(row.stddev);
            out += ',';
            out += std::to_string(row.trials);
            out += '\n';
        }
        return out;
    }
    json j;
    j["schema"] = "bench-results/1";
    j["prng"] = table.prng;
    j["base_seed"] = table.base_seed;
    j["include_timings"] = table.include_timings;
    json rows = json::array();
    for (const auto& row : table.rows) {
        json rj;
        rj["n"] = row.n;
        rj["config_name"] = row.config_name;
        rj["metric_name"] = row.metric_name;
        rj["mean"] = round9(row.mean);
        rj["stddev"] = round9(row.stddev);
        rj["trials"] = row.trials;
        json values = json::array();
        for (double v : row.values) values.push_back(round9(v));
        rj["values"] = std::move(values);
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    json failures = json::array();
    for (const auto& f : table.failures) {
        json fj;
        fj["n"] = f.n;
        fj["config_name"] = f.config_name;
        fj["trial"] = f.trial;
        fj["message"] = f.message;
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    return dump(j);
}

MetricsTable results_from_json(const std::string& text) {
    json j = parse_text(text);
    return guarded("results", [&]() -> MetricsTable {
        const char* what = "results";
        check_schema(j, "bench-results/1", what);
        MetricsTable table;
        table.prng = require(j, "prng", what).get<std::string>();
        table.base_seed = require(j, "base_seed", what).get<std::uint64_t>();
        table.include_timings = require(j, "include_timings", what).get<bool>();
        for (const json& rj : require(j, "rows", what)) {
            MetricsRow row;
            row.n = require(rj, "n", what).get<int>();
            row.config_name = require(rj, "config_name", what).get<std::string>();
            row.metric_name = require(rj, "metric_name", what).get<std::string>();
            row.mean = require(rj, "mean", what).get<double>();
            row.stddev = require(rj, "stddev", what).get<double>();
            row.trials = require(rj, "trials", what).get<int>();
            row.values = require(rj, "values", what).get<std::vector<double>>();
            table.rows.push_back(std::move(row));
        }
        for (const json& fj : require(j, "failures", what)) {
            TrialFailure f;
            f.n = require(fj, "n", what).get<int>();
            f.config_name = require(fj, "config_name", what).get<std::string>();
            f.trial = require(fj, "trial", what).get<int>();
            f.message = require(fj, "message", what).get<std::string>();
            table.failures.push_back(std::move(f));
        }
        return table;
    });
}

void emit_results(const MetricsTable& table, OutputFormat format, const std::string& path) {
    write_text_file(path, render_results(table, format));
}

std::string benchmark_spec_to_json(const BenchmarkSpec& spec) {
    json j;
    j["schema"] = "bench/1";
    j["n_values"] = spec.n_values;
    j["trials"] = spec.trials;
    j["base_seed"] = spec.base_seed;
    j["field"] = json::array({spec.field_width, spec.field_height});
    j["r"] = spec.r;
    j["R"] = spec.R;
    if (spec.sink) j["sink"] = point_to(*spec.sink);
    j["parallelism"] = spec.parallelism;
    j["include_timings"] = spec.include_timings;
    json configs = json::array();
    for (const auto& c : spec.configs) configs.push_back(config_to_jobj(c));
    j["configs"] = std::move(configs);
    return dump(j);
}

BenchmarkSpec benchmark_spec_from_json(const std::string& text) {
    json j = parse_text(text);
    return guarded("benchmark spec", [&]() -> BenchmarkSpec {
        const char* what = "benchmark spec";
        if (j.contains("schema")) check_schema(j, "bench/1", what);
        BenchmarkSpec spec = default_benchmark_spec();
        if (j.contains("n_values")) spec.n_values = j["n_values"].get<std::vector<int>>();
        if (j.contains("trials")) spec.trials = j["trials"].get<int>();
        if (j.contains("base_seed")) spec.base_seed = j["base_seed"].get<std::uint64_t>();
        if (j.contains("field")) {
            Point wh = point_from(j["field"], what);
            spec.field_width = wh.x;
            spec.field_height = wh.y;
        }
        if (j.contains("r")) spec.r = j["r"].get<double>();
        if (j.contains("R")) spec.R = j["R"].get<double>();
        if (j.contains("sink")) spec.sink = point_from(j["sink"], what);
        if (j.contains("parallelism")) spec.parallelism = j["parallelism"].get<int>();
        if (j.contains("include_timings"))
            spec.include_timings = j["include_timings"].get<bool>();
        if (j.contains("configs")) {
            spec.configs.clear();
            for (const json& cj : j["configs"]) {
                PipelineConfig c;
                if (cj.contains("name")) c.name = cj["name"].get<std::string>();
                if (cj.contains("cover_algorithm"))
                    c.cover_algorithm =
                        cover_algorithm_from_name(cj["cover_algorithm"].get<std::string>());
                if (cj.contains("placement"))
                    c.placement = placement_method_from_name(cj["placement"].get<std::string>());
                if (cj.contains("coverage_k")) c.coverage_k = cj["coverage_k"].get<int>();
                if (cj.contains("weights")) {
                    const json& w = cj["weights"];
                    if (!w.is_array() || w.size() != 3)
                        throw std::invalid_argument(
                            "invalid benchmark spec: weights must be [alpha, beta, gamma]");
                    c.weights.alpha = w[0].get<double>();
                    c.weights.beta = w[1].get<double>();
                    c.weights.gamma = w[2].get<double>();
                }
                if (cj.contains("greedy_alpha")) c.greedy_alpha = cj["greedy_alpha"].get<double>();
                spec.configs.push_back(std::move(c));
            }
        }
        return spec;
    });
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

} // namespace relay

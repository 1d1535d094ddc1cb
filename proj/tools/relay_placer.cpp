#include "relay/errors.hpp"
#include "relay/harness.hpp"
#include "relay/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using namespace relay;

Point parse_point(const std::string& text, const char* flag) {
    double x = 0.0, y = 0.0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &x, &y, &extra) != 2)
        throw std::invalid_argument(std::string(flag) + " expects \"x,y\", got \"" + text + "\"");
    return Point{x, y};
}

std::pair<double, double> parse_field(const std::string& text) {
    double w = 0.0, h = 0.0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lfx%lf%c", &w, &h, &extra) != 2)
        throw std::invalid_argument("--field expects \"WxH\", got \"" + text + "\"");
    return {w, h};
}

WeightConfig parse_weights(const std::string& text) {
    WeightConfig w;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &w.alpha, &w.beta, &w.gamma, &extra) != 3)
        throw std::invalid_argument("--weights expects \"alpha,beta,gamma\", got \"" + text +
                                    "\"");
    return w;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + " expects comma-separated integers, " +
                                        "got \"" + text + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

CoverSolution run_cover(const Scenario& sc, const std::string& algo_name,
                        const WeightConfig& weights, double alpha, const OracleLimits& limits) {
    CoverAlgorithm algo = cover_algorithm_from_name(algo_name);
    if (algo == CoverAlgorithm::Grid) return grid_cover(sc);
    Family family = enumerate_possible_positions(sc);
    switch (algo) {
    case CoverAlgorithm::Lsaa: return lsaa(sc, family, weights);
    case CoverAlgorithm::Lsaadc: return lsaadc(sc, family, weights);
    case CoverAlgorithm::WeightedGreedy: {
        if (alpha == 0.0) alpha = sc.n() > 0 ? 1.0 / sc.n() : 0.5;
        return weighted_greedy(sc, family, alpha);
    }
    case CoverAlgorithm::ExactOracle: return exact_min_cover(sc, family, limits);
    default: throw std::invalid_argument("unknown cover algorithm \"" + algo_name + "\"");
    }
}

// Scenario-shape options shared by gen and pipeline.
struct FieldOptions {
    std::string field = "100x100";
    double r = 10.0;
    double R = 20.0;
    std::string sink;  // empty: field center

    void attach(CLI::App& cmd) {
        cmd.add_option("--field", field, "Field size WxH in meters")->capture_default_str();
        cmd.add_option("--r", r, "Sensing radius r")->capture_default_str();
        cmd.add_option("--R", R, "Communication radius R")->capture_default_str();
        cmd.add_option("--sink", sink, "Sink position x,y (default: field center)");
    }

    Scenario make(int n, std::uint64_t seed) const {
        auto [w, h] = parse_field(field);
        Point s = sink.empty() ? Point{w / 2.0, h / 2.0} : parse_point(sink, "--sink");
        return generate_scenario(n, w, h, r, R, s, seed);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Relay placement toolkit for two-tiered wireless sensor networks"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a random scenario");
    int gen_n = 40;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    FieldOptions gen_field;
    gen->add_option("--n", gen_n, "Sensor count")->capture_default_str();
    gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
    gen_field.attach(*gen);
    gen->add_option("--out", gen_out, "Output path (default: stdout)");

    auto* cover = app.add_subcommand("cover", "Compute a relay cover for a scenario");
    std::string cover_in, cover_out, cover_algo = "lsaa", cover_weights;
    double cover_alpha = 0.0;
    OracleLimits cover_limits;
    cover->add_option("scenario", cover_in, "Scenario JSON path")->required();
    cover->add_option("--algo", cover_algo, "lsaa|lsaadc|greedy|grid|exact")
        ->capture_default_str();
    cover->add_option("--weights", cover_weights, "NFWGA weights alpha,beta,gamma");
    cover->add_option("--alpha", cover_alpha, "Weighted-greedy alpha (default 1/n)");
    cover->add_option("--out", cover_out, "Output path (default: stdout)");

    auto* place = app.add_subcommand("place", "Turn a cover solution into relay coordinates");
    std::string place_in, place_solution, place_out, place_method = "rlsa";
    std::uint64_t place_seed = 1;
    place->add_option("scenario", place_in, "Scenario JSON path")->required();
    place->add_option("--solution", place_solution, "Solution JSON path")->required();
    place->add_option("--method", place_method, "rlsa|ilsm|rlsm")->capture_default_str();
    place->add_option("--seed", place_seed, "rlsm seed")->capture_default_str();
    place->add_option("--out", place_out, "Output path (default: stdout)");

    auto* connect = app.add_subcommand("connect", "Steinerize a deployment and report topology");
    std::string connect_in, connect_dep, connect_out;
    connect->add_option("scenario", connect_in, "Scenario JSON path")->required();
    connect->add_option("--deployment", connect_dep, "Deployment JSON path")->required();
    connect->add_option("--out", connect_out, "Output path (default: stdout)");

    auto* pipeline = app.add_subcommand("pipeline", "Run cover, placement, and connectivity");
    std::string pipe_in, pipe_out, pipe_algo = "lsaa", pipe_method = "rlsa", pipe_weights;
    int pipe_n = -1, pipe_k = 0;
    std::uint64_t pipe_seed = 1;
    double pipe_alpha = 0.0;
    bool pipe_timings = false;
    FieldOptions pipe_field;
    pipeline->add_option("scenario", pipe_in, "Scenario JSON path (omit to generate with --n)");
    pipeline->add_option("--n", pipe_n, "Generate a scenario with this sensor count");
    pipeline->add_option("--seed", pipe_seed, "Scenario and rlsm seed")->capture_default_str();
    pipeline->add_option("--algo", pipe_algo, "lsaa|lsaadc|greedy|grid|exact")
        ->capture_default_str();
    pipeline->add_option("--method", pipe_method, "rlsa|ilsm|rlsm")->capture_default_str();
    pipeline->add_option("--k", pipe_k, "Coverage degree (default: 2 for lsaadc, else 1)");
    pipeline->add_option("--weights", pipe_weights, "NFWGA weights alpha,beta,gamma");
    pipeline->add_option("--alpha", pipe_alpha, "Weighted-greedy alpha (default 1/n)");
    pipeline->add_flag("--timings", pipe_timings, "Include runtime_ms in the output");
    pipe_field.attach(*pipeline);
    pipeline->add_option("--out", pipe_out, "Output path (default: stdout)");

    auto* bench = app.add_subcommand("bench", "Run the multi-trial benchmark");
    std::string bench_in, bench_out, bench_format = "csv", bench_nvals, bench_field, bench_sink;
    int bench_trials = 0, bench_parallel = 0;
    std::uint64_t bench_seed = 0;
    bool bench_timings = false;
    double bench_r = 0.0, bench_R = 0.0;
    bench->add_option("spec", bench_in, "Benchmark spec JSON path (default: built-in spec)");
    bench->add_option("--n-values", bench_nvals, "Comma-separated sensor counts");
    bench->add_option("--trials", bench_trials, "Trials per (n, config)");
    auto* bench_seed_opt = bench->add_option("--base-seed", bench_seed, "Base seed");
    bench->add_option("--parallel", bench_parallel,
                      "Worker threads (default: hardware concurrency)");
    bench->add_option("--field", bench_field, "Field size WxH in meters");
    bench->add_option("--r", bench_r, "Sensing radius r");
    bench->add_option("--R", bench_R, "Communication radius R");
    bench->add_option("--sink", bench_sink, "Sink position x,y");
    bench->add_option("--format", bench_format, "csv|json")->capture_default_str();
    bench->add_flag("--timings", bench_timings, "Include runtime_ms rows (not byte-stable)");
    bench->add_option("--out", bench_out, "Output path (default: stdout)");

    auto* oracle = app.add_subcommand("oracle", "Exact minimum cover for a small scenario");
    std::string oracle_in, oracle_out;
    OracleLimits oracle_limits;
    oracle->add_option("scenario", oracle_in, "Scenario JSON path")->required();
    oracle->add_option("--max-sensors", oracle_limits.max_sensors, "Sensor cap")
        ->capture_default_str();
    oracle->add_option("--max-positions", oracle_limits.max_positions, "Candidate cap")
        ->capture_default_str();
    oracle->add_option("--time-budget-ms", oracle_limits.time_budget_ms, "Search budget")
        ->capture_default_str();
    oracle->add_option("--out", oracle_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        emit(scenario_to_json(gen_field.make(gen_n, gen_seed)), gen_out);
    } else if (cover->parsed()) {
        Scenario sc = scenario_from_json(read_text_file(cover_in));
        WeightConfig w = cover_weights.empty() ? WeightConfig{} : parse_weights(cover_weights);
        emit(solution_to_json(run_cover(sc, cover_algo, w, cover_alpha, cover_limits)),
             cover_out);
    } else if (place->parsed()) {
        Scenario sc = scenario_from_json(read_text_file(place_in));
        CoverSolution sol = solution_from_json(read_text_file(place_solution));
        Deployment dep;
        switch (placement_method_from_name(place_method)) {
        case PlacementMethod::Rlsa: dep = rlsa(sol, sc); break;
        case PlacementMethod::Ilsm: dep = ilsm(sol, sc); break;
        case PlacementMethod::Rlsm: dep = rlsm(sol, sc, place_seed); break;
        }
        emit(deployment_to_json(dep), place_out);
    } else if (connect->parsed()) {
        Scenario sc = scenario_from_json(read_text_file(connect_in));
        Deployment dep = deployment_from_json(read_text_file(connect_dep));
        for (Point p : mst_steinerize(dep.cover_points(), sc.sink, sc.R))
            dep.relays.push_back(Relay{p, RelayRole::Connectivity, std::nullopt});
        emit(connect_result_to_json(dep, build_topology(dep.relays, sc.sink, sc.R)),
             connect_out);
    } else if (pipeline->parsed()) {
        Scenario sc;
        if (!pipe_in.empty())
            sc = scenario_from_json(read_text_file(pipe_in));
        else if (pipe_n >= 0)
            sc = pipe_field.make(pipe_n, pipe_seed);
        else
            throw std::invalid_argument("pipeline needs a scenario path or --n");
        PipelineConfig cfg;
        cfg.cover_algorithm = cover_algorithm_from_name(pipe_algo);
        cfg.placement = placement_method_from_name(pipe_method);
        cfg.coverage_k =
            pipe_k != 0 ? pipe_k : (cfg.cover_algorithm == CoverAlgorithm::Lsaadc ? 2 : 1);
        cfg.seed = pipe_seed;
        if (!pipe_weights.empty()) cfg.weights = parse_weights(pipe_weights);
        cfg.greedy_alpha = pipe_alpha;
        RunResult res = run_pipeline(sc, cfg);
        emit(run_result_to_json(res, sc, cfg, pipe_timings), pipe_out);
    } else if (bench->parsed()) {
        BenchmarkSpec spec = bench_in.empty() ? default_benchmark_spec()
                                              : benchmark_spec_from_json(read_text_file(bench_in));
        if (!bench_nvals.empty()) spec.n_values = parse_int_list(bench_nvals, "--n-values");
        if (bench_trials > 0) spec.trials = bench_trials;
        if (bench_seed_opt->count() > 0) spec.base_seed = bench_seed;
        if (!bench_field.empty()) {
            auto [w, h] = parse_field(bench_field);
            spec.field_width = w;
            spec.field_height = h;
        }
        if (bench_r > 0.0) spec.r = bench_r;
        if (bench_R > 0.0) spec.R = bench_R;
        if (!bench_sink.empty()) spec.sink = parse_point(bench_sink, "--sink");
        if (bench_timings) spec.include_timings = true;
        if (bench_parallel > 0)
            spec.parallelism = bench_parallel;
        else if (bench_in.empty())
            spec.parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        MetricsTable table = run_benchmark(spec);
        emit(render_results(table, output_format_from_name(bench_format)), bench_out);
    } else if (oracle->parsed()) {
        Scenario sc = scenario_from_json(read_text_file(oracle_in));
        Family family = enumerate_possible_positions(sc);
        emit(solution_to_json(exact_min_cover(sc, family, oracle_limits)), oracle_out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const relay::InfeasibleError& e) {
        std::cerr << "error (infeasible): " << e.what() << "\n";
        return 3;
    } catch (const relay::ResourceLimitError& e) {
        std::cerr << "error (resource limit): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

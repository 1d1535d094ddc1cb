#include "relay/harness.hpp"

#include "relay/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace relay {
namespace {

template <class E>
[[noreturn]] void relabel(const char* stage, const E& e) {
    throw E(std::string(stage) + ": " + e.what());
}

template <class F>
auto stage(const char* label, F&& fn) {
    try {
        return fn();
    } catch (const InfeasibleError& e) {
        relabel(label, e);
    } catch (const ResourceLimitError& e) {
        relabel(label, e);
    } catch (const ValidationError& e) {
        relabel(label, e);
    }
}

double mean_of(const std::vector<int>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (int x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double avg_pairwise(const std::vector<Point>& pts) {
    if (pts.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) sum += distance(pts[i], pts[j]);
    return sum / (static_cast<double>(pts.size()) * (pts.size() - 1) / 2.0);
}

} // namespace

const char* placement_method_name(PlacementMethod m) {
    switch (m) {
    case PlacementMethod::Rlsa: return "rlsa";
    case PlacementMethod::Ilsm: return "ilsm";
    case PlacementMethod::Rlsm: return "rlsm";
    }
    return "unknown";
}

void PipelineConfig::validate() const {
    weights.validate();
    if (coverage_k != 1 && coverage_k != 2)
        throw std::invalid_argument("coverage_k must be 1 or 2");
    if (coverage_k == 2 && cover_algorithm != CoverAlgorithm::Lsaadc)
        throw std::invalid_argument("coverage_k = 2 requires the double-cover algorithm");
    if (greedy_alpha < 0.0 || !std::isfinite(greedy_alpha))
        throw std::invalid_argument("greedy_alpha must be non-negative and finite");
}

std::string PipelineConfig::display_name() const {
    if (!name.empty()) return name;
    return std::string(cover_algorithm_name(cover_algorithm)) + "_" +
           placement_method_name(placement);
}

Scenario generate_scenario(int n, double field_width, double field_height, double r, double R,
                           Point sink, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("sensor count must be non-negative");
    Scenario sc;
    sc.field_width = field_width;
    sc.field_height = field_height;
    sc.r = r;
    sc.R = R;
    sc.sink = sink;
    SplitMix64 rng(seed);
    sc.sensors.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = rng.next_unit() * field_width;
        double y = rng.next_unit() * field_height;
        sc.sensors.push_back(Point{x, y});
    }
    sc.validate();
    return sc;
}

RunResult run_pipeline(const Scenario& scenario, const PipelineConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    scenario.validate();
    config.validate();

    Family family;
    if (config.cover_algorithm != CoverAlgorithm::Grid)
        family = stage("enumerate", [&] { return enumerate_possible_positions(scenario); });

    RunResult out;
    out.solution = stage("cover", [&]() -> CoverSolution {
        switch (config.cover_algorithm) {
        case CoverAlgorithm::Lsaa: return lsaa(scenario, family, config.weights);
        case CoverAlgorithm::Lsaadc: return lsaadc(scenario, family, config.weights);
        case CoverAlgorithm::WeightedGreedy: {
            double alpha = config.greedy_alpha;
            if (alpha == 0.0) alpha = scenario.n() > 0 ? 1.0 / scenario.n() : 0.5;
            return weighted_greedy(scenario, family, alpha);
        }
        case CoverAlgorithm::Grid: return grid_cover(scenario);
        case CoverAlgorithm::ExactOracle:
            return exact_min_cover(scenario, family, config.oracle_limits);
        }
        throw std::invalid_argument("unknown cover algorithm");
    });

    stage("validate", [&] { return validate_cover(scenario, out.solution, config.coverage_k); });

    out.deployment = stage("place", [&]() -> Deployment {
        switch (config.placement) {
        case PlacementMethod::Rlsa: return rlsa(out.solution, scenario);
        case PlacementMethod::Ilsm: return ilsm(out.solution, scenario);
        case PlacementMethod::Rlsm: return rlsm(out.solution, scenario, config.seed);
        }
        throw std::invalid_argument("unknown placement method");
    });

    const std::vector<Point> cover_pts = out.deployment.cover_points();
    std::vector<Point> steiner =
        stage("steinerize", [&] { return mst_steinerize(cover_pts, scenario.sink, scenario.R); });
    for (Point p : steiner)
        out.deployment.relays.push_back(Relay{p, RelayRole::Connectivity, std::nullopt});

    out.topology = build_topology(out.deployment.relays, scenario.sink, scenario.R);

    out.metrics.relay_count_cover = static_cast<int>(cover_pts.size());
    out.metrics.relay_count_connectivity = static_cast<int>(steiner.size());
    out.metrics.avg_node_degree = mean_of(coverage_degrees(scenario, cover_pts));
    out.metrics.avg_pairwise_relay_distance = avg_pairwise(cover_pts);
    out.metrics.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

BenchmarkSpec default_benchmark_spec() {
    BenchmarkSpec spec;
    for (int n = 10; n <= 100; n += 10) spec.n_values.push_back(n);
    spec.trials = 100;

    auto config = [](std::string name, CoverAlgorithm algo, PlacementMethod method, int k) {
        PipelineConfig c;
        c.name = std::move(name);
        c.cover_algorithm = algo;
        c.placement = method;
        c.coverage_k = k;
        return c;
    };
    spec.configs = {
        config("lsaa_rlsa", CoverAlgorithm::Lsaa, PlacementMethod::Rlsa, 1),
        config("lsaa_ilsm", CoverAlgorithm::Lsaa, PlacementMethod::Ilsm, 1),
        config("lsaa_rlsm", CoverAlgorithm::Lsaa, PlacementMethod::Rlsm, 1),
        config("greedy_ilsm", CoverAlgorithm::WeightedGreedy, PlacementMethod::Ilsm, 1),
        config("grid_ilsm", CoverAlgorithm::Grid, PlacementMethod::Ilsm, 1),
        config("lsaadc_rlsa", CoverAlgorithm::Lsaadc, PlacementMethod::Rlsa, 2),
    };
    return spec;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int n, int trial) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
}

void parallel_for(int count, int parallelism, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    int threads = std::max(1, std::min(parallelism, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

struct TrialOutcome {
    bool ok = false;
    Metrics metrics;
    std::string error;
};

void append_rows(MetricsTable& table, int n, const std::string& config_name,
                 const std::vector<TrialOutcome>& outcomes, bool include_timings) {
    struct Extract {
        const char* name;
        double (*get)(const Metrics&);
    };
    static constexpr Extract kFields[] = {
        {"relay_count_cover", [](const Metrics& m) { return double(m.relay_count_cover); }},
        {"relay_count_connectivity",
         [](const Metrics& m) { return double(m.relay_count_connectivity); }},
        {"total_relays",
         [](const Metrics& m) { return double(m.relay_count_cover + m.relay_count_connectivity); }},
        {"avg_node_degree", [](const Metrics& m) { return m.avg_node_degree; }},
        {"avg_pairwise_relay_distance",
         [](const Metrics& m) { return m.avg_pairwise_relay_distance; }},
        {"runtime_ms", [](const Metrics& m) { return m.runtime_ms; }},
    };
    for (const auto& field : kFields) {
        if (!include_timings && std::string(field.name) == "runtime_ms") continue;
        MetricsRow row;
        row.n = n;
        row.config_name = config_name;
        row.metric_name = field.name;
        for (const auto& oc : outcomes)
            if (oc.ok) row.values.push_back(field.get(oc.metrics));
        row.trials = static_cast<int>(row.values.size());
        if (!row.values.empty()) {
            double sum = 0.0;
            for (double v : row.values) sum += v;
            row.mean = sum / static_cast<double>(row.values.size());
            if (row.values.size() > 1) {
                double sq = 0.0;
                for (double v : row.values) sq += (v - row.mean) * (v - row.mean);
                row.stddev = std::sqrt(sq / static_cast<double>(row.values.size() - 1));
            }
        }
        table.rows.push_back(std::move(row));
    }
}

} // namespace

MetricsTable run_benchmark(const BenchmarkSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (spec.n_values.empty()) throw std::invalid_argument("n_values must not be empty");
    if (spec.configs.empty()) throw std::invalid_argument("configs must not be empty");
    for (const auto& c : spec.configs) c.validate();
    const Point sink =
        spec.sink.value_or(Point{spec.field_width / 2.0, spec.field_height / 2.0});

    MetricsTable table;
    table.base_seed = spec.base_seed;
    table.include_timings = spec.include_timings;
    for (int n : spec.n_values) {
        for (const auto& config : spec.configs) {
            std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(spec.trials));
            parallel_for(spec.trials, spec.parallelism, [&](int t) {
                auto& slot = outcomes[static_cast<std::size_t>(t)];
                const std::uint64_t seed = trial_seed(spec.base_seed, n, t);
                try {
                    Scenario sc = generate_scenario(n, spec.field_width, spec.field_height,
                                                    spec.r, spec.R, sink, seed);
                    PipelineConfig cfg = config;
                    cfg.seed = seed;
                    RunResult res = run_pipeline(sc, cfg);
                    slot.ok = true;
                    slot.metrics = res.metrics;
                } catch (const std::exception& e) {
                    slot.error = e.what();
                }
            });
            const std::string name = config.display_name();
            for (int t = 0; t < spec.trials; ++t)
                if (!outcomes[static_cast<std::size_t>(t)].ok)
                    table.failures.push_back(
                        TrialFailure{n, name, t, outcomes[static_cast<std::size_t>(t)].error});
            append_rows(table, n, name, outcomes, spec.include_timings);
        }
    }
    return table;
}

} // namespace relay

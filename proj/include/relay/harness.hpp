#pragma once

#include "relay/connectivity.hpp"
#include "relay/cover.hpp"
#include "relay/placement.hpp"
#include "relay/rng.hpp"
#include "relay/scenario.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace relay {

enum class PlacementMethod { Rlsa, Ilsm, Rlsm };

const char* placement_method_name(PlacementMethod m);

struct PipelineConfig {
    std::string name;  // row label; empty means "<algorithm>_<placement>"
    CoverAlgorithm cover_algorithm = CoverAlgorithm::Lsaa;
    PlacementMethod placement = PlacementMethod::Rlsa;
    WeightConfig weights;
    int coverage_k = 1;  // 2 requires the double-cover algorithm
    std::uint64_t seed = 0;
    double greedy_alpha = 0.0;  // weighted greedy only; 0 means 1/n
    OracleLimits oracle_limits;

    void validate() const;
    std::string display_name() const;
};

// Coverage metrics count Cover relays only; Connectivity relays serve the
// high tier and are reported through relay_count_connectivity.
struct Metrics {
    int relay_count_cover = 0;
    int relay_count_connectivity = 0;
    double avg_node_degree = 0.0;              // mean over sensors, geometric
    double avg_pairwise_relay_distance = 0.0;  // over Cover relay pairs
    double runtime_ms = 0.0;
    std::optional<double> ratio_to_optimum;
};

struct RunResult {
    CoverSolution solution;
    Deployment deployment;
    TopologyGraph topology;
    Metrics metrics;
};

// n sensor points i.i.d. uniform over the field, drawn from the splitmix64/1
// stream; byte-identical scenarios per (n, seed).
Scenario generate_scenario(int n, double field_width, double field_height, double r, double R,
                           Point sink, std::uint64_t seed);

// enumerate -> cover -> validate -> place -> steinerize -> metrics.
// Infeasibility, resource, and validation errors are rethrown with the
// failing stage prefixed to the message.
RunResult run_pipeline(const Scenario& scenario, const PipelineConfig& config);

struct BenchmarkSpec {
    std::vector<int> n_values;
    int trials = 100;
    std::vector<PipelineConfig> configs;
    int parallelism = 1;
    std::uint64_t base_seed = 1;
    double field_width = 100.0;
    double field_height = 100.0;
    double r = 10.0;
    double R = 20.0;
    std::optional<Point> sink;  // default: field center
    bool include_timings = false;
};

// The comparison set: lsaa under all three placements, the two baseline
// covers, and the double-cover pipeline. n = 10..100, 100 trials.
BenchmarkSpec default_benchmark_spec();

struct MetricsRow {
    int n = 0;
    std::string config_name;
    std::string metric_name;
    double mean = 0.0;
    double stddev = 0.0;
    int trials = 0;                // successful trials
    std::vector<double> values;    // per successful trial, in trial order
};

struct TrialFailure {
    int n = 0;
    std::string config_name;
    int trial = 0;
    std::string message;
};

struct MetricsTable {
    std::vector<MetricsRow> rows;
    std::vector<TrialFailure> failures;
    std::uint64_t base_seed = 0;
    std::string prng = kPrngId;
    bool include_timings = false;
};

std::uint64_t trial_seed(std::uint64_t base_seed, int n, int trial);

// Per (n, config), trial t runs on trial_seed(base_seed, n, t); every config
// sees the same scenarios. Failed trials are excluded and recorded. Results
// are identical for any parallelism degree.
MetricsTable run_benchmark(const BenchmarkSpec& spec);

// Deterministic indexed parallel map; fn(i) writes only its own slot and
// must not throw.
void parallel_for(int count, int parallelism, const std::function<void(int)>& fn);

} // namespace relay

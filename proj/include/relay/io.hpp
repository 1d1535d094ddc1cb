#pragma once

#include "relay/harness.hpp"

#include <string>

namespace relay {

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_name(const std::string& name);
CoverAlgorithm cover_algorithm_from_name(const std::string& name);
PlacementMethod placement_method_from_name(const std::string& name);

// Scenario files: {"schema":"relay-placer/1","field":[w,h],"r":..,"R":..,
// "sink":[x,y],"sensors":[[x,y],..]}; lengths in meters. Coordinates are
// serialized round-trip exact; unknown keys are ignored on read. Malformed
// input raises std::invalid_argument.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

std::string solution_to_json(const CoverSolution& solution);
CoverSolution solution_from_json(const std::string& text);

std::string deployment_to_json(const Deployment& deployment);
Deployment deployment_from_json(const std::string& text);

std::string topology_to_json(const TopologyGraph& graph);

// Steinerized deployment plus its topology, as one "connect/1" record.
std::string connect_result_to_json(const Deployment& deployment, const TopologyGraph& graph);

// Full single-run record; runtime_ms appears only with include_timings so
// records stay byte-stable per (scenario, config).
std::string run_result_to_json(const RunResult& result, const Scenario& scenario,
                               const PipelineConfig& config, bool include_timings);

// Benchmark tables. CSV columns: n,config_name,metric_name,mean,stddev,trials;
// JSON mirrors the rows plus per-trial values and recorded failures. Floats
// carry 9 significant digits; identical tables render identical bytes.
std::string render_results(const MetricsTable& table, OutputFormat format);
MetricsTable results_from_json(const std::string& text);

void emit_results(const MetricsTable& table, OutputFormat format, const std::string& path);

// Benchmark spec files ("bench/1"); every key is optional and defaults to
// the built-in comparison spec.
std::string benchmark_spec_to_json(const BenchmarkSpec& spec);
BenchmarkSpec benchmark_spec_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace relay

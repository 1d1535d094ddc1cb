#pragma once

#include "relay/candidates.hpp"
#include "relay/scenario.hpp"

#include <span>
#include <utility>
#include <vector>

namespace relay {

// Scoring weights for the neighbor-first greedy. The defaults are the
// benchmark configuration; gamma is a mild preference for overlapping
// already-covered sensors and must stay well below the other two.
struct WeightConfig {
    double alpha = 5.0;  // still-uncovered sensors adjacent to the deployed front
    double beta = 1.0;   // other still-uncovered sensors
    double gamma = 0.01; // already-covered sensors
    void validate() const;
};

enum class CoverAlgorithm { Lsaa, Lsaadc, WeightedGreedy, Grid, ExactOracle };

const char* cover_algorithm_name(CoverAlgorithm a);

// A picked position, resolved so downstream stages need no family lookup.
// Double-cover repair picks carry fresh ids past the original family and are
// flagged second_pass.
struct ChosenPosition {
    int position_id = -1;
    std::vector<int> covered;  // sorted global sensor indices
    Point anchor;
    bool second_pass = false;
};

struct CoverSolution {
    std::vector<ChosenPosition> positions;  // in pick order
    std::vector<int> degrees;               // per sensor, from set membership
    CoverAlgorithm algorithm = CoverAlgorithm::Lsaa;

    std::vector<int> position_ids() const;
};

// Neighbor-first weighted greedy: repeatedly picks the position maximizing
// alpha * |P ∩ SN| + beta * |P ∩ (uncovered \ SN)| + gamma * |P ∩ covered|,
// where SN is the uncovered sensors reachable through neighbors of already
// deployed or selected positions. Ties go to the lowest id. Returns picks in
// order; throws InfeasibleError when a target sensor cannot be covered.
std::vector<int> nfwga(const std::vector<int>& targets, const Family& family,
                       const WeightConfig& weights, const std::vector<int>& deployed);

// Two-phase cover: grab a seed position covering the most uncovered sensors,
// cover the surrounding ring with nfwga, then try to swap each picked member
// for a strictly larger available position before committing the batch.
CoverSolution lsaa(const Scenario& scenario, const Family& family,
                   const WeightConfig& weights = {});

// Double cover: run lsaa, then rerun it over a freshly enumerated family
// restricted to the sensors still covered by fewer than two positions.
CoverSolution lsaadc(const Scenario& scenario, const Family& family,
                     const WeightConfig& weights = {});

// Baseline greedy with weight |U ∩ P| - alpha * (|P| - |U ∩ P|), 0 < alpha <= 1/n.
CoverSolution weighted_greedy(const Scenario& scenario, const Family& family, double alpha);

// Baseline cover restricted to vertices of a square grid of pitch r * sqrt(2)
// laid over the field; plain greedy with row-major tie-breaks.
CoverSolution grid_cover(const Scenario& scenario);

// Vertex counts (nx, ny) of that grid; exposed for tests and diagnostics.
std::pair<int, int> grid_dimensions(const Scenario& scenario);

struct OracleLimits {
    int max_sensors = 14;
    int max_positions = 30;
    double time_budget_ms = 10000.0;
};

// Provably minimum cover by branch and bound; deterministic (returns the
// lexicographically smallest id set among minima, ids ascending). Throws
// ResourceLimitError beyond the limits, InfeasibleError when no cover exists.
CoverSolution exact_min_cover(const Scenario& scenario, const Family& family,
                              const OracleLimits& limits = {});

// Per-sensor coverage degrees recomputed from relay coordinates.
std::vector<int> coverage_degrees(const Scenario& scenario, std::span<const Point> relays);

// Geometric re-check of a solution through its anchors; throws ValidationError
// naming the first sensor below degree k, otherwise returns the degree vector.
std::vector<int> validate_cover(const Scenario& scenario, const CoverSolution& solution, int k);

} // namespace relay

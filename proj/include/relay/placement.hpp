#pragma once

#include "relay/cover.hpp"
#include "relay/scenario.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace relay {

// Relays closer than this are co-located; placement never emits such a pair.
inline constexpr double kMinRelaySeparation = 1e-6;

enum class RelayRole { Cover, Connectivity };

struct Relay {
    Point position;
    RelayRole role = RelayRole::Cover;
    std::optional<int> source_position_id;
};

struct Deployment {
    std::vector<Relay> relays;
    // Number of positions whose whole sensor set lies within r of the sink;
    // for those the sink itself joins the candidate list.
    int sink_candidate_uses = 0;

    std::vector<Point> cover_points() const;
};

// Sink-nearest placement: per position, the full-covering candidate (arc
// points nearest the sink, pair intersections, lone-sensor disc points, the
// anchor) closest to the sink, ties by (x, y). Colliding picks fall through
// to the next-nearest candidate, then to a micro-offset.
Deployment rlsa(const CoverSolution& solution, const Scenario& scenario);

// Intersection convention: taking sensor-index pairs in order, the first
// lens with a corner covering the whole position decides, and its
// sink-nearer corner wins (ties by (x, y)); singletons sit on their sensor;
// fallback is the anchor. Collision handling as in rlsa.
Deployment ilsm(const CoverSolution& solution, const Scenario& scenario);

// Uniform random choice among the position's full-covering pair
// intersections (the anchor when no pair yields one), deterministic per
// seed. Collision handling as in rlsa.
Deployment rlsm(const CoverSolution& solution, const Scenario& scenario, std::uint64_t rng_seed);

} // namespace relay

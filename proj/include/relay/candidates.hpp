#pragma once

#include "relay/geometry.hpp"
#include "relay/scenario.hpp"

#include <vector>

namespace relay {

enum class PositionKind { PairIntersection, SensorCenter };

// One canonical covering region: the covered sensor subset plus a concrete
// representative coordinate realizing it.
struct PossiblePosition {
    int id = -1;
    std::vector<int> covered;  // sorted sensor indices, never empty
    Point anchor;
    PositionKind kind = PositionKind::SensorCenter;
};

using Family = std::vector<PossiblePosition>;

// Every distinct covering region reachable by one relay. Candidate coordinates
// are the pair intersection points of sensor discs at distance <= 2r plus the
// sensor centers; candidates with identical covered sets are deduplicated,
// keeping the lexicographically smallest anchor. The result is sorted by
// descending coverage, ties by lexicographic covered set, and carries dense
// ids 0..|family|-1. |family| <= n(n+1).
Family enumerate_possible_positions(const Scenario& scenario);

// Ids of positions sharing at least one covered sensor with family[pid].
std::vector<int> neighbors(int pid, const Family& family);

struct Group {
    int seed = -1;
    std::vector<int> neighbor_ids;
    std::vector<int> core_sensors;  // seed coverage, restricted to `remaining`
    std::vector<int> ring_sensors;  // neighbor coverage outside the seed, restricted to `remaining`
};

// remaining: sorted sensor indices still of interest (typically the uncovered set).
Group build_group(int pid, const Family& family, const std::vector<int>& remaining);

} // namespace relay

#pragma once

#include "relay/geometry.hpp"

#include <vector>

namespace relay {

// One problem instance: sensor locations in a rectangular field, the sink,
// the coverage radius r (low tier) and the relay communication radius R
// (high tier, R >= 2r).
struct Scenario {
    double field_width = 0.0;
    double field_height = 0.0;
    std::vector<Point> sensors;
    Point sink;
    double r = 0.0;
    double R = 0.0;

    int n() const { return static_cast<int>(sensors.size()); }

    // Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

} // namespace relay

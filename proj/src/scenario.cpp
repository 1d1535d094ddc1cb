#include "relay/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relay {

namespace {

bool inside_field(Point p, double w, double h) {
    return std::isfinite(p.x) && std::isfinite(p.y) &&
           p.x >= 0.0 && p.x <= w && p.y >= 0.0 && p.y <= h;
}

} // namespace

void Scenario::validate() const {
    if (!(std::isfinite(field_width) && field_width > 0.0) ||
        !(std::isfinite(field_height) && field_height > 0.0)) {
        throw std::invalid_argument("field dimensions must be positive");
    }
    if (!(std::isfinite(r) && r > 0.0)) throw std::invalid_argument("r must be positive");
    if (!(std::isfinite(R) && R >= 2.0 * r)) {
        throw std::invalid_argument("communication radius R must be at least 2r");
    }
    if (!inside_field(sink, field_width, field_height)) {
        throw std::invalid_argument("sink lies outside the field");
    }
    for (std::size_t i = 0; i < sensors.size(); ++i) {
        if (!inside_field(sensors[i], field_width, field_height)) {
            throw std::invalid_argument("sensor " + std::to_string(i) + " lies outside the field");
        }
    }
}

} // namespace relay

#include "relay/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relay {

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

double norm(Point p) { return std::hypot(p.x, p.y); }

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool lex_less(Point a, Point b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

double geom_tol(double radius) { return 1e-9 * std::max(1.0, radius); }

bool in_disc(Point center, double radius, Point p) {
    return distance(center, p) <= radius + geom_tol(radius);
}

namespace {

void check_radius(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
}

// Rejects disc pairs without a well-defined intersection arc.
double checked_center_distance(Point xi, Point xj, double radius) {
    check_radius(radius);
    const double tol = geom_tol(radius);
    const double d = distance(xi, xj);
    if (d <= tol) throw std::invalid_argument("concentric discs have no intersection arc");
    if (d > 2.0 * radius + tol) throw std::invalid_argument("discs do not intersect");
    return d;
}

} // namespace

std::vector<Point> circle_intersections(Point c1, Point c2, double radius) {
    check_radius(radius);
    const double tol = geom_tol(radius);
    const double d = distance(c1, c2);
    if (d <= tol) return {};  // concentric (identical circles): no isolated points
    const Point mid{(c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0};
    if (std::abs(d - 2.0 * radius) <= tol) return {mid};  // tangent
    if (d > 2.0 * radius) return {};                      // disjoint
    // Equal radii, so both points sit on the perpendicular bisector of c1c2.
    const double h = std::sqrt(std::max(0.0, radius * radius - d * d / 4.0));
    const double ux = (c2.x - c1.x) / d;
    const double uy = (c2.y - c1.y) / d;
    return {Point{mid.x - uy * h, mid.y + ux * h},
            Point{mid.x + uy * h, mid.y - ux * h}};
}

Point nearest_point_on_disc(Point center, double radius, Point target) {
    check_radius(radius);
    const double d = distance(center, target);
    if (d <= radius) return target;
    const double s = radius / d;
    return {center.x + (target.x - center.x) * s,
            center.y + (target.y - center.y) * s};
}

ArcQueryResult nps(Point xi, Point xj, double radius, Point sink) {
    checked_center_distance(xi, xj, radius);
    if (in_disc(xi, radius, sink) && in_disc(xj, radius, sink)) {
        return {sink, ArcBranch::SinkInsideLens};
    }
    const double tol = geom_tol(radius);
    struct Candidate {
        Point p;
        ArcBranch branch;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(4);
    const Point centers[2] = {xi, xj};
    const Point others[2] = {xj, xi};
    for (int k = 0; k < 2; ++k) {
        const double ds = distance(centers[k], sink);
        if (ds <= tol) continue;  // ray direction undefined; the endpoints handle it
        const double s = radius / ds;
        const Point p{centers[k].x + (sink.x - centers[k].x) * s,
                      centers[k].y + (sink.y - centers[k].y) * s};
        // p is the circle point nearest to the sink; usable only if it lies on
        // the shared arc, i.e. inside the other disc.
        if (in_disc(others[k], radius, p)) candidates.push_back({p, ArcBranch::RayHitOnArc});
    }
    const auto ends = circle_intersections(xi, xj, radius);
    candidates.push_back({ends.front(), ArcBranch::EndpointC});
    if (ends.size() == 2) candidates.push_back({ends.back(), ArcBranch::EndpointD});

    // A ray hit is the global minimum over its whole circle, so taking the best
    // candidate overall is exact; ties resolve toward the earlier entry (ray
    // hits first, then endpoint C).
    const Candidate* best = nullptr;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
        const double ds = distance(c.p, sink);
        if (ds < best_dist) {
            best_dist = ds;
            best = &c;
        }
    }
    return {best->p, best->branch};
}

Point arc_nearest_oracle(Point xi, Point xj, double radius, Point sink, int samples) {
    const double d = checked_center_distance(xi, xj, radius);
    if (samples < 3) throw std::invalid_argument("samples must be at least 3");
    // Each circle contributes the arc lying inside the other disc; its half
    // angle around the center-to-center direction is acos(d / 2r).
    const double half = std::acos(std::clamp(std::min(d, 2.0 * radius) / (2.0 * radius), -1.0, 1.0));
    Point best{};
    double best_dist = std::numeric_limits<double>::infinity();
    const Point centers[2] = {xi, xj};
    const Point others[2] = {xj, xi};
    for (int k = 0; k < 2; ++k) {
        const double base = std::atan2(others[k].y - centers[k].y, others[k].x - centers[k].x);
        for (int i = 0; i < samples; ++i) {
            const double t = base - half + (2.0 * half) * i / (samples - 1);
            const Point p{centers[k].x + radius * std::cos(t),
                          centers[k].y + radius * std::sin(t)};
            const double ds = distance(p, sink);
            if (ds < best_dist) {
                best_dist = ds;
                best = p;
            }
        }
    }
    return best;
}

} // namespace relay

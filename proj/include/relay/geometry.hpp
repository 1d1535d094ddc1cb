#pragma once

#include <vector>

namespace relay {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double dot(Point a, Point b);
double norm(Point p);
double distance(Point a, Point b);

// (x, then y) ordering used for deterministic tie-breaks.
bool lex_less(Point a, Point b);

// Absolute slack shared by all disc-membership and tangency predicates.
double geom_tol(double radius);

// Closed-disc membership with tol slack.
bool in_disc(Point center, double radius, Point p);

// Intersection points of two circles of the same radius.
// Returns 2 points (the one on the left of the c1->c2 direction first),
// 1 point when the circles are tangent within tol, and 0 when they are
// concentric or too far apart. Throws std::invalid_argument for radius <= 0.
std::vector<Point> circle_intersections(Point c1, Point c2, double radius);

// Point of the closed disc nearest to target (target itself when inside).
Point nearest_point_on_disc(Point center, double radius, Point target);

enum class ArcBranch {
    RayHitOnArc,     // center-to-sink ray meets the circle on the shared arc
    EndpointC,       // first arc endpoint is nearest
    EndpointD,       // second arc endpoint is nearest
    SinkInsideLens,  // sink covers both sensors already; the sink itself is returned
};

struct ArcQueryResult {
    Point point;
    ArcBranch branch;
};

// Point of the lens boundary (the two-disc intersection arc) nearest to sink.
// Preconditions: radius > 0 and 0 < ||xi - xj|| <= 2 * radius (within tol);
// throws std::invalid_argument for concentric or non-intersecting discs.
ArcQueryResult nps(Point xi, Point xj, double radius, Point sink);

// Sampling reference for nps: evaluates `samples` points per boundary arc
// and returns the best sample. Same preconditions as nps; samples >= 3.
Point arc_nearest_oracle(Point xi, Point xj, double radius, Point sink, int samples);

} // namespace relay

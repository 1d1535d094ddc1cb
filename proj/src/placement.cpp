#include "relay/placement.hpp"

#include "relay/rng.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace relay {
namespace {

bool covers_all(Point p, const Scenario& sc, const std::vector<int>& sensors) {
    for (int s : sensors)
        if (!in_disc(p, sc.r, sc.sensors[static_cast<std::size_t>(s)])) return false;
    return true;
}

// Candidate pool of the sink-nearest strategy: arc points and intersections
// of every neighbor pair, disc points of lone sensors, the anchor, and the
// sink when it covers the whole position. Filtered to full-covering points
// and sorted by (distance to sink, x, y).
std::vector<Point> rlsa_candidates(const ChosenPosition& cp, const Scenario& sc, bool* sink_added) {
    const double r = sc.r;
    const double tol = geom_tol(r);
    const auto& ids = cp.covered;
    std::vector<Point> raw;
    std::vector<char> paired(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            Point a = sc.sensors[static_cast<std::size_t>(ids[i])];
            Point b = sc.sensors[static_cast<std::size_t>(ids[j])];
            double d = distance(a, b);
            if (d <= tol || d > 2.0 * r + tol) continue;
            paired[i] = paired[j] = 1;
            raw.push_back(nps(a, b, r, sc.sink).point);
            for (Point q : circle_intersections(a, b, r)) raw.push_back(q);
        }
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (!paired[i])
            raw.push_back(nearest_point_on_disc(sc.sensors[static_cast<std::size_t>(ids[i])], r,
                                                sc.sink));
    raw.push_back(cp.anchor);
    if (covers_all(sc.sink, sc, ids)) {
        raw.push_back(sc.sink);
        if (sink_added) *sink_added = true;
    }

    std::vector<Point> out;
    for (Point q : raw)
        if (covers_all(q, sc, ids)) out.push_back(q);
    std::sort(out.begin(), out.end(), [&sc](Point a, Point b) {
        double da = distance(a, sc.sink);
        double db = distance(b, sc.sink);
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    return out;
}

// Pool for the random strategy: the sink-blind subset of the rlsa pool (the
// full-covering pair intersections, no sink-directed points), lex sorted,
// with the anchor only as the fallback when no intersection qualifies.
// Keeps the random draw free of any pull toward the sink or toward a fixed
// corner of the lens.
std::vector<Point> rlsm_candidates(const ChosenPosition& cp, const Scenario& sc) {
    const double r = sc.r;
    const double tol = geom_tol(r);
    const auto& ids = cp.covered;
    std::vector<Point> out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            Point a = sc.sensors[static_cast<std::size_t>(ids[i])];
            Point b = sc.sensors[static_cast<std::size_t>(ids[j])];
            double d = distance(a, b);
            if (d <= tol || d > 2.0 * r + tol) continue;
            for (Point q : circle_intersections(a, b, r))
                if (covers_all(q, sc, ids)) out.push_back(q);
        }
    }
    if (out.empty()) out.push_back(cp.anchor);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Intersection-selection pool: per pair of covered sensors, the covering
// circle intersections with the sink-nearer corner first (ties
// lexicographic), pairs visited in index order, the singleton's sensor,
// then the anchor as the fallback. The pick is the better corner of the
// first usable lens; unlike the full search this never projects onto arcs
// or disc boundaries and never shops across lenses, so the pull toward the
// sink is limited to a per-lens choice between two corners.
std::vector<Point> ilsm_candidates(const ChosenPosition& cp, const Scenario& sc) {
    const double r = sc.r;
    const double tol = geom_tol(r);
    const auto& ids = cp.covered;
    std::vector<Point> out;
    if (ids.size() == 1) {
        out.push_back(sc.sensors[static_cast<std::size_t>(ids[0])]);
    } else {
        const Point s = sc.sink;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                Point a = sc.sensors[static_cast<std::size_t>(ids[i])];
                Point b = sc.sensors[static_cast<std::size_t>(ids[j])];
                double d = distance(a, b);
                if (d <= tol || d > 2.0 * r + tol) continue;
                std::vector<Point> pts = circle_intersections(a, b, r);
                std::sort(pts.begin(), pts.end(), [s](Point u, Point v) {
                    double du = distance(u, s), dv = distance(v, s);
                    if (du != dv) return du < dv;
                    if (u.x != v.x) return u.x < v.x;
                    return u.y < v.y;
                });
                for (Point q : pts)
                    if (covers_all(q, sc, ids)) out.push_back(q);
            }
        }
    }
    out.push_back(cp.anchor);
    return out;
}

bool collides(Point p, const std::vector<Relay>& placed) {
    for (const auto& rl : placed)
        if (distance(p, rl.position) < kMinRelaySeparation) return true;
    return false;
}

// All candidates taken: nudge the preferred one toward its farthest covered
// sensor in growing steps until it clears every placed relay. The nudge is
// orders of magnitude below r, so coverage survives within tol.
Point offset_from(Point base, const ChosenPosition& cp, const Scenario& sc,
                  const std::vector<Relay>& placed) {
    Point dir{1.0, 0.0};
    double farthest = -1.0;
    for (int s : cp.covered) {
        double d = distance(base, sc.sensors[static_cast<std::size_t>(s)]);
        if (d > farthest) {
            farthest = d;
            dir = sc.sensors[static_cast<std::size_t>(s)] - base;
        }
    }
    double len = norm(dir);
    dir = len > geom_tol(sc.r) ? (1.0 / len) * dir : Point{1.0, 0.0};
    for (int k = 1;; ++k) {
        Point q = base + (static_cast<double>(k) * kMinRelaySeparation) * dir;
        if (!collides(q, placed)) return q;
    }
}

// First non-colliding candidate in priority order starting at `preferred`,
// cycling through the rest; micro-offset when every candidate collides.
Point place_one(const std::vector<Point>& candidates, std::size_t preferred,
                const ChosenPosition& cp, const Scenario& sc, const std::vector<Relay>& placed) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        Point q = candidates[(preferred + k) % candidates.size()];
        if (!collides(q, placed)) return q;
    }
    return offset_from(candidates[preferred], cp, sc, placed);
}

} // namespace

std::vector<Point> Deployment::cover_points() const {
    std::vector<Point> pts;
    for (const auto& rl : relays)
        if (rl.role == RelayRole::Cover) pts.push_back(rl.position);
    return pts;
}

Deployment rlsa(const CoverSolution& solution, const Scenario& scenario) {
    scenario.validate();
    Deployment dep;
    for (const auto& cp : solution.positions) {
        bool sink_added = false;
        std::vector<Point> cands = rlsa_candidates(cp, scenario, &sink_added);
        if (sink_added) ++dep.sink_candidate_uses;
        Point chosen = place_one(cands, 0, cp, scenario, dep.relays);
        dep.relays.push_back(Relay{chosen, RelayRole::Cover, cp.position_id});
    }
    return dep;
}

Deployment ilsm(const CoverSolution& solution, const Scenario& scenario) {
    scenario.validate();
    Deployment dep;
    for (const auto& cp : solution.positions) {
        std::vector<Point> cands = ilsm_candidates(cp, scenario);
        Point chosen = place_one(cands, 0, cp, scenario, dep.relays);
        dep.relays.push_back(Relay{chosen, RelayRole::Cover, cp.position_id});
    }
    return dep;
}

Deployment rlsm(const CoverSolution& solution, const Scenario& scenario, std::uint64_t rng_seed) {
    scenario.validate();
    SplitMix64 rng(rng_seed);
    Deployment dep;
    for (const auto& cp : solution.positions) {
        std::vector<Point> cands = rlsm_candidates(cp, scenario);
        std::size_t pick = static_cast<std::size_t>(rng.next_below(cands.size()));
        Point chosen = place_one(cands, pick, cp, scenario, dep.relays);
        dep.relays.push_back(Relay{chosen, RelayRole::Cover, cp.position_id});
    }
    return dep;
}

} // namespace relay

#include "relay/candidates.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relay {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

void check_pid(int pid, const Family& family) {
    if (pid < 0 || pid >= static_cast<int>(family.size())) {
        throw std::invalid_argument("position id out of range");
    }
}

} // namespace

Family enumerate_possible_positions(const Scenario& scenario) {
    scenario.validate();
    const auto& xs = scenario.sensors;
    const int n = scenario.n();
    if (n == 0) return {};
    const double r = scenario.r;
    const double tol = geom_tol(r);

    struct Candidate {
        Point p;
        PositionKind kind;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double d = distance(xs[a], xs[b]);
            if (d <= tol || d > 2.0 * r + tol) continue;
            // Only proper lenses contribute corners; a tangent pair's single
            // grazing point is skipped.
            auto pts = circle_intersections(xs[a], xs[b], r);
            if (pts.size() != 2) continue;
            for (Point p : pts) candidates.push_back({p, PositionKind::PairIntersection});
        }
    }
    for (const Point& x : xs) candidates.push_back({x, PositionKind::SensorCenter});

    // Lexicographically smallest anchor wins when covered sets collide.
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.p.x != b.p.x) return a.p.x < b.p.x;
        if (a.p.y != b.p.y) return a.p.y < b.p.y;
        return a.kind < b.kind;
    });

    std::map<std::vector<int>, Candidate> by_set;
    std::vector<int> covered;
    for (const auto& c : candidates) {
        covered.clear();
        for (int s = 0; s < n; ++s) {
            if (in_disc(c.p, r, xs[s])) covered.push_back(s);
        }
        by_set.emplace(covered, c);  // emplace keeps the first (smallest) anchor
    }

    Family family;
    family.reserve(by_set.size());
    for (const auto& [cov, c] : by_set) {
        family.push_back({-1, cov, c.p, c.kind});
    }
    std::sort(family.begin(), family.end(), [](const PossiblePosition& a, const PossiblePosition& b) {
        if (a.covered.size() != b.covered.size()) return a.covered.size() > b.covered.size();
        return a.covered < b.covered;
    });
    for (std::size_t i = 0; i < family.size(); ++i) family[i].id = static_cast<int>(i);
    return family;
}

std::vector<int> neighbors(int pid, const Family& family) {
    check_pid(pid, family);
    std::vector<int> out;
    const auto& base = family[pid].covered;
    for (const auto& q : family) {
        if (q.id == pid) continue;
        if (sorted_intersects(base, q.covered)) out.push_back(q.id);
    }
    return out;
}

Group build_group(int pid, const Family& family, const std::vector<int>& remaining) {
    check_pid(pid, family);
    Group g;
    g.seed = pid;
    g.neighbor_ids = neighbors(pid, family);

    std::vector<int> neighbor_cover;
    for (int j : g.neighbor_ids) {
        std::vector<int> merged;
        std::set_union(neighbor_cover.begin(), neighbor_cover.end(),
                       family[j].covered.begin(), family[j].covered.end(),
                       std::back_inserter(merged));
        neighbor_cover = std::move(merged);
    }

    g.core_sensors = sorted_intersection(family[pid].covered, remaining);
    g.ring_sensors = sorted_intersection(sorted_difference(neighbor_cover, family[pid].covered), remaining);
    return g;
}

} // namespace relay

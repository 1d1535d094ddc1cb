#include "relay/cover.hpp"

#include "relay/errors.hpp"
#include "bits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relay {
namespace {

using detail::Bits;

struct FamilyIndex {
    int n = 0;
    std::vector<Bits> covered;
    std::vector<Bits> front;  // union of covers over positions sharing a sensor, self included
    std::vector<int> size;
};

FamilyIndex make_index(const Family& family, int n) {
    FamilyIndex ix;
    ix.n = n;
    ix.covered.reserve(family.size());
    ix.size.reserve(family.size());
    std::vector<Bits> sensor_front(static_cast<std::size_t>(n), Bits(n));
    for (const auto& p : family) {
        Bits b = Bits::from_indices(n, p.covered);
        for (int s : p.covered) sensor_front[static_cast<std::size_t>(s)].or_with(b);
        ix.size.push_back(static_cast<int>(p.covered.size()));
        ix.covered.push_back(std::move(b));
    }
    ix.front.reserve(family.size());
    for (const auto& p : family) {
        Bits f(n);
        for (int s : p.covered) f.or_with(sensor_front[static_cast<std::size_t>(s)]);
        ix.front.push_back(std::move(f));
    }
    return ix;
}

ChosenPosition resolve(const Family& family, int id) {
    const auto& p = family[static_cast<std::size_t>(id)];
    return ChosenPosition{p.id, p.covered, p.anchor, false};
}

std::vector<int> degrees_of(int n, const std::vector<ChosenPosition>& positions) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& cp : positions)
        for (int s : cp.covered) ++deg[static_cast<std::size_t>(s)];
    return deg;
}

int first_set(const Bits& b) {
    for (int i = 0; i < b.size_bits(); ++i)
        if (b.test(i)) return i;
    return -1;
}

// One pass of the neighbor-first greedy over an explicit candidate pool.
// The loop runs until `targets` is exhausted, but weights score against the
// wider `scored` set (all uncovered sensors when called from lsaa), so a
// pick that must cover a target still reaches for everything it can.
// Candidates that cover no target never win, so every round shrinks
// `targets` and the loop terminates.
std::vector<int> nfwga_impl(Bits targets, Bits scored, const std::vector<int>& candidate_ids,
                            const FamilyIndex& ix, const WeightConfig& w, Bits front_acc,
                            Bits covered_global) {
    std::vector<int> picks;
    while (targets.any()) {
        Bits sn = scored;
        sn.and_with(front_acc);
        int best = -1;
        double best_w = 0.0;
        for (int id : candidate_ids) {
            const Bits& cov = ix.covered[static_cast<std::size_t>(id)];
            if (cov.count_and(targets) == 0) continue;
            int fresh = cov.count_and(scored);
            int delta = cov.count_and(sn);
            int zeta = cov.count_and(covered_global);
            double weight = w.alpha * delta + w.beta * (fresh - delta) + w.gamma * zeta;
            if (best < 0 || weight > best_w) {
                best = id;
                best_w = weight;
            }
        }
        if (best < 0)
            throw InfeasibleError("no candidate position covers sensor " +
                                  std::to_string(first_set(targets)));
        picks.push_back(best);
        const Bits& cov = ix.covered[static_cast<std::size_t>(best)];
        targets.andnot_with(cov);
        scored.andnot_with(cov);
        covered_global.or_with(cov);
        front_acc.or_with(ix.front[static_cast<std::size_t>(best)]);
    }
    return picks;
}

int infer_sensor_count(const std::vector<int>& targets, const Family& family) {
    int n = 0;
    for (int t : targets) n = std::max(n, t + 1);
    for (const auto& p : family)
        if (!p.covered.empty()) n = std::max(n, p.covered.back() + 1);
    return n;
}

} // namespace

void WeightConfig::validate() const {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma)))
        throw std::invalid_argument("cover weights must be finite");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("cover weights alpha and beta must be positive");
    if (gamma < 0.0 || gamma > beta / 10.0)
        throw std::invalid_argument("cover weight gamma must lie in [0, beta/10]");
}

const char* cover_algorithm_name(CoverAlgorithm a) {
    switch (a) {
    case CoverAlgorithm::Lsaa: return "lsaa";
    case CoverAlgorithm::Lsaadc: return "lsaadc";
    case CoverAlgorithm::WeightedGreedy: return "weighted_greedy";
    case CoverAlgorithm::Grid: return "grid";
    case CoverAlgorithm::ExactOracle: return "exact";
    }
    return "unknown";
}

std::vector<int> CoverSolution::position_ids() const {
    std::vector<int> ids;
    ids.reserve(positions.size());
    for (const auto& p : positions) ids.push_back(p.position_id);
    return ids;
}

std::vector<int> nfwga(const std::vector<int>& targets, const Family& family,
                       const WeightConfig& weights, const std::vector<int>& deployed) {
    weights.validate();
    const int fcount = static_cast<int>(family.size());
    for (int id : deployed)
        if (id < 0 || id >= fcount)
            throw std::invalid_argument("deployed position id out of range: " + std::to_string(id));
    const int n = infer_sensor_count(targets, family);
    FamilyIndex ix = make_index(family, n);
    Bits remaining = Bits::from_indices(n, targets);
    Bits covered_global(n);
    Bits front_acc(n);
    for (int id : deployed) {
        covered_global.or_with(ix.covered[static_cast<std::size_t>(id)]);
        front_acc.or_with(ix.front[static_cast<std::size_t>(id)]);
    }
    remaining.andnot_with(covered_global);
    std::vector<int> candidate_ids(family.size());
    for (int i = 0; i < fcount; ++i) candidate_ids[static_cast<std::size_t>(i)] = i;
    Bits scored = remaining;
    return nfwga_impl(std::move(remaining), std::move(scored), candidate_ids, ix, weights,
                      std::move(front_acc), std::move(covered_global));
}

CoverSolution lsaa(const Scenario& scenario, const Family& family, const WeightConfig& weights) {
    scenario.validate();
    weights.validate();
    const int n = scenario.n();
    const int fcount = static_cast<int>(family.size());

    CoverSolution out;
    out.algorithm = CoverAlgorithm::Lsaa;
    if (n == 0) return out;

    FamilyIndex ix = make_index(family, n);
    Bits remaining = Bits::full(n);
    std::vector<char> avail(family.size(), 1);

    while (remaining.any()) {
        // Seed: the available position covering the most uncovered sensors.
        int seed = -1;
        int seed_gain = 0;
        for (int id = 0; id < fcount; ++id) {
            if (!avail[static_cast<std::size_t>(id)]) continue;
            int gain = ix.covered[static_cast<std::size_t>(id)].count_and(remaining);
            if (gain > seed_gain) {
                seed = id;
                seed_gain = gain;
            }
        }
        if (seed < 0)
            throw InfeasibleError("no candidate position covers sensor " +
                                  std::to_string(first_set(remaining)));
        avail[static_cast<std::size_t>(seed)] = 0;

        // Ring: uncovered sensors reachable through the seed's neighbors.
        Bits ring = ix.front[static_cast<std::size_t>(seed)];
        ring.andnot_with(ix.covered[static_cast<std::size_t>(seed)]);
        ring.and_with(remaining);

        std::vector<int> group;
        if (ring.any()) {
            std::vector<int> pool;
            pool.reserve(family.size());
            for (int id = 0; id < fcount; ++id)
                if (avail[static_cast<std::size_t>(id)]) pool.push_back(id);
            Bits covered_global = Bits::full(n);
            covered_global.andnot_with(remaining);
            Bits front_acc(n);
            for (const auto& cp : out.positions)
                front_acc.or_with(ix.front[static_cast<std::size_t>(cp.position_id)]);
            group = nfwga_impl(ring, remaining, pool, ix, weights, std::move(front_acc),
                               std::move(covered_global));
            for (int id : group) avail[static_cast<std::size_t>(id)] = 0;
        }

        // The seed enters the group only if the local picks left part of its
        // core uncovered; ids sort larger coverage first, so ties in the local
        // search favour positions that swallow the core and retire the seed.
        Bits core = ix.covered[static_cast<std::size_t>(seed)];
        core.and_with(remaining);
        for (int id : group) core.andnot_with(ix.covered[static_cast<std::size_t>(id)]);
        if (core.any()) group.insert(group.begin(), seed);

        // Swap each member for an available position that still covers the
        // member's unique share of the group and contributes strictly more
        // beyond what the rest of the group already covers; stragglers get
        // upgraded into bridges toward territory no group has claimed yet.
        // Replaced members stay out of the pool; the committed group never
        // loses coverage. A member whose contribution drops to nothing after
        // the upgrades around it is dropped.
        for (std::size_t j = 0; j < group.size(); ++j) {
            Bits others(n);
            for (std::size_t k = 0; k < group.size(); ++k)
                if (k != j) others.or_with(ix.covered[static_cast<std::size_t>(group[k])]);
            Bits open = remaining;
            open.andnot_with(others);
            Bits unique = ix.covered[static_cast<std::size_t>(group[j])];
            unique.andnot_with(others);
            int best = group[j];
            int bar = ix.covered[static_cast<std::size_t>(best)].count_and(open);
            for (int id = 0; id < fcount; ++id) {
                if (!avail[static_cast<std::size_t>(id)]) continue;
                int gain = ix.covered[static_cast<std::size_t>(id)].count_and(open);
                if (gain <= bar) continue;
                if (!unique.subset_of(ix.covered[static_cast<std::size_t>(id)])) continue;
                best = id;
                bar = gain;
            }
            if (best != group[j]) {
                avail[static_cast<std::size_t>(best)] = 0;
                group[j] = best;
            }
        }
        for (std::size_t j = group.size(); j-- > 0;) {
            Bits others(n);
            for (std::size_t k = 0; k < group.size(); ++k)
                if (k != j) others.or_with(ix.covered[static_cast<std::size_t>(group[k])]);
            Bits contrib = ix.covered[static_cast<std::size_t>(group[j])];
            contrib.and_with(remaining);
            contrib.andnot_with(others);
            if (!contrib.any()) group.erase(group.begin() + static_cast<std::ptrdiff_t>(j));
        }

        for (int id : group) {
            remaining.andnot_with(ix.covered[static_cast<std::size_t>(id)]);
            out.positions.push_back(resolve(family, id));
        }
    }

    out.degrees = degrees_of(n, out.positions);
    return out;
}

CoverSolution lsaadc(const Scenario& scenario, const Family& family, const WeightConfig& weights) {
    CoverSolution out = lsaa(scenario, family, weights);
    out.algorithm = CoverAlgorithm::Lsaadc;

    std::vector<int> thin;  // sensors short of double coverage after the first pass
    for (int s = 0; s < scenario.n(); ++s)
        if (out.degrees[static_cast<std::size_t>(s)] < 2) thin.push_back(s);
    if (thin.empty()) return out;

    Scenario sub = scenario;
    sub.sensors.clear();
    for (int s : thin) sub.sensors.push_back(scenario.sensors[static_cast<std::size_t>(s)]);
    Family sub_family = enumerate_possible_positions(sub);
    CoverSolution repair = lsaa(sub, sub_family, weights);

    const int base = static_cast<int>(family.size());
    for (const auto& cp : repair.positions) {
        ChosenPosition mapped;
        mapped.position_id = base + cp.position_id;
        mapped.anchor = cp.anchor;
        mapped.second_pass = true;
        mapped.covered.reserve(cp.covered.size());
        for (int local : cp.covered) mapped.covered.push_back(thin[static_cast<std::size_t>(local)]);
        out.positions.push_back(std::move(mapped));
    }
    out.degrees = degrees_of(scenario.n(), out.positions);
    return out;
}

CoverSolution weighted_greedy(const Scenario& scenario, const Family& family, double alpha) {
    scenario.validate();
    const int n = scenario.n();
    CoverSolution out;
    out.algorithm = CoverAlgorithm::WeightedGreedy;
    if (n == 0) return out;
    if (!(alpha > 0.0) || !(alpha <= 1.0 / n) || !std::isfinite(alpha))
        throw std::invalid_argument("weighted_greedy alpha must lie in (0, 1/n]");

    const int fcount = static_cast<int>(family.size());
    FamilyIndex ix = make_index(family, n);
    Bits remaining = Bits::full(n);
    while (remaining.any()) {
        int best = -1;
        double best_w = 0.0;
        for (int id = 0; id < fcount; ++id) {
            const Bits& cov = ix.covered[static_cast<std::size_t>(id)];
            int fresh = cov.count_and(remaining);
            if (fresh == 0) continue;
            double weight = fresh - alpha * (ix.size[static_cast<std::size_t>(id)] - fresh);
            if (best < 0 || weight > best_w) {
                best = id;
                best_w = weight;
            }
        }
        if (best < 0)
            throw InfeasibleError("no candidate position covers sensor " +
                                  std::to_string(first_set(remaining)));
        remaining.andnot_with(ix.covered[static_cast<std::size_t>(best)]);
        out.positions.push_back(resolve(family, best));
    }
    out.degrees = degrees_of(n, out.positions);
    return out;
}

namespace {

std::vector<double> grid_axis(double extent, double pitch) {
    std::vector<double> ticks;
    int base = static_cast<int>(std::floor(extent / pitch)) + 1;
    for (int i = 0; i < base; ++i) ticks.push_back(i * pitch);
    // A trailing strip wider than pitch/2 escapes the last vertex line.
    if (extent - ticks.back() > pitch * 0.5) ticks.push_back(extent);
    return ticks;
}

} // namespace

std::pair<int, int> grid_dimensions(const Scenario& scenario) {
    scenario.validate();
    const double pitch = scenario.r * std::sqrt(2.0);
    return {static_cast<int>(grid_axis(scenario.field_width, pitch).size()),
            static_cast<int>(grid_axis(scenario.field_height, pitch).size())};
}

CoverSolution grid_cover(const Scenario& scenario) {
    scenario.validate();
    const int n = scenario.n();
    CoverSolution out;
    out.algorithm = CoverAlgorithm::Grid;
    if (n == 0) return out;

    const double pitch = scenario.r * std::sqrt(2.0);
    const std::vector<double> xs = grid_axis(scenario.field_width, pitch);
    const std::vector<double> ys = grid_axis(scenario.field_height, pitch);

    // Row-major vertex ids: id = iy * nx + ix.
    std::vector<Point> vertices;
    std::vector<Bits> covers;
    vertices.reserve(xs.size() * ys.size());
    for (double y : ys)
        for (double x : xs) {
            Point v{x, y};
            Bits cov(n);
            for (int s = 0; s < n; ++s)
                if (in_disc(v, scenario.r, scenario.sensors[static_cast<std::size_t>(s)]))
                    cov.set(s);
            vertices.push_back(v);
            covers.push_back(std::move(cov));
        }

    Bits remaining = Bits::full(n);
    while (remaining.any()) {
        int best = -1;
        int best_gain = 0;
        for (std::size_t id = 0; id < covers.size(); ++id) {
            int gain = covers[id].count_and(remaining);
            if (gain > best_gain) {
                best = static_cast<int>(id);
                best_gain = gain;
            }
        }
        if (best < 0)
            throw InfeasibleError("no grid vertex covers sensor " +
                                  std::to_string(first_set(remaining)));
        remaining.andnot_with(covers[static_cast<std::size_t>(best)]);
        ChosenPosition cp;
        cp.position_id = best;
        cp.covered = covers[static_cast<std::size_t>(best)].to_indices();
        cp.anchor = vertices[static_cast<std::size_t>(best)];
        out.positions.push_back(std::move(cp));
    }
    out.degrees = degrees_of(n, out.positions);
    return out;
}

std::vector<int> coverage_degrees(const Scenario& scenario, std::span<const Point> relays) {
    scenario.validate();
    std::vector<int> deg(static_cast<std::size_t>(scenario.n()), 0);
    for (int s = 0; s < scenario.n(); ++s)
        for (const Point& p : relays)
            if (in_disc(p, scenario.r, scenario.sensors[static_cast<std::size_t>(s)]))
                ++deg[static_cast<std::size_t>(s)];
    return deg;
}

std::vector<int> validate_cover(const Scenario& scenario, const CoverSolution& solution, int k) {
    if (k < 1) throw std::invalid_argument("coverage degree k must be at least 1");
    std::vector<Point> anchors;
    anchors.reserve(solution.positions.size());
    for (const auto& cp : solution.positions) anchors.push_back(cp.anchor);
    std::vector<int> deg = coverage_degrees(scenario, anchors);
    for (int s = 0; s < scenario.n(); ++s) {
        int d = deg[static_cast<std::size_t>(s)];
        if (d < k)
            throw ValidationError("sensor " + std::to_string(s) + " has coverage degree " +
                                  std::to_string(d) + ", expected at least " + std::to_string(k));
    }
    return deg;
}

} // namespace relay

#include "doctest.h"

#include "relay/candidates.hpp"
#include "relay/cover.hpp"
#include "relay/errors.hpp"
#include "relay/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

using namespace relay;

namespace {

Scenario make(std::vector<Point> sensors, double w = 100, double h = 100, double r = 10.0) {
    Scenario sc;
    sc.field_width = w;
    sc.field_height = h;
    sc.sensors = std::move(sensors);
    sc.sink = {w / 2, h / 2};
    sc.r = r;
    sc.R = 2.0 * r;
    return sc;
}

Family manual(std::vector<std::vector<int>> sets) {
    Family fam;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        fam.push_back({static_cast<int>(i), sets[i],
                       {static_cast<double>(i), 0.0}, PositionKind::SensorCenter});
    }
    return fam;
}

int coverage_count(const CoverSolution& sol) {
    std::set<int> covered;
    for (const auto& cp : sol.positions) covered.insert(cp.covered.begin(), cp.covered.end());
    return static_cast<int>(covered.size());
}

} // namespace

TEST_CASE("WeightConfig validation") {
    CHECK_NOTHROW(WeightConfig{}.validate());
    CHECK_NOTHROW((WeightConfig{5, 1, 0.1}).validate());  // gamma at beta/10
    CHECK_THROWS_AS((WeightConfig{0, 1, 0.01}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((WeightConfig{5, 0, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((WeightConfig{5, 1, -0.1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((WeightConfig{5, 1, 0.2}).validate(), std::invalid_argument);  // beyond beta/10
}

TEST_CASE("nfwga") {
    SUBCASE("hand trace: pair first, then the neighbor bonus") {
        Family fam = manual({{0}, {0, 1}, {1, 2}});
        // {0,1} and {1,2} tie on two fresh sensors; the lower id wins. The
        // second round scores 2 through the deployed front plus the overlap
        // term, so {1,2} beats nothing else and closes the set.
        auto picks = nfwga({0, 1, 2}, fam, WeightConfig{}, {});
        CHECK(picks == std::vector<int>{1, 2});
    }
    SUBCASE("empty target set") {
        Family fam = manual({{0}});
        CHECK(nfwga({}, fam, WeightConfig{}, {}).empty());
    }
    SUBCASE("single target, single cover") {
        Family fam = manual({{0}});
        CHECK(nfwga({0}, fam, WeightConfig{}, {}) == std::vector<int>{0});
    }
    SUBCASE("neighbor front of a deployed position steers the pick") {
        Family fam = manual({{0, 1}, {1, 2}, {2}});
        // With {0,1} deployed, sensor 2 is reachable through its neighbor
        // {1,2}; the overlap term breaks the alpha tie toward the neighbor.
        auto picks = nfwga({2}, fam, WeightConfig{}, {0});
        CHECK(picks == std::vector<int>{1});
    }
    SUBCASE("errors") {
        Family fam = manual({{0}});
        CHECK_THROWS_AS(nfwga({0, 5}, fam, WeightConfig{}, {}), InfeasibleError);
        CHECK_THROWS_AS(nfwga({0}, fam, WeightConfig{}, {3}), std::invalid_argument);
        CHECK_THROWS_AS(nfwga({0}, fam, WeightConfig{5, 1, 9}, {}), std::invalid_argument);
    }
}

TEST_CASE("lsaa") {
    SUBCASE("collinear trio matches the exact minimum") {
        Scenario sc = make({{0, 0}, {10, 0}, {30, 0}});
        Family fam = enumerate_possible_positions(sc);
        CoverSolution sol = lsaa(sc, fam);
        CHECK(sol.positions.size() == 2);
        CHECK(sol.algorithm == CoverAlgorithm::Lsaa);
        CHECK_NOTHROW(validate_cover(sc, sol, 1));
        CHECK(sol.positions.size() == exact_min_cover(sc, fam).positions.size());
    }
    SUBCASE("isolated sensors need one position each") {
        Scenario sc = make({{5, 5}, {50, 5}, {95, 95}});
        Family fam = enumerate_possible_positions(sc);
        CoverSolution sol = lsaa(sc, fam);
        CHECK(sol.positions.size() == 3);
        CHECK(sol.degrees == std::vector<int>{1, 1, 1});
    }
    SUBCASE("full coverage, distinct picks, consistent degrees") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            Scenario sc = generate_scenario(30, 100, 100, 10, 20, {50, 50}, seed);
            Family fam = enumerate_possible_positions(sc);
            CoverSolution sol = lsaa(sc, fam);
            CHECK(coverage_count(sol) == sc.n());
            CHECK_NOTHROW(validate_cover(sc, sol, 1));
            std::set<int> ids;
            for (int id : sol.position_ids()) CHECK(ids.insert(id).second);
            std::vector<int> deg(static_cast<std::size_t>(sc.n()), 0);
            for (const auto& cp : sol.positions)
                for (int s : cp.covered) ++deg[static_cast<std::size_t>(s)];
            CHECK(sol.degrees == deg);
        }
    }
}

TEST_CASE("baselines on a frozen greedy trap") {
    // Six sensors where plain weighted greedy grabs a decoy and pays three
    // positions; the two-phase search and the oracle both need only two.
    Scenario sc = make({{22.662463006891237, 29.831270290508044},
                        {38.840110143471847, 17.774368682230882},
                        {17.770588033054324, 30.51577567647044},
                        {35.093947470566917, 20.922687194039256},
                        {11.420347375878666, 31.759864226492223},
                        {16.165686762009027, 24.216814759013165}},
                       40, 40);
    Family fam = enumerate_possible_positions(sc);
    CoverSolution wg = weighted_greedy(sc, fam, 1.0 / 6.0);
    OracleLimits lim;
    lim.max_positions = 200;
    CoverSolution ora = exact_min_cover(sc, fam, lim);
    CoverSolution ls = lsaa(sc, fam);
    CHECK(wg.positions.size() == 3);
    CHECK(ora.positions.size() == 2);
    CHECK(ls.positions.size() == 2);
    CHECK_NOTHROW(validate_cover(sc, wg, 1));
    CHECK_NOTHROW(validate_cover(sc, ls, 1));
}

TEST_CASE("weighted_greedy guards") {
    Scenario sc = make({{0, 0}, {5, 0}});
    Family fam = enumerate_possible_positions(sc);
    CHECK_THROWS_AS(weighted_greedy(sc, fam, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(weighted_greedy(sc, fam, 0.6), std::invalid_argument);  // above 1/n
    CHECK_NOTHROW(weighted_greedy(sc, fam, 0.5));
}

TEST_CASE("grid_cover") {
    SUBCASE("vertex grid of the benchmark field") {
        auto [nx, ny] = grid_dimensions(make({{1, 1}}));
        CHECK(nx == 8);
        CHECK(ny == 8);
    }
    SUBCASE("covers everything it is given") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Scenario sc = generate_scenario(25, 100, 100, 10, 20, {50, 50}, seed);
            CoverSolution sol = grid_cover(sc);
            CHECK(sol.algorithm == CoverAlgorithm::Grid);
            CHECK_NOTHROW(validate_cover(sc, sol, 1));
            // anchors sit on the grid lattice
            const double pitch = sc.r * std::sqrt(2.0);
            for (const auto& cp : sol.positions) {
                double fx = cp.anchor.x / pitch;
                double fy = cp.anchor.y / pitch;
                bool on_x = std::abs(fx - std::round(fx)) < 1e-9 ||
                            std::abs(cp.anchor.x - sc.field_width) < 1e-9;
                bool on_y = std::abs(fy - std::round(fy)) < 1e-9 ||
                            std::abs(cp.anchor.y - sc.field_height) < 1e-9;
                CHECK(on_x);
                CHECK(on_y);
            }
        }
    }
    SUBCASE("deterministic") {
        Scenario sc = generate_scenario(25, 100, 100, 10, 20, {50, 50}, 3);
        CHECK(grid_cover(sc).position_ids() == grid_cover(sc).position_ids());
    }
}

TEST_CASE("lsaadc") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Scenario sc = generate_scenario(20, 100, 100, 10, 20, {50, 50}, seed);
        Family fam = enumerate_possible_positions(sc);
        CoverSolution dc = lsaadc(sc, fam);
        CoverSolution single = lsaa(sc, fam);
        CHECK(dc.algorithm == CoverAlgorithm::Lsaadc);
        CHECK_NOTHROW(validate_cover(sc, dc, 2));
        for (int d : dc.degrees) CHECK(d >= 2);
        CHECK(dc.positions.size() <= 2 * single.positions.size());
        // repair picks are flagged and carry fresh ids past the family
        for (const auto& cp : dc.positions)
            if (cp.second_pass) CHECK(cp.position_id >= static_cast<int>(fam.size()));
    }
}

TEST_CASE("exact_min_cover") {
    SUBCASE("prefers the single covering set and reports it lex-min") {
        Scenario sc = make({{0, 0}, {5, 0}});
        Family fam = manual({{0}, {1}, {0, 1}});
        CoverSolution sol = exact_min_cover(sc, fam);
        REQUIRE(sol.positions.size() == 1);
        CHECK(sol.positions[0].position_id == 2);
        CHECK(sol.degrees == std::vector<int>{1, 1});
    }
    SUBCASE("lexicographically smallest among equal minima") {
        Scenario sc = make({{0, 0}, {5, 0}, {0, 5}});
        Family fam = manual({{0, 1}, {0, 2}, {1, 2}, {2}, {1}});
        CoverSolution sol = exact_min_cover(sc, fam);
        std::vector<int> ids = sol.position_ids();
        CHECK(ids == std::vector<int>{0, 1});  // {0,1}+{0,2} beats {0,1}+{2} etc.
    }
    SUBCASE("limits and infeasibility") {
        Scenario sc = make({{0, 0}, {5, 0}});
        Family fam = manual({{0}});
        CHECK_THROWS_AS(exact_min_cover(sc, fam), InfeasibleError);

        OracleLimits tight;
        tight.max_sensors = 1;
        CHECK_THROWS_AS(exact_min_cover(sc, manual({{0}, {1}}), tight), ResourceLimitError);
        OracleLimits narrow;
        narrow.max_positions = 1;
        CHECK_THROWS_AS(exact_min_cover(sc, manual({{0}, {1}}), narrow), ResourceLimitError);
    }
    SUBCASE("never beaten by lsaa on small instances") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            Scenario sc = generate_scenario(8, 100, 100, 10, 20, {50, 50}, seed);
            Family fam = enumerate_possible_positions(sc);
            OracleLimits lim;
            lim.max_positions = 200;
            CoverSolution ora = exact_min_cover(sc, fam, lim);
            CHECK(ora.positions.size() <= lsaa(sc, fam).positions.size());
            CHECK_NOTHROW(validate_cover(sc, ora, 1));
        }
    }
}

TEST_CASE("validate_cover") {
    Scenario sc = make({{0, 0}, {50, 50}});
    CoverSolution sol;
    sol.positions.push_back(ChosenPosition{0, {0}, {0, 0}, false});
    CHECK_THROWS_AS(validate_cover(sc, sol, 1), ValidationError);
    CHECK_THROWS_WITH_AS(validate_cover(sc, sol, 1),
                         doctest::Contains("sensor 1"), ValidationError);
    CHECK_THROWS_AS(validate_cover(sc, sol, 0), std::invalid_argument);

    sol.positions.push_back(ChosenPosition{1, {1}, {50, 50}, false});
    CHECK(validate_cover(sc, sol, 1) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(validate_cover(sc, sol, 2), ValidationError);
}

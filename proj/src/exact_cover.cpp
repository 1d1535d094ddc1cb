#include "relay/cover.hpp"

#include "relay/errors.hpp"

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace relay {
namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const std::vector<std::uint64_t>& mask;
    const std::vector<std::vector<int>>& by_sensor;
    int max_size = 1;
    Clock::time_point deadline;
    std::uint64_t nodes = 0;

    void tick() {
        if ((++nodes & 0xfff) == 0 && Clock::now() > deadline)
            throw ResourceLimitError("exact cover time budget exceeded");
    }

    int lower_bound(std::uint64_t uncovered) const {
        return (std::popcount(uncovered) + max_size - 1) / max_size;
    }

    // Phase 1: minimum size, branching on the lowest uncovered sensor.
    void min_size(std::uint64_t uncovered, int count, int& best) {
        tick();
        if (uncovered == 0) {
            if (count < best) best = count;
            return;
        }
        if (count + lower_bound(uncovered) >= best) return;
        int s = std::countr_zero(uncovered);
        for (int id : by_sensor[static_cast<std::size_t>(s)])
            min_size(uncovered & ~mask[static_cast<std::size_t>(id)], count + 1, best);
    }

    // Phase 2: first depth-first cover of the optimal size, trying ids in
    // ascending order, is the lexicographically smallest one. Members adding
    // nothing over the prefix are redundant in any minimum cover, so skipping
    // them loses no optimum.
    bool lex_min(int start, std::uint64_t uncovered, int slots,
                 const std::vector<std::uint64_t>& suffix, std::vector<int>& chosen) {
        tick();
        if (uncovered == 0) return true;
        if (slots == 0 || lower_bound(uncovered) > slots) return false;
        for (int id = start; id < static_cast<int>(mask.size()); ++id) {
            std::uint64_t m = mask[static_cast<std::size_t>(id)];
            if ((uncovered & m) == 0) continue;
            if ((uncovered & ~suffix[static_cast<std::size_t>(id)]) != 0) return false;
            chosen.push_back(id);
            if (lex_min(id + 1, uncovered & ~m, slots - 1, suffix, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

CoverSolution exact_min_cover(const Scenario& scenario, const Family& family,
                              const OracleLimits& limits) {
    scenario.validate();
    const int n = scenario.n();
    const int fcount = static_cast<int>(family.size());
    if (n > 64)
        throw ResourceLimitError("exact cover bitmasks cap the sensor count at 64, got " +
                                 std::to_string(n));
    if (n > limits.max_sensors)
        throw ResourceLimitError("exact cover limited to " + std::to_string(limits.max_sensors) +
                                 " sensors, got " + std::to_string(n));
    if (fcount > limits.max_positions)
        throw ResourceLimitError("exact cover limited to " + std::to_string(limits.max_positions) +
                                 " candidate positions, got " + std::to_string(fcount));

    CoverSolution out;
    out.algorithm = CoverAlgorithm::ExactOracle;
    if (n == 0) return out;

    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(fcount), 0);
    std::vector<std::vector<int>> by_sensor(static_cast<std::size_t>(n));
    std::uint64_t reachable = 0;
    int max_size = 1;
    for (int id = 0; id < fcount; ++id) {
        for (int s : family[static_cast<std::size_t>(id)].covered) {
            mask[static_cast<std::size_t>(id)] |= 1ull << s;
            by_sensor[static_cast<std::size_t>(s)].push_back(id);
        }
        reachable |= mask[static_cast<std::size_t>(id)];
        max_size = std::max(max_size, std::popcount(mask[static_cast<std::size_t>(id)]));
    }
    if (reachable != all)
        throw InfeasibleError("no candidate position covers sensor " +
                              std::to_string(std::countr_zero(~reachable & all)));

    Search search{mask, by_sensor, max_size,
                  Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double, std::milli>(limits.time_budget_ms)),
                  0};
    int best = fcount + 1;
    search.min_size(all, 0, best);

    std::vector<std::uint64_t> suffix(static_cast<std::size_t>(fcount) + 1, 0);
    for (int id = fcount - 1; id >= 0; --id)
        suffix[static_cast<std::size_t>(id)] =
            suffix[static_cast<std::size_t>(id) + 1] | mask[static_cast<std::size_t>(id)];

    std::vector<int> chosen;
    search.lex_min(0, all, best, suffix, chosen);

    for (int id : chosen) {
        const auto& p = family[static_cast<std::size_t>(id)];
        out.positions.push_back(ChosenPosition{p.id, p.covered, p.anchor, false});
    }
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& cp : out.positions)
        for (int s : cp.covered) ++deg[static_cast<std::size_t>(s)];
    out.degrees = std::move(deg);
    return out;
}

} // namespace relay

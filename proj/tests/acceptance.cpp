// Acceptance gate: ten go/no-go checks over the shipped library, one line of
// output per check. Exit status is the number of failures.

#include "relay/candidates.hpp"
#include "relay/connectivity.hpp"
#include "relay/cover.hpp"
#include "relay/errors.hpp"
#include "relay/geometry.hpp"
#include "relay/harness.hpp"
#include "relay/io.hpp"
#include "relay/placement.hpp"
#include "relay/rng.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

using namespace relay;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s - %s%s%s\n", ok ? "PASS" : "FAIL", name, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int hw_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double table_mean(const MetricsTable& table, int n, const std::string& config,
                  const std::string& metric, bool* found) {
    for (const auto& row : table.rows)
        if (row.n == n && row.config_name == config && row.metric_name == metric) return row.mean;
    *found = false;
    return 0.0;
}

// first failure message wins; later writers back off
struct FirstError {
    std::atomic<bool> has{false};
    std::string text;
    std::atomic<bool> claimed{false};
    void set(const std::string& msg) {
        if (claimed.exchange(true)) return;
        text = msg;
        has.store(true);
    }
};

const std::vector<int> kNValues{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};

void check_cover_validity() {
    const auto t0 = Clock::now();
    const int per_n = 100;
    const int total = per_n * static_cast<int>(kNValues.size());
    FirstError err;
    std::atomic<int> bad{0};
    parallel_for(total, hw_threads(), [&](int idx) {
        const int n = kNValues[static_cast<std::size_t>(idx / per_n)];
        const int t = idx % per_n;
        try {
            Scenario sc =
                generate_scenario(n, 100, 100, 10, 20, {50, 50}, trial_seed(101, n, t));
            Family fam = enumerate_possible_positions(sc);
            validate_cover(sc, lsaa(sc, fam), 1);
            validate_cover(sc, lsaadc(sc, fam), 2);
            validate_cover(sc, weighted_greedy(sc, fam, 1.0 / n), 1);
            validate_cover(sc, grid_cover(sc), 1);
        } catch (const std::exception& e) {
            ++bad;
            err.set(e.what());
        }
    });
    const double secs = seconds_since(t0);
    bool ok = bad.load() == 0 && secs < 300.0;
    std::string detail = fmt("%.0f scenarios x 4 algorithms in %.1fs", total, secs);
    if (bad.load() != 0) detail = "first failure: " + err.text;
    report("cover validity across algorithms", ok, detail);
}

void check_small_instance_optimality() {
    const auto t0 = Clock::now();
    const int total = 200;
    std::atomic<int> matches{0};
    std::atomic<int> below_oracle{0};
    FirstError err;
    parallel_for(total, hw_threads(), [&](int idx) {
        const std::uint64_t seed = static_cast<std::uint64_t>(idx) + 1;
        const int n = 3 + static_cast<int>(seed % 8);
        try {
            Scenario sc = generate_scenario(n, 100, 100, 10, 20, {50, 50}, seed);
            Family fam = enumerate_possible_positions(sc);
            OracleLimits lim;
            lim.max_positions = 200;
            const std::size_t best = exact_min_cover(sc, fam, lim).positions.size();
            const std::size_t got = lsaa(sc, fam).positions.size();
            if (got < best) ++below_oracle;
            if (got == best) ++matches;
        } catch (const std::exception& e) {
            ++below_oracle;
            err.set(e.what());
        }
    });
    const double secs = seconds_since(t0);
    bool ok = below_oracle.load() == 0 && matches.load() * 2 >= total && secs < 120.0;
    std::string detail =
        fmt("%.0f/%.0f optimal in %.1fs", matches.load(), total, secs);
    if (err.has.load()) detail += ", first failure: " + err.text;
    report("small-instance optimality vs oracle", ok, detail);
}

void check_cover_size_ordering(const MetricsTable& table) {
    bool found = true;
    bool ordered = true;
    std::string breach;
    for (int n : kNValues) {
        double ls = table_mean(table, n, "lsaa_rlsa", "relay_count_cover", &found);
        double wg = table_mean(table, n, "greedy_ilsm", "relay_count_cover", &found);
        double gr = table_mean(table, n, "grid_ilsm", "relay_count_cover", &found);
        if (!(ls <= wg && wg <= gr) && breach.empty()) {
            ordered = false;
            breach = fmt("order broken at n=%.0f", n);
        }
    }
    double ls40 = table_mean(table, 40, "lsaa_rlsa", "relay_count_cover", &found);
    double gr40 = table_mean(table, 40, "grid_ilsm", "relay_count_cover", &found);
    double saving = found && gr40 > 0 ? 100.0 * (gr40 - ls40) / gr40 : 0.0;
    bool ok = found && ordered && saving >= 15.0;
    std::string detail = fmt("saving vs grid at n=40: %.1f%% (reference 33.3%%)", saving);
    if (!found) detail = "benchmark rows missing";
    if (!breach.empty()) detail += ", " + breach;
    report("cover size ordering and saving at n=40", ok, detail);
}

void check_double_cover(const MetricsTable& table) {
    bool found = true;
    bool ok = true;
    std::string detail;
    for (const auto& f : table.failures)
        if (f.config_name == "lsaadc_rlsa" && detail.empty()) {
            ok = false;
            detail = "trial failed: " + f.message;
        }
    double worst_degree = 1e18;
    double worst_ratio = 0.0;
    for (int n : kNValues) {
        double deg = table_mean(table, n, "lsaadc_rlsa", "avg_node_degree", &found);
        double dc = table_mean(table, n, "lsaadc_rlsa", "relay_count_cover", &found);
        double sc = table_mean(table, n, "lsaa_rlsa", "relay_count_cover", &found);
        worst_degree = std::min(worst_degree, deg);
        if (sc > 0) worst_ratio = std::max(worst_ratio, dc / sc);
        if (deg < 2.0 || dc > 2.0 * sc) ok = false;
    }
    if (!found) {
        ok = false;
        detail = "benchmark rows missing";
    }
    if (detail.empty())
        detail = fmt("min mean degree %.2f, max size ratio %.2fx", worst_degree, worst_ratio);
    report("double cover degree and size bounds", ok, detail);
}

void check_arc_query() {
    const auto t0 = Clock::now();
    const int total = 1000;
    const double r = 10.0;
    const double tol = 1e-6 * r;
    std::atomic<int> bad{0};
    FirstError err;
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
        seeds[static_cast<std::size_t>(i)] = derive_seed(404, 0, static_cast<std::uint64_t>(i));
    parallel_for(total, hw_threads(), [&](int idx) {
        SplitMix64 rng(seeds[static_cast<std::size_t>(idx)]);
        Point a{rng.next_unit() * 100.0, rng.next_unit() * 100.0};
        const double ang = rng.next_unit() * 6.283185307179586;
        const double d = (0.05 + 1.9 * rng.next_unit()) * r;
        Point b = a + Point{d * std::cos(ang), d * std::sin(ang)};
        Point sink{rng.next_unit() * 100.0, rng.next_unit() * 100.0};
        try {
            Point fast = nps(a, b, r, sink).point;
            Point slow = arc_nearest_oracle(a, b, r, sink, 100000);
            if (distance(fast, sink) > distance(slow, sink) + tol) {
                ++bad;
                err.set(fmt("query beaten by sampling by %.3g", distance(fast, sink) -
                                                                    distance(slow, sink)));
            }
        } catch (const std::exception& e) {
            ++bad;
            err.set(e.what());
        }
    });
    const double secs = seconds_since(t0);
    bool ok = bad.load() == 0 && secs < 60.0;
    std::string detail = fmt("%.0f instances vs 100000 samples in %.1fs", total, secs);
    if (err.has.load()) detail += ", " + err.text;
    report("arc query vs dense sampling", ok, detail);
}

void check_pairwise_ordering(const MetricsTable& table) {
    bool found = true;
    bool ok = true;
    std::string breach;
    for (int n : kNValues) {
        double a = table_mean(table, n, "lsaa_rlsa", "avg_pairwise_relay_distance", &found);
        double i = table_mean(table, n, "lsaa_ilsm", "avg_pairwise_relay_distance", &found);
        double m = table_mean(table, n, "lsaa_rlsm", "avg_pairwise_relay_distance", &found);
        if (!(a <= i && i <= m) && breach.empty()) {
            ok = false;
            char buf[128];
            std::snprintf(buf, sizeof buf, "broken at n=%d (%.3f / %.3f / %.3f)", n, a, i, m);
            breach = buf;
        }
    }
    if (!found) {
        ok = false;
        breach = "benchmark rows missing";
    }
    report("pairwise relay distance ordering", ok, ok ? "ordered for every n" : breach);
}

void check_total_relays(const MetricsTable& table) {
    bool found = true;
    bool ok = true;
    std::string breach;
    for (int n : kNValues) {
        double a = table_mean(table, n, "lsaa_rlsa", "total_relays", &found);
        double i = table_mean(table, n, "lsaa_ilsm", "total_relays", &found);
        double m = table_mean(table, n, "lsaa_rlsm", "total_relays", &found);
        if (!(a <= i && i <= m) && breach.empty()) {
            ok = false;
            breach = fmt("order broken at n=%.0f", n);
        }
    }
    double a60 = table_mean(table, 60, "lsaa_rlsa", "total_relays", &found);
    double m60 = table_mean(table, 60, "lsaa_rlsm", "total_relays", &found);
    double saving = found && m60 > 0 ? 100.0 * (m60 - a60) / m60 : 0.0;
    if (!(saving > 0.0)) ok = false;
    if (!found) {
        ok = false;
        breach = "benchmark rows missing";
    }
    std::string detail = fmt("saving at n=60: %.1f%% (reference 13.3%%)", saving);
    if (!breach.empty()) detail += ", " + breach;
    report("total relay count ordering and saving at n=60", ok, detail);
}

void check_connectivity() {
    const auto t0 = Clock::now();
    const int per_cell = 25;  // 10 n values x 4 configs x 25 = 1000 pipelines
    std::vector<PipelineConfig> configs(4);
    configs[0].name = "lsaa_rlsa";
    configs[1].name = "lsaa_ilsm";
    configs[1].placement = PlacementMethod::Ilsm;
    configs[2].name = "lsaa_rlsm";
    configs[2].placement = PlacementMethod::Rlsm;
    configs[3].name = "lsaadc_rlsa";
    configs[3].cover_algorithm = CoverAlgorithm::Lsaadc;
    configs[3].coverage_k = 2;
    const int total = static_cast<int>(kNValues.size() * configs.size()) * per_cell;
    std::atomic<int> bad{0};
    FirstError err;
    parallel_for(total, hw_threads(), [&](int idx) {
        const int cell = idx / per_cell;
        const int t = idx % per_cell;
        const int n = kNValues[static_cast<std::size_t>(cell / static_cast<int>(configs.size()))];
        PipelineConfig cfg = configs[static_cast<std::size_t>(cell) % configs.size()];
        const std::uint64_t seed = trial_seed(707, n, t);
        cfg.seed = seed;
        try {
            Scenario sc = generate_scenario(n, 100, 100, 10, 20, {50, 50}, seed);
            RunResult res = run_pipeline(sc, cfg);
            if (!is_connected(res.topology)) {
                ++bad;
                err.set("disconnected topology, config " + cfg.display_name());
            }
        } catch (const std::exception& e) {
            ++bad;
            err.set(e.what());
        }
    });
    const double secs = seconds_since(t0);
    bool ok = bad.load() == 0;
    std::string detail = fmt("%.0f pipelines connected in %.1fs", total, secs);
    if (err.has.load()) detail = "first failure: " + err.text;
    report("end-to-end connectivity", ok, detail);
}

void check_runtime(double bench_secs) {
    const auto t0 = Clock::now();
    Scenario sc = generate_scenario(100, 100, 100, 10, 20, {50, 50}, 424242);
    CoverSolution sol = lsaa(sc, enumerate_possible_positions(sc));
    const double lsaa_secs = seconds_since(t0);
    bool ok = lsaa_secs < 5.0 && bench_secs < 1800.0 && !sol.positions.empty();
    report("runtime budgets", ok,
           fmt("cover at n=100 in %.2fs (budget 5s), benchmark in %.0fs (budget 1800s)",
               lsaa_secs, bench_secs));
}

} // namespace

int main() {
    check_cover_validity();
    check_small_instance_optimality();

    BenchmarkSpec spec = default_benchmark_spec();
    spec.parallelism = hw_threads();
    const auto bench_t0 = Clock::now();
    MetricsTable table = run_benchmark(spec);
    const double bench_secs = seconds_since(bench_t0);
    MetricsTable rerun = run_benchmark(spec);

    check_cover_size_ordering(table);
    check_double_cover(table);
    check_arc_query();
    check_pairwise_ordering(table);
    check_total_relays(table);
    check_connectivity();
    check_runtime(bench_secs);

    const std::string a = render_results(table, OutputFormat::Csv);
    const std::string b = render_results(rerun, OutputFormat::Csv);
    report("byte-identical reruns", a == b,
           fmt("%.0f byte render compared twice", static_cast<double>(a.size())));

    return g_failures;
}

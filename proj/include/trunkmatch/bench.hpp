#ifndef TRUNKMATCH_BENCH_HPP
#define TRUNKMATCH_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trunkmatch::bench {

struct BenchPlan {
    std::vector<int> deltas{3, 4, 5};
    std::vector<int> sizes{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
    int trials = 5;
    std::uint64_t seed = 1;
    double budget_factor = 1.0;
    bool prefer_free_tips = false;
};

struct BenchRecord {
    int delta = 0;
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double wall_micros = 0.0;  // solver call only; generation is excluded
    int matched = 0;
    int augmentations = 0;
    std::uint64_t steps = 0;
    int budget_exceeded = 0;
    std::size_t max_sprouts = 0;
};

/// One record per (delta, n, trial), graphs drawn from sub-seeds derived
/// from the plan seed. Workers > 1 runs trials on a thread pool; records
/// come back in deterministic (delta, n, trial) order either way, and all
/// non-timing fields are functions of the plan alone.
std::vector<BenchRecord> run_bench(const BenchPlan& plan, int workers = 1);

struct SlopeFit {
    double slope = 0.0;
    double r2 = 0.0;
};

/// Least-squares slope of log(mean wall_micros) vs log(n) over the records
/// of one degree. Needs at least 3 distinct n values.
SlopeFit fit_loglog_slope(std::span<const BenchRecord> records, int delta);

/// CSV with header delta,n,trial,seed,wall_micros,matched,augmentations,steps,budget_exceeded
std::string records_to_csv(std::span<const BenchRecord> records);

/// Log-log SVG plot, one series per degree, median line with min/max
/// whiskers per n. Byte-deterministic for identical input.
std::string emit_plot(std::span<const BenchRecord> records);

}  // namespace trunkmatch::bench

#endif

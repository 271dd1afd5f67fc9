#ifndef HFE_BENCH_HPP
#define HFE_BENCH_HPP

// Scaling benchmark of the interpolation attack: times recover_alias per n,
// counts the K-multiplications of the linear solve, and fits the log-log
// growth of the count against n.

#include <cstdint>
#include <ostream>
#include <vector>

namespace hfe {

struct BenchRow {
    std::uint32_t n = 0;
    std::size_t w = 0;            // unknown count (n^2+n)/2 + n + 1 at p = 2
    double wall_ms = 0.0;         // full recover_alias wall time (build + solve)
    std::uint64_t mults = 0;      // K-multiplications of the linear solve
    std::uint64_t build_mults = 0;  // K-multiplications spent building rows
};

// One row per (n, trial), p = 2, deterministic keys seeded from `seed`.
// Verification is skipped during timing; every alias is cross-checked once
// per n against 32 random points before the timed runs.
std::vector<BenchRow> run_attack_bench(std::uint32_t n_min, std::uint32_t n_max,
                                       std::uint32_t trials, std::uint64_t seed = 1);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Least-squares fit of log(value) against log(n), aggregating trials per n
// by their mean.
SlopeFit fit_loglog_mults(const std::vector<BenchRow>& rows);
SlopeFit fit_loglog_wall(const std::vector<BenchRow>& rows);

// Header "n,W,wall_ms,mults".
void write_csv(const std::vector<BenchRow>& rows, std::ostream& os);

}  // namespace hfe

#endif

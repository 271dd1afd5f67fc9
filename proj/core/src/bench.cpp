#include "hfe/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>

#include "hfe/alias.hpp"
#include "hfe/hfe.hpp"

namespace hfe {

std::vector<BenchRow> run_attack_bench(std::uint32_t n_min, std::uint32_t n_max,
                                       std::uint32_t trials, std::uint64_t seed) {
    if (n_min < 2 || n_min > n_max) throw Error("bench: bad n range");
    std::vector<BenchRow> rows;
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
        const FieldParams field = FieldParams::make_default(2, n);
        const Gf gf(field);
        const PrimeField fp(2);
        const Basis basis = Basis::identity(fp, n);
        // d <= q^3 keeps decryption-side degrees small; W is independent of d.
        const BigInt d = 8 < (gf.order() - 1) ? BigInt(8) : gf.order() - 1;
        for (std::uint32_t trial = 0; trial < trials; ++trial) {
            const HfeParams params{field, d, seed + 0x1000ull * n + trial};
            auto [sk, pk] = keygen(params);
            RecoverOptions opts;
            opts.verify = false;  // verification cost is not part of the measurement
            opts.schedule = PointSchedule::Generic;  // structure-free rows: dense-solve cost
            RecoverStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            AliasKey alias = recover_alias(gf, pk, basis, opts, &stats);
            const auto t1 = std::chrono::steady_clock::now();
            // cross-check the run once, outside the timed window
            if (trial == 0 && !verify_alias(gf, alias, pk, basis, 32))
                throw VerificationError("bench: alias failed verification");
            BenchRow row;
            row.n = n;
            row.w = enumerate_monomials(field).count;
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.mults = stats.solve_mults;
            row.build_mults = stats.build_mults;
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

SlopeFit fit(const std::vector<BenchRow>& rows, double (*value)(const BenchRow&)) {
    std::map<std::uint32_t, std::pair<double, std::size_t>> per_n;
    for (const auto& row : rows) {
        auto& [sum, count] = per_n[row.n];
        sum += value(row);
        ++count;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(per_n.size());
    for (const auto& [n, acc] : per_n) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(acc.first / static_cast<double>(acc.second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    SlopeFit out;
    const double denom = m * sxx - sx * sx;
    if (denom != 0.0) {
        out.slope = (m * sxy - sx * sy) / denom;
        out.intercept = (sy - out.slope * sx) / m;
    }
    return out;
}

}  // namespace

SlopeFit fit_loglog_mults(const std::vector<BenchRow>& rows) {
    return fit(rows, [](const BenchRow& r) { return static_cast<double>(r.mults); });
}

SlopeFit fit_loglog_wall(const std::vector<BenchRow>& rows) {
    return fit(rows, [](const BenchRow& r) { return r.wall_ms; });
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& os) {
    os << "n,W,wall_ms,mults\n";
    for (const auto& row : rows)
        os << row.n << ',' << row.w << ',' << row.wall_ms << ',' << row.mults << '\n';
}

}  // namespace hfe

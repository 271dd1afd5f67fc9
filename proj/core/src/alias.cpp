#include "hfe/alias.hpp"

#include <random>
#include <set>

#include "hfe/linalg.hpp"

namespace hfe {

namespace {

Exp q_power(std::uint32_t q, std::uint32_t k) {
    Exp e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q;
    return e;
}

// The public map carried into K: encode(PK(decode(x))).
FieldElement public_route(const Gf& gf, const PublicKey& pk, const Basis& in_basis,
                          const Basis& out_basis, const FieldElement& x) {
    return encode(gf, encrypt(pk, decode(gf, x, in_basis)), out_basis);
}

}  // namespace

MonomialBasis enumerate_monomials(const FieldParams& field) {
    const std::uint32_t q = field.p;
    const std::uint32_t n = field.n;
    MonomialBasis mb;
    mb.exponents.push_back(0);
    for (std::uint32_t i = 0; i < n; ++i) {
        mb.exponents.push_back(q_power(q, i));
        if (q > 2) mb.exponents.push_back(2 * q_power(q, i));
        for (std::uint32_t j = i + 1; j < n; ++j)
            mb.exponents.push_back(q_power(q, i) + q_power(q, j));
    }
    std::sort(mb.exponents.begin(), mb.exponents.end());
    mb.count = mb.exponents.size();
    return mb;
}

AliasKey recover_alias(const Gf& gf, const PublicKey& pk, const Basis& basis,
                       const RecoverOptions& opts, RecoverStats* stats) {
    if (pk.n != gf.n() || pk.p != gf.p())
        throw FieldMismatchError("recover_alias: key does not match field");
    const Basis& out_basis = opts.out_basis ? *opts.out_basis : basis;
    const MonomialBasis mb = enumerate_monomials(gf.params());
    const std::size_t w = mb.count;
    const std::uint32_t n = gf.n();

    // Distinct points available in the counting schedule.
    const BigInt order = gf.order();
    const std::uint64_t max_points =
        order <= (BigInt{1} << 24) ? static_cast<std::uint64_t>(order)
                                   : static_cast<std::uint64_t>(w) + 4096;
    if (max_points < w)
        throw RankDeficientError("recover_alias: field too small for the monomial basis");

    std::vector<std::vector<FieldElement>> rows;
    std::vector<FieldElement> rhs;
    rows.reserve(w);
    rhs.reserve(w);

    const std::uint64_t mults_at_start = gf.mul_count();

    // Point generator: the probe schedule first (when selected), then counting
    // order for any further rows.
    std::vector<std::vector<std::uint8_t>> probe_points;
    if (opts.schedule == PointSchedule::Probe) {
        const std::vector<std::uint8_t> zero_vec(n, 0);
        probe_points.push_back(zero_vec);
        for (std::uint32_t i = 0; i < n; ++i) {
            auto v = zero_vec;
            v[i] = 1;
            probe_points.push_back(v);
        }
        if (gf.p() > 2)
            for (std::uint32_t i = 0; i < n; ++i) {
                auto v = zero_vec;
                v[i] = 2;
                probe_points.push_back(v);
            }
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) {
                auto v = zero_vec;
                v[i] = 1;
                v[j] = 1;
                probe_points.push_back(v);
            }
    }

    std::mt19937_64 generic_rng(0x67656e65726963ull);
    std::set<std::uint64_t> used_indices;
    const bool small_field = order <= (BigInt{1} << 24);

    std::uint64_t next = opts.start_index;
    std::uint64_t built = 0;
    auto next_point = [&]() -> std::vector<std::uint8_t> {
        if (built < probe_points.size()) return probe_points[built];
        if (opts.schedule == PointSchedule::Generic) {
            while (true) {
                const FieldElement x = gf.random_element(generic_rng);
                if (small_field && !used_indices.insert(gf.to_index(x)).second)
                    continue;  // skip repeats so extra rows can still add rank
                return {x.coeffs.begin(), x.coeffs.end()};
            }
        }
        std::uint64_t k = next++;
        if (small_field) k %= static_cast<std::uint64_t>(order);
        std::vector<std::uint8_t> digits(n, 0);
        std::uint64_t rem = k;
        for (std::uint32_t i = 0; i < n && rem; ++i) {
            digits[i] = static_cast<std::uint8_t>(rem % gf.p());
            rem /= gf.p();
        }
        if (rem) throw Error("recover_alias: point index exceeds field size");
        return digits;
    };

    auto build_row = [&]() {
        const FieldElement x = encode(gf, next_point(), basis);
        // Frobenius power table x^(q^i), then one product per weight-2 exponent.
        std::vector<FieldElement> fr(n);
        fr[0] = x;
        for (std::uint32_t i = 1; i < n; ++i) fr[i] = gf.frobenius(fr[i - 1], 1);
        std::vector<FieldElement> row;
        row.reserve(w);
        for (const auto& e : mb.exponents) {
            if (e == 0) {
                row.push_back(gf.one());
                continue;
            }
            // decompose into one or two q-power positions
            Exp rem_e = e;
            std::uint32_t first = 0;
            while (rem_e % gf.p() == 0) {
                rem_e /= gf.p();
                ++first;
            }
            const auto digit = static_cast<std::uint32_t>(rem_e % gf.p());
            rem_e /= gf.p();
            std::uint32_t second = first + 1;
            while (rem_e > 0 && rem_e % gf.p() == 0) {
                rem_e /= gf.p();
                ++second;
            }
            if (digit == 2) {
                row.push_back(gf.mul(fr[first], fr[first]));
            } else if (rem_e > 0) {
                row.push_back(gf.mul(fr[first], fr[second]));
            } else {
                row.push_back(fr[first]);
            }
        }
        rows.push_back(std::move(row));
        rhs.push_back(public_route(gf, pk, basis, out_basis, x));
        ++built;
    };

    for (std::size_t i = 0; i < w; ++i) build_row();

    const std::uint64_t mults_after_build_initial = gf.mul_count();
    std::uint64_t build_mults = mults_after_build_initial - mults_at_start;

    LinearSystemSolution<Gf> sol;
    std::uint64_t solve_mults = 0;
    while (true) {
        Mat<Gf> m(gf, rows.size(), w);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < w; ++j) m.at(i, j) = rows[i][j];
        const std::uint64_t before = gf.mul_count();
        sol = solve(gf, m, rhs);
        solve_mults = gf.mul_count() - before;
        if (sol.rank == w) {
            if (rows.size() > w) {
                // Re-solve the square system of the W independent rows: same
                // unique solution, and the counted cost is that of the
                // determined W x W elimination.
                Mat<Gf> sq(gf, w, w);
                std::vector<FieldElement> sq_rhs(w, gf.zero());
                for (std::size_t i = 0; i < w; ++i) {
                    for (std::size_t j = 0; j < w; ++j)
                        sq.at(i, j) = rows[sol.pivot_rows[i]][j];
                    sq_rhs[i] = rhs[sol.pivot_rows[i]];
                }
                const std::uint64_t sq_before = gf.mul_count();
                sol = solve(gf, sq, sq_rhs);
                solve_mults = gf.mul_count() - sq_before;
                if (sol.rank != w)
                    throw VerificationError("recover_alias: pivot rows lost rank");
            }
            break;
        }
        if (built >= max_points)
            throw RankDeficientError("recover_alias: rank " + std::to_string(sol.rank) +
                                     " < " + std::to_string(w) + " after all points");
        const std::uint64_t b0 = gf.mul_count();
        build_row();
        build_mults += gf.mul_count() - b0;
    }

    AliasKey alias;
    for (std::size_t j = 0; j < w; ++j)
        alias.a.set_term(gf, mb.exponents[j], sol.solution[j]);
    alias.points_used = built;
    alias.achieved_rank = sol.rank;
    alias.convention = opts.out_basis ? "mixed" : "le-in/le-out";

    if (stats) {
        stats->points_used = built;
        stats->build_mults = build_mults;
        stats->solve_mults = solve_mults;
    }

    if (opts.verify &&
        !verify_alias(gf, alias, pk, basis, opts.verify_trials, opts.verify_seed,
                      opts.out_basis))
        throw VerificationError("recover_alias: recovered alias failed verification");
    return alias;
}

bool verify_alias(const Gf& gf, const AliasKey& alias, const PublicKey& pk,
                  const Basis& basis, std::size_t trials, std::uint64_t seed,
                  const Basis* out_basis_ptr) {
    if (trials == 0) return true;  // vacuous
    const Basis& out_basis = out_basis_ptr ? *out_basis_ptr : basis;
    const BigInt order = gf.order();
    if (order <= 4096) {
        const auto count = static_cast<std::uint64_t>(order);
        for (std::uint64_t k = 0; k < count; ++k) {
            const FieldElement x = gf.from_index(k);
            if (!gf.eq(alias.a.eval(gf, x), public_route(gf, pk, basis, out_basis, x)))
                return false;
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const FieldElement x = gf.random_element(rng);
        if (!gf.eq(alias.a.eval(gf, x), public_route(gf, pk, basis, out_basis, x)))
            return false;
    }
    return true;
}

}  // namespace hfe

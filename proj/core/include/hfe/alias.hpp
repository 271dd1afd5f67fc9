#ifndef HFE_ALIAS_HPP
#define HFE_ALIAS_HPP

// Eve's step 1: recover the univariate alias A(x) = S o f o T from the
// public key alone, by interpolation over K on the weight-<=2 monomial basis.

#include <cstdint>
#include <string>
#include <vector>

#include "hfe/field.hpp"
#include "hfe/hfe.hpp"
#include "hfe/sparse_poly.hpp"

namespace hfe {

struct MonomialBasis {
    std::vector<Exp> exponents;  // ascending, all weight-<=2 exponents in [0, q^n-1]
    std::size_t count = 0;       // W
};

MonomialBasis enumerate_monomials(const FieldParams& field);

struct AliasKey {
    SparsePoly a;
    std::size_t points_used = 0;
    std::size_t achieved_rank = 0;
    std::string convention;
};

// Probe: 0, the unit vectors, (2e_i at p > 2,) then the pairs e_i + e_j --
// exactly W points that always reach full rank, and the published toy point
// set at n = 3. Counting: encode(counting vectors base p) from start_index,
// appending further points while the rank is short. Generic: deterministic
// pseudorandom points (fixed internal seed); structure-free rows, so the
// elimination cost matches the dense W^3 model -- used by the benchmark.
enum class PointSchedule { Probe, Counting, Generic };

struct RecoverOptions {
    // Verify the postcondition (exhaustive when q^n <= 4096, else sampled).
    bool verify = true;
    std::size_t verify_trials = 200;
    std::uint64_t verify_seed = 0xa11a5;
    PointSchedule schedule = PointSchedule::Probe;
    // First point index for the counting schedule (wraps mod q^n).
    std::uint64_t start_index = 0;
    // Output coordinates may use a different basis than the input points
    // (used by the toy demo's convention search); null = same basis.
    const Basis* out_basis = nullptr;
};

struct RecoverStats {
    std::size_t points_used = 0;
    std::uint64_t build_mults = 0;  // K-mults spent building rows
    std::uint64_t solve_mults = 0;  // K-mults spent in the linear solve
};

// Evaluation points are encode(counting vectors base p) from opts.start_index;
// rows are added until the system reaches rank W. Throws RankDeficientError
// if the rank never reaches W (impossible for a genuine quadratic map).
AliasKey recover_alias(const Gf& gf, const PublicKey& pk, const Basis& basis,
                       const RecoverOptions& opts = {}, RecoverStats* stats = nullptr);

// True iff eval(A, x) matches the public map at `trials` points
// (exhaustive when q^n <= 4096).
bool verify_alias(const Gf& gf, const AliasKey& alias, const PublicKey& pk,
                  const Basis& basis, std::size_t trials,
                  std::uint64_t seed = 0xa11a5, const Basis* out_basis = nullptr);

}  // namespace hfe

#endif

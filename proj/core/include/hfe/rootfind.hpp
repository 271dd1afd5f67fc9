#ifndef HFE_ROOTFIND_HPP
#define HFE_ROOTFIND_HPP

// Root finding over K: exhaustive oracle at desk scale, and a dense
// low-degree solver (distinct-root isolation via x^(q^n) - x, then trace
// splitting at q = 2 / random-shift splitting at q > 2).

#include <cstdint>
#include <vector>

#include "hfe/field.hpp"
#include "hfe/sparse_poly.hpp"

namespace hfe {

inline constexpr std::size_t kDenseDegreeGuard = 65536;

// Dense univariate polynomial over K, coefficients ascending by degree,
// trimmed so the leading coefficient is nonzero (empty = zero polynomial).
struct DensePoly {
    std::vector<FieldElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
};

// Conversion guarded by the dense-degree cap.
DensePoly dense_from_sparse(const Gf& gf, const SparsePoly& p,
                            std::size_t guard = kDenseDegreeGuard);

// All x with eval(P, x) = y, by exhaustive scan. Requires p^n <= 2^24.
// Results sorted by element index.
std::vector<FieldElement> roots_bruteforce(const Gf& gf, const SparsePoly& p,
                                           const FieldElement& y);

// All roots in K of P(x) = y for dense P of degree <= guard.
std::vector<FieldElement> roots_lowdegree(const Gf& gf, const DensePoly& p,
                                          const FieldElement& y,
                                          std::uint64_t splitter_seed = 0x5eedf00d);

}  // namespace hfe

#endif

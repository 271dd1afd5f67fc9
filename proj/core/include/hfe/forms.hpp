#ifndef HFE_FORMS_HPP
#define HFE_FORMS_HPP

// Eve's step 2: split the alias into constant/linear/quadratic parts, bring
// the bilinear matrix to canonical form by congruence, reduce the linear
// tail, and rebuild a low-degree polynomial F' with the transform matrix.

#include <cstdint>
#include <string>
#include <vector>

#include "hfe/alias.hpp"
#include "hfe/field.hpp"
#include "hfe/linalg.hpp"
#include "hfe/sparse_poly.hpp"

namespace hfe {

struct QuadDecomposition {
    FieldElement constant;
    std::vector<FieldElement> linear;  // entry i = coefficient of x^(q^i)
    Mat<Gf> bilinear;                  // symmetric; entry (i,j), i != j, from x^(q^i+q^j);
                                       // diagonal zero at p = 2, from x^(2q^i) at p > 2
};

// Lossless split of a weight-<=2 reduced polynomial. Throws ShapeError.
QuadDecomposition decompose(const Gf& gf, const SparsePoly& a);

// Inverse of decompose: slot (i,j), i<j -> exponent q^i + q^j, diagonal
// slot i -> 2q^i, linear slot i -> q^i.
SparsePoly reconstruct(const Gf& gf, const QuadDecomposition& dec);

struct CanonicalForm {
    Mat<Gf> p;          // congruence transform: p^T B p = canonical
    Mat<Gf> canonical;  // diag(H, ..., H, 0) with r hyperbolic blocks (p = 2)
                        // or diag(d_1..d_rank, 0) (p > 2)
    std::size_t r = 0;  // hyperbolic block count; rank = 2r at p = 2
    std::size_t rank = 0;
};

// Alternating-form reduction (symmetric, zero diagonal; guaranteed at p = 2).
// Pivot choice: lowest-index nonzero entry. Throws NotAlternatingError when
// the diagonal is nonzero.
CanonicalForm canonicalize(const Gf& gf, const Mat<Gf>& b);

// Congruence diagonalization for p > 2 (experimental path).
CanonicalForm canonicalize_symmetric(const Gf& gf, const Mat<Gf>& b);

// Q is identity on coordinates 0..head-1 and invertible on the rest, chosen
// so the tail of Q^T lambda is zero or the single unit coordinate `head`.
Mat<Gf> reduce_linear_tail(const Gf& gf, const std::vector<FieldElement>& lambda,
                           std::size_t head);

struct ReducedKey {
    SparsePoly f_prime;
    Mat<Gf> p_total;  // composed congruence transform over K
    std::size_t r = 0;
    std::string provenance;  // digest of the source alias
};

// decompose -> canonicalize -> transform linear part (lambda' = P^T lambda)
// -> reduce tail -> rebuild F'. Checks the degree and rank invariants.
ReducedKey reduce(const Gf& gf, const AliasKey& alias);

// Candidate plaintexts for eval(A, x) = ct through the reduced key: roots z
// of F'(z) = ct are mapped through X = P_total * (z, z^q, ..., z^(q^(n-1)))
// and x = X_0 kept only when eval(A, x) = ct. Sound by construction;
// completeness is a measured statistic.
std::vector<FieldElement> solve_via_reduction(const Gf& gf, const ReducedKey& rk,
                                              const AliasKey& alias,
                                              const FieldElement& ct);

std::string alias_digest(const Gf& gf, const AliasKey& alias);

}  // namespace hfe

#endif

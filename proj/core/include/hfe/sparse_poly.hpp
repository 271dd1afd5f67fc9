#ifndef HFE_SPARSE_POLY_HPP
#define HFE_SPARSE_POLY_HPP

// Sparse univariate polynomials over K with q-power-structured exponents:
// evaluation, Hamming-weight checks, Frobenius twists, and composition with
// affine/linearized polynomials modulo x^(q^n) - x.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hfe/field.hpp"

namespace hfe {

using Exp = BigInt;

enum class TranslateSide { Left, Right };

class SparsePoly {
public:
    SparsePoly() = default;

    const std::map<Exp, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Degree of the zero polynomial is 0 by convention here.
    Exp degree() const { return terms_.empty() ? Exp{0} : terms_.rbegin()->first; }

    FieldElement coeff(const Gf& gf, const Exp& e) const;
    // Stores c at exponent e; erases the term when c becomes zero.
    void set_term(const Gf& gf, const Exp& e, FieldElement c);
    void add_term(const Gf& gf, const Exp& e, const FieldElement& c);

    bool operator==(const SparsePoly&) const = default;

    // Number of nonzero digits of e in base q.
    static int weight(Exp e, std::uint32_t q);
    // Max weight over exponents with nonzero coefficients (0 for the zero poly).
    int poly_weight(std::uint32_t q) const;

    FieldElement eval(const Gf& gf, const FieldElement& x) const;

    SparsePoly add(const Gf& gf, const SparsePoly& other) const;
    SparsePoly sub(const Gf& gf, const SparsePoly& other) const;
    SparsePoly scale(const Gf& gf, const FieldElement& c) const;

    // Folds every exponent e >= 1 to ((e-1) mod (q^n - 1)) + 1, which keeps
    // e = 0 distinct from q^n - 1 and preserves the polynomial as a function
    // on K.
    SparsePoly reduce(const Gf& gf) const;

    // Coefficients -> coeff^(q^k), exponents -> reduced e*q^k.
    SparsePoly frobenius_twist(const Gf& gf, std::uint32_t k) const;

    // P o L where L is linearized (exponents are q-powers, no constant)
    // and P has weight <= 2. Result is reduced and has weight <= 2.
    SparsePoly compose_linearized(const Gf& gf, const SparsePoly& linearized) const;

    // S o P where S is linearized: sum s_i * P^(q^i).
    SparsePoly compose_linear_outer(const Gf& gf, const SparsePoly& outer) const;

    // Right: substitute x -> x + c. Left: add c to the value (constant term).
    SparsePoly compose_translate(const Gf& gf, const FieldElement& c,
                                 TranslateSide side) const;

private:
    std::map<Exp, FieldElement> terms_;  // ascending exponents; no zero coefficients
};

}  // namespace hfe

#endif

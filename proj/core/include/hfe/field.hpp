#ifndef HFE_FIELD_HPP
#define HFE_FIELD_HPP

// Arithmetic in GF(p) and in the extension field K = GF(p)[t]/(m(t)),
// plus the coordinate encode/decode between K and GF(p)^n.

#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hfe/errors.hpp"
#include "hfe/linalg.hpp"

namespace hfe {

using BigInt = boost::multiprecision::cpp_int;

// GF(p) for a small prime p. Elements are residues stored in a byte.
class PrimeField {
public:
    using Element = std::uint8_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {}

    std::uint32_t p() const { return p_; }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }
    Element add(Element a, Element b) const {
        return static_cast<Element>((a + std::uint32_t{b}) % p_);
    }
    Element sub(Element a, Element b) const {
        return static_cast<Element>((a + p_ - std::uint32_t{b}) % p_);
    }
    Element neg(Element a) const { return static_cast<Element>((p_ - std::uint32_t{a}) % p_); }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((std::uint32_t{a} * b) % p_);
    }
    Element inv(Element a) const;
    void add_mul(Element& dst, Element a, Element b) const {
        dst = static_cast<Element>((dst + std::uint32_t{a} * b) % p_);
    }
    void sub_mul(Element& dst, Element a, Element b) const {
        dst = static_cast<Element>((dst + std::uint32_t{p_ * p_} - std::uint32_t{a} * b) % p_);
    }

private:
    std::uint32_t p_;
};

// An element of K as a length-n coefficient vector over GF(p), ascending
// by power of t (coeffs[0] is the constant).
struct FieldElement {
    std::vector<std::uint8_t> coeffs;

    bool operator==(const FieldElement&) const = default;
    auto operator<=>(const FieldElement&) const = default;
};

// Field parameters: prime p, extension degree n, and the monic irreducible
// modulus of degree n (n+1 coefficients, ascending).
struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::vector<std::uint8_t> modulus;

    bool operator==(const FieldParams&) const = default;

    // Validates primality, shape and irreducibility.
    static FieldParams make(std::uint32_t p, std::uint32_t n,
                            std::vector<std::uint8_t> modulus);
    // Uses the deterministic smallest irreducible modulus.
    static FieldParams make_default(std::uint32_t p, std::uint32_t n);
};

// Deterministically returns the smallest monic irreducible of degree n over
// GF(p): candidates are enumerated by ascending base-p integer value of the
// coefficient vector. Requires n >= 2.
std::vector<std::uint8_t> find_irreducible(std::uint32_t p, std::uint32_t n);

// Complete deterministic test: a monic m of degree n is irreducible iff
// gcd(x^(p^i) - x mod m, m) = 1 for all 1 <= i <= n/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint8_t>& poly);

class Basis;

// The extension field K = GF(p)[t]/(m(t)). All element operations live here;
// FieldElement itself is a dumb coefficient vector. Operations are pure and
// safe to call concurrently (the multiplication counter is atomic).
class Gf {
public:
    using Element = FieldElement;

    explicit Gf(FieldParams params);
    Gf(const Gf& other) : Gf(other.params_) {}
    Gf& operator=(const Gf&) = delete;

    const FieldParams& params() const { return params_; }
    std::uint32_t p() const { return params_.p; }
    std::uint32_t n() const { return params_.n; }
    // p^n, exact.
    const BigInt& order() const { return order_; }

    FieldElement zero() const { return FieldElement{std::vector<std::uint8_t>(params_.n, 0)}; }
    FieldElement one() const;
    // Element with a single power-basis coefficient: c * t^k.
    FieldElement monomial(std::uint32_t k, std::uint8_t c = 1) const;
    FieldElement from_digits(std::vector<std::uint8_t> digits) const;
    // Little-endian base-p digits of k; requires k < p^n.
    FieldElement from_index(std::uint64_t k) const;
    std::uint64_t to_index(const FieldElement& a) const;
    // p^n when it fits in the exhaustive-enumeration guard (p^n <= 2^24).
    std::uint64_t enumeration_bound() const;

    bool is_zero(const FieldElement& a) const;
    bool eq(const FieldElement& a, const FieldElement& b) const { return a == b; }

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement square(const FieldElement& a) const { return mul(a, a); }
    FieldElement inv(const FieldElement& a) const;
    // dst += a*b and dst -= a*b, fused (one multiplication each).
    void add_mul(FieldElement& dst, const FieldElement& a, const FieldElement& b) const;
    void sub_mul(FieldElement& dst, const FieldElement& a, const FieldElement& b) const;

    FieldElement pow(const FieldElement& a, const BigInt& e) const;
    // a^(p^k), k repeated p-th powers.
    FieldElement frobenius(const FieldElement& a, std::uint32_t k) const;

    FieldElement random_element(std::mt19937_64& rng) const;

    // Little-endian digit string, e.g. "011" = t + t^2 at p=2, n=3.
    std::string to_text(const FieldElement& a) const;
    FieldElement from_text(std::string_view text) const;

    std::uint64_t mul_count() const { return mul_count_.load(std::memory_order_relaxed); }
    void reset_mul_count() const { mul_count_.store(0, std::memory_order_relaxed); }

private:
    void check(const FieldElement& a) const;
    void mul_into(std::uint8_t* out, const std::uint8_t* a, const std::uint8_t* b) const;

    FieldParams params_;
    BigInt order_;
    std::vector<std::uint8_t> top_red_;  // (p - m_j) mod p, j < n: x^n = sum top_red_[j] x^j
    mutable std::atomic<std::uint64_t> mul_count_{0};
};

// An invertible n x n matrix over GF(p) whose columns are the coordinate
// vectors of the basis elements in the power basis. Immutable; the inverse
// is computed once at construction.
class Basis {
public:
    // Validates invertibility; row-major entries.
    static Basis make(const PrimeField& f, Mat<PrimeField> matrix);
    static Basis identity(const PrimeField& f, std::uint32_t n);
    // Basis listed as t^(n-1), ..., t, 1 (the paper's toy ordering).
    static Basis reversed_power(const PrimeField& f, std::uint32_t n);

    const Mat<PrimeField>& matrix() const { return matrix_; }
    const Mat<PrimeField>& inverse() const { return inverse_; }
    std::uint32_t n() const { return static_cast<std::uint32_t>(matrix_.rows); }

private:
    Basis(Mat<PrimeField> m, Mat<PrimeField> inv)
        : matrix_(std::move(m)), inverse_(std::move(inv)) {}

    Mat<PrimeField> matrix_;
    Mat<PrimeField> inverse_;
};

// encode(v) = sum v[i] * beta_i; decode is its inverse. Both GF(p)-linear.
FieldElement encode(const Gf& gf, const std::vector<std::uint8_t>& v, const Basis& basis);
std::vector<std::uint8_t> decode(const Gf& gf, const FieldElement& a, const Basis& basis);

}  // namespace hfe

#endif

#ifndef HFE_HFE_HPP
#define HFE_HFE_HPP

// The cryptosystem itself: key generation, public-key derivation,
// encryption and decryption.

#include <cstdint>
#include <utility>
#include <vector>

#include "hfe/field.hpp"
#include "hfe/linalg.hpp"
#include "hfe/sparse_poly.hpp"

namespace hfe {

struct HfeParams {
    FieldParams field;
    BigInt d;            // degree bound for f; q+1 <= d < q^n
    std::uint64_t seed;  // reproducibility seed for keygen
};

// Invertible affine transformation of K in coordinates: v -> matrix*v + translation.
struct AffineMap {
    Mat<PrimeField> matrix;
    std::vector<std::uint8_t> translation;
};

struct PrivateKey {
    HfeParams params;
    Basis basis;
    SparsePoly f;  // weight <= 2, degree <= d, nonconstant
    AffineMap s;
    AffineMap t;
};

// One public polynomial: constant + linear.v + sum_{i<=j} quad[i][j] v_i v_j.
// quad is strictly upper triangular at p = 2 (diagonal used for p > 2).
struct PublicPoly {
    std::uint8_t constant = 0;
    std::vector<std::uint8_t> linear;
    Mat<PrimeField> quad;
};

struct PublicKey {
    std::uint32_t p = 2;
    std::uint32_t n = 0;
    std::vector<PublicPoly> polys;
};

// All admissible f-exponents <= d for the weight-<=2 shape:
// 0, q^xi, q^theta + q^phi (theta < phi), and 2q^theta for p > 2.
std::vector<Exp> admissible_exponents(const FieldParams& field, const BigInt& d);

// Deterministic given params.seed. f gets a uniform coefficient on every
// admissible exponent (leading candidate resampled until f is nonconstant);
// S and T are rejection-sampled invertible affine maps.
std::pair<PrivateKey, PublicKey> keygen(const HfeParams& params);
std::pair<PrivateKey, PublicKey> keygen(const HfeParams& params, const Basis& basis);

// S(f(T(x))), with the affine maps acting on coordinates through the basis.
FieldElement private_eval(const Gf& gf, const PrivateKey& sk, const FieldElement& x);

// Black-box probe reconstruction of the n quadratic coordinate polynomials;
// verified on 50 extra random points before returning.
PublicKey derive_public(const Gf& gf, const PrivateKey& sk);

std::vector<std::uint8_t> encrypt(const PublicKey& pk,
                                  const std::vector<std::uint8_t>& msg);

// Every msg with encrypt(msg) = ct, sorted. Empty means ct is not in the
// image of the public map.
std::vector<std::vector<std::uint8_t>> decrypt(const Gf& gf, const PrivateKey& sk,
                                               const std::vector<std::uint8_t>& ct);

// Right: M = translate(shift) o linear. Left: M = linear o translate(-s'),
// where s' is the unique root of the affine map.
std::pair<AffineMap, FieldElement> split_affine(const Gf& gf, const Basis& basis,
                                                const AffineMap& m, TranslateSide side);

// The linearized polynomial sum c_i x^(q^i) of a GF(p)-linear coordinate map,
// found by solving the Moore system on the basis elements.
SparsePoly to_linearized_poly(const Gf& gf, const Basis& basis,
                              const Mat<PrimeField>& matrix);

// Symbolic S o f o T mod x^(q^n) - x. Independent evaluation route used to
// cross-check the interpolation attack.
SparsePoly compose_private(const Gf& gf, const PrivateKey& sk);

}  // namespace hfe

#endif

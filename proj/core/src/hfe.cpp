#include "hfe/hfe.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hfe/rootfind.hpp"

namespace hfe {

namespace {

Exp q_power(std::uint32_t q, std::uint32_t k) {
    Exp e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q;
    return e;
}

std::vector<std::uint8_t> apply_affine(const PrimeField& f, const AffineMap& m,
                                       const std::vector<std::uint8_t>& v) {
    auto out = matvec(f, m.matrix, v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], m.translation[i]);
    return out;
}

std::vector<std::uint8_t> apply_affine_inverse(const PrimeField& f, const Mat<PrimeField>& inv,
                                               const AffineMap& m,
                                               const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> shifted(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) shifted[i] = f.sub(v[i], m.translation[i]);
    return matvec(f, inv, shifted);
}

Mat<PrimeField> random_invertible(const PrimeField& f, std::uint32_t n,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
    while (true) {
        Mat<PrimeField> m(f, n, n);
        for (auto& e : m.e) e = static_cast<std::uint8_t>(dist(rng));
        if (rank(f, m) == n) return m;
    }
}

}  // namespace

std::vector<Exp> admissible_exponents(const FieldParams& field, const BigInt& d) {
    const std::uint32_t q = field.p;
    const std::uint32_t n = field.n;
    std::set<Exp> exps;
    exps.insert(0);
    for (std::uint32_t i = 0; i < n; ++i) {
        const Exp qi = q_power(q, i);
        if (qi <= d) exps.insert(qi);
        if (q > 2 && 2 * qi <= d) exps.insert(2 * qi);
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const Exp e = qi + q_power(q, j);
            if (e <= d) exps.insert(e);
        }
    }
    return {exps.begin(), exps.end()};
}

std::pair<PrivateKey, PublicKey> keygen(const HfeParams& params) {
    const PrimeField f(params.field.p);
    return keygen(params, Basis::identity(f, params.field.n));
}

std::pair<PrivateKey, PublicKey> keygen(const HfeParams& params, const Basis& basis) {
    const Gf gf(params.field);
    const std::uint32_t n = params.field.n;
    const PrimeField fp(params.field.p);
    if (params.d < params.field.p + 1)
        throw Error("keygen: d must be at least q+1");
    if (params.d >= gf.order()) throw Error("keygen: d must be below q^n");

    std::mt19937_64 rng(params.seed);

    const auto exps = admissible_exponents(params.field, params.d);
    SparsePoly poly;
    for (const auto& e : exps) poly.set_term(gf, e, gf.random_element(rng));
    bool nonconstant = false;
    for (const auto& [e, c] : poly.terms())
        if (e != 0) nonconstant = true;
    while (!nonconstant) {
        const FieldElement lead = gf.random_element(rng);
        if (!gf.is_zero(lead)) {
            poly.set_term(gf, exps.back(), lead);
            nonconstant = true;
        }
    }

    AffineMap s{random_invertible(fp, n, rng), {}};
    s.translation.resize(n);
    std::uniform_int_distribution<std::uint32_t> dist(0, params.field.p - 1);
    for (auto& c : s.translation) c = static_cast<std::uint8_t>(dist(rng));
    AffineMap t{random_invertible(fp, n, rng), {}};
    t.translation.resize(n);
    for (auto& c : t.translation) c = static_cast<std::uint8_t>(dist(rng));

    PrivateKey sk{params, basis, std::move(poly), std::move(s), std::move(t)};
    PublicKey pk = derive_public(gf, sk);
    return {std::move(sk), std::move(pk)};
}

FieldElement private_eval(const Gf& gf, const PrivateKey& sk, const FieldElement& x) {
    const PrimeField fp(gf.p());
    const auto tv = apply_affine(fp, sk.t, decode(gf, x, sk.basis));
    const FieldElement inner = sk.f.eval(gf, encode(gf, tv, sk.basis));
    const auto sv = apply_affine(fp, sk.s, decode(gf, inner, sk.basis));
    return encode(gf, sv, sk.basis);
}

PublicKey derive_public(const Gf& gf, const PrivateKey& sk) {
    const std::uint32_t n = gf.n();
    const std::uint32_t p = gf.p();
    const PrimeField fp(p);

    auto probe = [&](const std::vector<std::uint8_t>& v) {
        return decode(gf, private_eval(gf, sk, encode(gf, v, sk.basis)), sk.basis);
    };

    const std::vector<std::uint8_t> zero_vec(n, 0);
    const auto p0 = probe(zero_vec);

    std::vector<std::vector<std::uint8_t>> pe(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        auto v = zero_vec;
        v[i] = 1;
        pe[i] = probe(v);
    }

    PublicKey pk;
    pk.p = p;
    pk.n = n;
    pk.polys.resize(n);
    for (auto& poly : pk.polys) {
        poly.linear.assign(n, 0);
        poly.quad = Mat<PrimeField>(fp, n, n);
    }

    if (p == 2) {
        for (std::uint32_t k = 0; k < n; ++k) {
            pk.polys[k].constant = p0[k];
            for (std::uint32_t i = 0; i < n; ++i)
                pk.polys[k].linear[i] = fp.sub(pe[i][k], p0[k]);
        }
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) {
                auto v = zero_vec;
                v[i] = 1;
                v[j] = 1;
                const auto pij = probe(v);
                for (std::uint32_t k = 0; k < n; ++k) {
                    const auto cross = fp.add(fp.sub(fp.sub(pij[k], pe[i][k]), pe[j][k]), p0[k]);
                    pk.polys[k].quad.at(i, j) = cross;
                }
            }
    } else {
        const std::uint8_t inv2 = fp.inv(2 % p == 0 ? 1 : static_cast<std::uint8_t>(2 % p));
        std::vector<std::vector<std::uint8_t>> diag(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            auto v = zero_vec;
            v[i] = 2 % p;
            const auto p2i = probe(v);
            diag[i].resize(n);
            for (std::uint32_t k = 0; k < n; ++k) {
                // a_ii = (P(2e_i) - 2 P(e_i) + P(0)) / 2
                auto acc = fp.sub(p2i[k], fp.mul(2 % p, pe[i][k]));
                acc = fp.add(acc, p0[k]);
                diag[i][k] = fp.mul(acc, inv2);
            }
        }
        for (std::uint32_t k = 0; k < n; ++k) {
            pk.polys[k].constant = p0[k];
            for (std::uint32_t i = 0; i < n; ++i) {
                pk.polys[k].quad.at(i, i) = diag[i][k];
                pk.polys[k].linear[i] = fp.sub(fp.sub(pe[i][k], p0[k]), diag[i][k]);
            }
        }
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) {
                auto v = zero_vec;
                v[i] = 1;
                v[j] = 1;
                const auto pij = probe(v);
                for (std::uint32_t k = 0; k < n; ++k) {
                    const auto cross = fp.add(fp.sub(fp.sub(pij[k], pe[i][k]), pe[j][k]), p0[k]);
                    pk.polys[k].quad.at(i, j) = cross;
                }
            }
    }

    // Verify on 50 extra random points (fixed internal seed for determinism).
    std::mt19937_64 vrng(0x9e3779b97f4a7c15ull ^ sk.params.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> v(n);
        for (auto& c : v) c = static_cast<std::uint8_t>(dist(vrng));
        if (encrypt(pk, v) != probe(v))
            throw VerificationError("derive_public: quadratic model failed verification");
    }
    return pk;
}

std::vector<std::uint8_t> encrypt(const PublicKey& pk, const std::vector<std::uint8_t>& msg) {
    if (msg.size() != pk.n) throw FieldMismatchError("encrypt: message length mismatch");
    const PrimeField fp(pk.p);
    std::vector<std::uint8_t> out(pk.n);
    for (std::uint32_t k = 0; k < pk.n; ++k) {
        const auto& poly = pk.polys[k];
        std::uint32_t acc = poly.constant;
        for (std::uint32_t i = 0; i < pk.n; ++i) {
            if (!msg[i]) continue;
            acc += std::uint32_t{poly.linear[i]} * msg[i];
            for (std::uint32_t j = i; j < pk.n; ++j)
                if (msg[j]) acc += std::uint32_t{poly.quad.at(i, j)} * msg[i] * msg[j];
        }
        out[k] = static_cast<std::uint8_t>(acc % pk.p);
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> decrypt(const Gf& gf, const PrivateKey& sk,
                                               const std::vector<std::uint8_t>& ct) {
    if (ct.size() != gf.n()) throw FieldMismatchError("decrypt: ciphertext length mismatch");
    const PrimeField fp(gf.p());
    const Mat<PrimeField> s_inv = invert(fp, sk.s.matrix);
    const Mat<PrimeField> t_inv = invert(fp, sk.t.matrix);

    // y' = S^-1(encode(ct)); then solve f(x) = y'.
    const auto y_coords = apply_affine_inverse(fp, s_inv, sk.s, ct);
    const FieldElement target = encode(gf, y_coords, sk.basis);

    const DensePoly dense = dense_from_sparse(gf, sk.f);
    const auto roots = roots_lowdegree(gf, dense, target);

    std::vector<std::vector<std::uint8_t>> out;
    for (const auto& r : roots) {
        const auto m = apply_affine_inverse(fp, t_inv, sk.t, decode(gf, r, sk.basis));
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<AffineMap, FieldElement> split_affine(const Gf& gf, const Basis& basis,
                                                const AffineMap& m, TranslateSide side) {
    const PrimeField fp(gf.p());
    AffineMap linear{m.matrix, std::vector<std::uint8_t>(gf.n(), 0)};
    if (side == TranslateSide::Right) {
        // M = translate(shift) o linear, shift = encode(translation)
        return {std::move(linear), encode(gf, m.translation, basis)};
    }
    // M = linear o translate(-s'), s' = matrix^-1 * (-translation), M(s') = 0.
    const Mat<PrimeField> inv = invert(fp, m.matrix);
    std::vector<std::uint8_t> neg_t(gf.n());
    for (std::uint32_t i = 0; i < gf.n(); ++i) neg_t[i] = fp.neg(m.translation[i]);
    const auto s_coords = matvec(fp, inv, neg_t);
    return {std::move(linear), encode(gf, s_coords, basis)};
}

SparsePoly to_linearized_poly(const Gf& gf, const Basis& basis,
                              const Mat<PrimeField>& matrix) {
    const std::uint32_t n = gf.n();
    const PrimeField fp(gf.p());
    // Solve the Moore system: sum_i c_i * b_j^(q^i) = M(b_j) on a basis b_j.
    Mat<Gf> moore(gf, n, n);
    std::vector<FieldElement> rhs(n, gf.zero());
    for (std::uint32_t j = 0; j < n; ++j) {
        const FieldElement bj = gf.monomial(j);  // power basis spans K
        FieldElement fr = bj;
        for (std::uint32_t i = 0; i < n; ++i) {
            moore.at(j, i) = fr;
            fr = gf.frobenius(fr, 1);
        }
        const auto mapped = matvec(fp, matrix, decode(gf, bj, basis));
        rhs[j] = encode(gf, mapped, basis);
    }
    const auto sol = solve(gf, moore, rhs);
    if (sol.rank != n)
        throw VerificationError("to_linearized_poly: Moore system is singular");
    SparsePoly out;
    Exp e = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        out.set_term(gf, e, sol.solution[i]);
        e *= gf.p();
    }
    return out;
}

SparsePoly compose_private(const Gf& gf, const PrivateKey& sk) {
    // S o f o T = S_lin o (x - s') o f o (x + t) o T_lin   (Eqs. 2-3)
    const auto [t_lin, t_shift] = split_affine(gf, sk.basis, sk.t, TranslateSide::Right);
    const auto [s_lin, s_root] = split_affine(gf, sk.basis, sk.s, TranslateSide::Left);
    const SparsePoly t_poly = to_linearized_poly(gf, sk.basis, t_lin.matrix);
    const SparsePoly s_poly = to_linearized_poly(gf, sk.basis, s_lin.matrix);

    SparsePoly mid = sk.f.compose_translate(gf, t_shift, TranslateSide::Right);
    mid = mid.compose_translate(gf, gf.neg(s_root), TranslateSide::Left);
    mid = mid.compose_linearized(gf, t_poly);
    return mid.compose_linear_outer(gf, s_poly);
}

}  // namespace hfe

#include "hfe/rootfind.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace hfe {

namespace {

void trim(const Gf& gf, std::vector<FieldElement>& c) {
    while (!c.empty() && gf.is_zero(c.back())) c.pop_back();
}

std::vector<FieldElement> poly_sub(const Gf& gf, std::vector<FieldElement> a,
                                   const std::vector<FieldElement>& b) {
    if (b.size() > a.size()) a.resize(b.size(), gf.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = gf.sub(a[i], b[i]);
    trim(gf, a);
    return a;
}

std::vector<FieldElement> poly_mul(const Gf& gf, const std::vector<FieldElement>& a,
                                   const std::vector<FieldElement>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<FieldElement> prod(a.size() + b.size() - 1, gf.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (gf.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            gf.add_mul(prod[i + j], a[i], b[j]);
    }
    trim(gf, prod);
    return prod;
}

// a mod m in place; m nonzero.
void poly_mod(const Gf& gf, std::vector<FieldElement>& a,
              const std::vector<FieldElement>& m) {
    trim(gf, a);
    const FieldElement lead_inv = gf.inv(m.back());
    while (a.size() >= m.size()) {
        const FieldElement c = gf.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - m.size();
        if (!gf.is_zero(c))
            for (std::size_t j = 0; j < m.size(); ++j)
                gf.sub_mul(a[shift + j], c, m[j]);
        a.pop_back();
        trim(gf, a);
    }
}

std::vector<FieldElement> poly_mulmod(const Gf& gf, const std::vector<FieldElement>& a,
                                      const std::vector<FieldElement>& b,
                                      const std::vector<FieldElement>& m) {
    auto prod = poly_mul(gf, a, b);
    poly_mod(gf, prod, m);
    return prod;
}

std::vector<FieldElement> poly_gcd(const Gf& gf, std::vector<FieldElement> a,
                                   std::vector<FieldElement> b) {
    trim(gf, a);
    trim(gf, b);
    while (!b.empty()) {
        poly_mod(gf, a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const FieldElement li = gf.inv(a.back());
        for (auto& c : a) c = gf.mul(c, li);
    }
    return a;
}

std::vector<FieldElement> poly_divexact(const Gf& gf, std::vector<FieldElement> a,
                                        const std::vector<FieldElement>& d) {
    std::vector<FieldElement> q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0,
                                gf.zero());
    const FieldElement lead_inv = gf.inv(d.back());
    trim(gf, a);
    while (a.size() >= d.size()) {
        const FieldElement c = gf.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - d.size();
        q[shift] = c;
        for (std::size_t j = 0; j < d.size(); ++j) gf.sub_mul(a[shift + j], c, d[j]);
        trim(gf, a);
    }
    return q;
}

// base^e mod m.
std::vector<FieldElement> poly_powmod(const Gf& gf, std::vector<FieldElement> base,
                                      BigInt e, const std::vector<FieldElement>& m) {
    std::vector<FieldElement> acc = {gf.one()};
    poly_mod(gf, base, m);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc = poly_mulmod(gf, acc, base, m);
        e >>= 1;
        if (e > 0) base = poly_mulmod(gf, base, base, m);
    }
    return acc;
}

FieldElement poly_eval(const Gf& gf, const std::vector<FieldElement>& a,
                       const FieldElement& x) {
    FieldElement acc = gf.zero();
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = gf.mul(acc, x);
        acc = gf.add(acc, a[i]);
    }
    return acc;
}

// Splits a monic product of distinct linear factors into roots.
void split_linear_product(const Gf& gf, std::vector<FieldElement> u,
                          std::vector<FieldElement>& roots, std::mt19937_64& rng) {
    if (u.size() <= 1) return;
    if (u.size() == 2) {
        // x + u0 (monic): root = -u0
        roots.push_back(gf.neg(u[0]));
        return;
    }
    const std::uint32_t n = gf.n();
    std::vector<FieldElement> w;
    if (gf.p() == 2) {
        // Deterministic trace splitting: gcd(u, Tr(beta x)) over the power
        // basis multipliers beta = t^k. Distinct roots are separated by some
        // basis beta since the trace form is nondegenerate.
        for (std::uint32_t k = 0; k < n; ++k) {
            std::vector<FieldElement> bx = {gf.zero(), gf.monomial(k)};
            poly_mod(gf, bx, u);
            std::vector<FieldElement> acc = bx;
            std::vector<FieldElement> sq = bx;
            for (std::uint32_t i = 1; i < n; ++i) {
                sq = poly_mulmod(gf, sq, sq, u);
                acc = poly_sub(gf, std::move(acc), sq);  // char 2: add == sub
            }
            auto g = poly_gcd(gf, acc, u);
            if (!g.empty() && g.size() > 1 && g.size() < u.size()) {
                w = std::move(g);
                break;
            }
        }
    } else {
        // Random-shift equal-degree splitting: gcd(u, (x+c)^((q^n-1)/2) - 1).
        const BigInt half = (gf.order() - 1) / 2;
        for (int attempt = 0; attempt < 64 && w.empty(); ++attempt) {
            const FieldElement c = gf.random_element(rng);
            std::vector<FieldElement> xc = {c, gf.one()};
            auto pw = poly_powmod(gf, xc, half, u);
            if (pw.empty())
                pw = {gf.neg(gf.one())};
            else
                pw[0] = gf.sub(pw[0], gf.one());
            trim(gf, pw);
            auto g = poly_gcd(gf, pw, u);
            if (!g.empty() && g.size() > 1 && g.size() < u.size()) w = std::move(g);
        }
    }
    if (w.empty())
        throw VerificationError("root splitting failed to make progress");
    auto rest = poly_divexact(gf, u, w);
    split_linear_product(gf, std::move(w), roots, rng);
    split_linear_product(gf, std::move(rest), roots, rng);
}

}  // namespace

DensePoly dense_from_sparse(const Gf& gf, const SparsePoly& p, std::size_t guard) {
    if (p.degree() > guard)
        throw DegreeGuardError("dense_from_sparse: degree exceeds guard");
    DensePoly out;
    out.coeffs.assign(static_cast<std::size_t>(p.degree()) + 1, gf.zero());
    for (const auto& [e, c] : p.terms())
        out.coeffs[static_cast<std::size_t>(e)] = c;
    trim(gf, out.coeffs);
    return out;
}

std::vector<FieldElement> roots_bruteforce(const Gf& gf, const SparsePoly& p,
                                           const FieldElement& y) {
    const std::uint64_t count = gf.enumeration_bound();
    std::vector<FieldElement> roots;
    for (std::uint64_t k = 0; k < count; ++k) {
        const FieldElement x = gf.from_index(k);
        if (gf.eq(p.eval(gf, x), y)) roots.push_back(x);
    }
    return roots;
}

std::vector<FieldElement> roots_lowdegree(const Gf& gf, const DensePoly& p,
                                          const FieldElement& y,
                                          std::uint64_t splitter_seed) {
    if (p.coeffs.size() > kDenseDegreeGuard + 1)
        throw DegreeGuardError("roots_lowdegree: degree exceeds guard");
    std::vector<FieldElement> g = p.coeffs;
    if (g.empty()) g.push_back(gf.zero());
    g[0] = gf.sub(g[0], y);
    trim(gf, g);
    if (g.empty()) {
        // P - y is identically zero: every element is a root.
        const std::uint64_t count = gf.enumeration_bound();
        std::vector<FieldElement> all;
        all.reserve(count);
        for (std::uint64_t k = 0; k < count; ++k) all.push_back(gf.from_index(k));
        return all;
    }
    if (g.size() == 1) return {};  // nonzero constant
    // normalize monic
    const FieldElement li = gf.inv(g.back());
    for (auto& c : g) c = gf.mul(c, li);

    // x^(q^n) mod g via n successive q-th powers.
    std::vector<FieldElement> s = {gf.zero(), gf.one()};
    poly_mod(gf, s, g);
    const BigInt q = gf.p();
    for (std::uint32_t i = 0; i < gf.n(); ++i) s = poly_powmod(gf, s, q, g);
    // h = gcd(g, x^(q^n) - x) = product of distinct linear factors with roots in K.
    std::vector<FieldElement> xminus = {gf.zero(), gf.one()};
    auto diff = poly_sub(gf, std::move(s), xminus);
    auto h = poly_gcd(gf, diff, g);

    std::vector<FieldElement> roots;
    if (!h.empty() && h.size() > 1) {
        std::mt19937_64 rng(splitter_seed);
        split_linear_product(gf, h, roots, rng);
    }
    // soundness recheck before returning
    for (const auto& r : roots)
        if (!gf.eq(poly_eval(gf, p.coeffs, r), y))
            throw VerificationError("roots_lowdegree: root failed recheck");
    std::sort(roots.begin(), roots.end(),
              [&](const FieldElement& a, const FieldElement& b) {
                  return gf.to_index(a) < gf.to_index(b);
              });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace hfe

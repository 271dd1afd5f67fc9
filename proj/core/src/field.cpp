#include "hfe/field.hpp"

#include <algorithm>
#include <cstring>

namespace hfe {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- dense polynomial helpers over GF(p), coefficients ascending ---

using Poly = std::vector<std::uint8_t>;

int deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

void trim(Poly& a) { a.resize(static_cast<std::size_t>(deg(a) + 1)); }

std::uint8_t p_inv(std::uint32_t p, std::uint8_t a) {
    // Fermat; p is a small prime and a != 0.
    std::uint32_t r = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint8_t>(r);
}

// a mod m, in place.
void poly_mod(std::uint32_t p, Poly& a, const Poly& m) {
    const int dm = deg(m);
    const std::uint8_t lead_inv = p_inv(p, m[static_cast<std::size_t>(dm)]);
    for (int d = deg(a); d >= dm; d = deg(a)) {
        const std::uint32_t c = a[static_cast<std::size_t>(d)] * std::uint32_t{lead_inv} % p;
        for (int j = 0; j <= dm; ++j) {
            auto& dst = a[static_cast<std::size_t>(d - dm + j)];
            dst = static_cast<std::uint8_t>((dst + p * p - c * m[static_cast<std::size_t>(j)] % p) % p);
        }
        a.resize(static_cast<std::size_t>(d));  // leading term cancelled
        if (a.empty()) break;
    }
    trim(a);
}

Poly poly_mulmod(std::uint32_t p, const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + std::uint32_t{a[i]} * b[j]) % p);
    }
    poly_mod(p, prod, m);
    return prod;
}

Poly poly_gcd(std::uint32_t p, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly_mod(p, a, b);
        std::swap(a, b);
    }
    // normalize monic
    if (!a.empty()) {
        const std::uint8_t li = p_inv(p, a.back());
        for (auto& c : a) c = static_cast<std::uint8_t>(std::uint32_t{c} * li % p);
    }
    return a;
}

// x^(p^k) mod m for k = 1..kmax, yielding each step to `fn`.
template <class Fn>
void frobenius_steps(std::uint32_t p, const Poly& m, std::uint32_t kmax, Fn&& fn) {
    Poly s = {0, 1};  // x
    poly_mod(p, s, m);
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        // s = s^p mod m
        Poly acc = {1};
        Poly base = s;
        std::uint32_t e = p;
        while (e) {
            if (e & 1) acc = poly_mulmod(p, acc, base, m);
            e >>= 1;
            if (e) base = poly_mulmod(p, base, base, m);
        }
        s = std::move(acc);
        fn(k, s);
    }
}

}  // namespace

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw DivisionByZeroError("GF(p): inverse of zero");
    return p_inv(p_, a);
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint8_t>& poly) {
    const int n = deg(poly);
    if (n < 1) return false;
    if (n == 1) return true;
    bool reducible = false;
    frobenius_steps(p, poly, static_cast<std::uint32_t>(n) / 2,
                    [&](std::uint32_t, const Poly& s) {
                        if (reducible) return;
                        Poly diff = s;
                        if (diff.size() < 2) diff.resize(2, 0);
                        diff[1] = static_cast<std::uint8_t>((diff[1] + p - 1) % p);  // s - x
                        Poly g = poly_gcd(p, diff, poly);
                        if (deg(g) != 0) reducible = true;
                    });
    return !reducible;
}

std::vector<std::uint8_t> find_irreducible(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw Error("find_irreducible: p must be prime");
    if (n < 2) throw Error("find_irreducible: n must be >= 2");
    // Enumerate lower coefficient vectors by ascending base-p integer value.
    std::vector<std::uint8_t> cand(n + 1, 0);
    cand[n] = 1;
    while (true) {
        if (is_irreducible(p, cand)) return cand;
        std::uint32_t i = 0;
        while (i < n && cand[i] == p - 1) cand[i++] = 0;
        if (i == n) throw Error("find_irreducible: exhausted candidates");  // unreachable
        ++cand[i];
    }
}

FieldParams FieldParams::make(std::uint32_t p, std::uint32_t n,
                              std::vector<std::uint8_t> modulus) {
    if (!is_prime(p)) throw Error("FieldParams: p must be prime");
    if (p > 36) throw Error("FieldParams: p > 36 not supported by the text encoding");
    if (n < 1) throw Error("FieldParams: n must be >= 1");
    if (modulus.size() != n + 1) throw Error("FieldParams: modulus must have degree n");
    for (auto c : modulus)
        if (c >= p) throw Error("FieldParams: modulus coefficient out of range");
    if (modulus[n] != 1) throw Error("FieldParams: modulus must be monic");
    if (n >= 2 && !is_irreducible(p, modulus))
        throw Error("FieldParams: modulus is reducible");
    return FieldParams{p, n, std::move(modulus)};
}

FieldParams FieldParams::make_default(std::uint32_t p, std::uint32_t n) {
    if (n == 1) {
        // K = GF(p); modulus t + 1 keeps the shape without changing arithmetic.
        return make(p, 1, {1, 1});
    }
    return make(p, n, find_irreducible(p, n));
}

Gf::Gf(FieldParams params) : params_(std::move(params)) {
    order_ = 1;
    for (std::uint32_t i = 0; i < params_.n; ++i) order_ *= params_.p;
    top_red_.resize(params_.n);
    for (std::uint32_t j = 0; j < params_.n; ++j)
        top_red_[j] = static_cast<std::uint8_t>((params_.p - params_.modulus[j]) % params_.p);
}

FieldElement Gf::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement Gf::monomial(std::uint32_t k, std::uint8_t c) const {
    if (k >= params_.n) throw Error("Gf::monomial: power out of range");
    auto e = zero();
    e.coeffs[k] = static_cast<std::uint8_t>(c % params_.p);
    return e;
}

FieldElement Gf::from_digits(std::vector<std::uint8_t> digits) const {
    if (digits.size() != params_.n)
        throw FieldMismatchError("Gf::from_digits: wrong length");
    for (auto d : digits)
        if (d >= params_.p) throw Error("Gf::from_digits: digit out of range");
    return FieldElement{std::move(digits)};
}

FieldElement Gf::from_index(std::uint64_t k) const {
    auto e = zero();
    for (std::uint32_t i = 0; i < params_.n && k; ++i) {
        e.coeffs[i] = static_cast<std::uint8_t>(k % params_.p);
        k /= params_.p;
    }
    if (k) throw Error("Gf::from_index: index out of range");
    return e;
}

std::uint64_t Gf::to_index(const FieldElement& a) const {
    check(a);
    std::uint64_t k = 0;
    for (std::uint32_t i = params_.n; i-- > 0;) k = k * params_.p + a.coeffs[i];
    return k;
}

std::uint64_t Gf::enumeration_bound() const {
    if (order_ > (BigInt{1} << 24))
        throw EnumerationGuardError("exhaustive enumeration refused: p^n > 2^24");
    return static_cast<std::uint64_t>(order_);
}

bool Gf::is_zero(const FieldElement& a) const {
    for (auto c : a.coeffs)
        if (c) return false;
    return true;
}

void Gf::check(const FieldElement& a) const {
    if (a.coeffs.size() != params_.n)
        throw FieldMismatchError("field element has wrong coefficient count");
}

FieldElement Gf::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = a;
    const std::uint32_t p = params_.p;
    if (p == 2) {
        for (std::uint32_t i = 0; i < params_.n; ++i) out.coeffs[i] ^= b.coeffs[i];
    } else {
        for (std::uint32_t i = 0; i < params_.n; ++i)
            out.coeffs[i] = static_cast<std::uint8_t>((out.coeffs[i] + std::uint32_t{b.coeffs[i]}) % p);
    }
    return out;
}

FieldElement Gf::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = a;
    const std::uint32_t p = params_.p;
    if (p == 2) {
        for (std::uint32_t i = 0; i < params_.n; ++i) out.coeffs[i] ^= b.coeffs[i];
    } else {
        for (std::uint32_t i = 0; i < params_.n; ++i)
            out.coeffs[i] = static_cast<std::uint8_t>((out.coeffs[i] + p - b.coeffs[i]) % p);
    }
    return out;
}

FieldElement Gf::neg(const FieldElement& a) const {
    check(a);
    FieldElement out = a;
    const std::uint32_t p = params_.p;
    for (auto& c : out.coeffs) c = static_cast<std::uint8_t>((p - c) % p);
    return out;
}

void Gf::mul_into(std::uint8_t* out, const std::uint8_t* a, const std::uint8_t* b) const {
    mul_count_.fetch_add(1, std::memory_order_relaxed);
    const std::uint32_t n = params_.n;
    const std::uint32_t p = params_.p;
    thread_local std::vector<std::uint32_t> scratch;
    scratch.assign(2 * n - 1, 0);
    if (p == 2) {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!a[i]) continue;
            std::uint32_t* row = scratch.data() + i;
            for (std::uint32_t j = 0; j < n; ++j) row[j] ^= b[j];
        }
        for (std::uint32_t k = 2 * n - 2; k >= n; --k) {
            const std::uint32_t c = scratch[k] & 1u;
            if (c) {
                std::uint32_t* row = scratch.data() + (k - n);
                for (std::uint32_t j = 0; j < n; ++j) row[j] ^= top_red_[j];
            }
            if (k == n) break;
        }
        for (std::uint32_t j = 0; j < n; ++j) out[j] = static_cast<std::uint8_t>(scratch[j] & 1u);
    } else {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!a[i]) continue;
            const std::uint32_t ai = a[i];
            std::uint32_t* row = scratch.data() + i;
            for (std::uint32_t j = 0; j < n; ++j) row[j] += ai * b[j];
        }
        for (std::uint32_t k = 2 * n - 2; k >= n; --k) {
            const std::uint32_t c = scratch[k] % p;
            if (c) {
                std::uint32_t* row = scratch.data() + (k - n);
                for (std::uint32_t j = 0; j < n; ++j) row[j] += c * top_red_[j];
            }
            if (k == n) break;
        }
        for (std::uint32_t j = 0; j < n; ++j) out[j] = static_cast<std::uint8_t>(scratch[j] % p);
    }
}

FieldElement Gf::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = zero();
    mul_into(out.coeffs.data(), a.coeffs.data(), b.coeffs.data());
    return out;
}

void Gf::add_mul(FieldElement& dst, const FieldElement& a, const FieldElement& b) const {
    check(dst);
    check(a);
    check(b);
    thread_local std::vector<std::uint8_t> prod;
    prod.assign(params_.n, 0);
    mul_into(prod.data(), a.coeffs.data(), b.coeffs.data());
    const std::uint32_t p = params_.p;
    if (p == 2) {
        for (std::uint32_t i = 0; i < params_.n; ++i) dst.coeffs[i] ^= prod[i];
    } else {
        for (std::uint32_t i = 0; i < params_.n; ++i)
            dst.coeffs[i] = static_cast<std::uint8_t>((dst.coeffs[i] + std::uint32_t{prod[i]}) % p);
    }
}

void Gf::sub_mul(FieldElement& dst, const FieldElement& a, const FieldElement& b) const {
    check(dst);
    check(a);
    check(b);
    thread_local std::vector<std::uint8_t> prod;
    prod.assign(params_.n, 0);
    mul_into(prod.data(), a.coeffs.data(), b.coeffs.data());
    const std::uint32_t p = params_.p;
    if (p == 2) {
        for (std::uint32_t i = 0; i < params_.n; ++i) dst.coeffs[i] ^= prod[i];
    } else {
        for (std::uint32_t i = 0; i < params_.n; ++i)
            dst.coeffs[i] = static_cast<std::uint8_t>((dst.coeffs[i] + p - prod[i]) % p);
    }
}

FieldElement Gf::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw DivisionByZeroError("Gf::inv: inverse of zero");
    // Extended Euclid over GF(p)[x] against the modulus.
    const std::uint32_t p = params_.p;
    Poly r0(params_.modulus.begin(), params_.modulus.end());
    Poly r1(a.coeffs.begin(), a.coeffs.end());
    trim(r1);
    Poly s0 = {};   // coefficients of r0 combination
    Poly s1 = {1};  // coefficients of r1 combination
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2; track s2 = s0 - q*s1.
        Poly q(static_cast<std::size_t>(deg(r0) - deg(r1) + 1), 0);
        Poly rem = r0;
        const std::uint8_t li = p_inv(p, r1[static_cast<std::size_t>(deg(r1))]);
        for (int d = deg(rem); d >= deg(r1); d = deg(rem)) {
            const std::uint32_t c = rem[static_cast<std::size_t>(d)] * std::uint32_t{li} % p;
            q[static_cast<std::size_t>(d - deg(r1))] = static_cast<std::uint8_t>(c);
            for (int j = 0; j <= deg(r1); ++j) {
                auto& dst = rem[static_cast<std::size_t>(d - deg(r1) + j)];
                dst = static_cast<std::uint8_t>((dst + p * p - c * r1[static_cast<std::size_t>(j)] % p) % p);
            }
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!q[i]) continue;
            for (std::size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = static_cast<std::uint8_t>((qs[i + j] + std::uint32_t{q[i]} * s1[j]) % p);
        }
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i)
            s2[i] = static_cast<std::uint8_t>((s2[i] + p - qs[i]) % p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (deg(r1) != 0)
        throw Error("Gf::inv: element not invertible (modulus reducible?)");
    const std::uint8_t scale = p_inv(p, r1[0]);
    auto out = zero();
    for (std::size_t i = 0; i < s1.size() && i < params_.n; ++i)
        out.coeffs[i] = static_cast<std::uint8_t>(std::uint32_t{s1[i]} * scale % p);
    return out;
}

FieldElement Gf::pow(const FieldElement& a, const BigInt& e) const {
    check(a);
    if (e == 0) return one();
    if (e < 0) throw Error("Gf::pow: negative exponent");
    FieldElement base = a;
    FieldElement acc = one();
    BigInt k = e;
    while (k > 0) {
        if (boost::multiprecision::bit_test(k, 0)) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

FieldElement Gf::frobenius(const FieldElement& a, std::uint32_t k) const {
    check(a);
    FieldElement out = a;
    const BigInt pe = params_.p;
    // frobenius(a, n) = a, so k reduces mod n.
    for (std::uint32_t i = 0; i < k % params_.n; ++i)
        out = params_.p == 2 ? square(out) : pow(out, pe);
    return out;
}

FieldElement Gf::random_element(std::mt19937_64& rng) const {
    auto e = zero();
    std::uniform_int_distribution<std::uint32_t> dist(0, params_.p - 1);
    for (auto& c : e.coeffs) c = static_cast<std::uint8_t>(dist(rng));
    return e;
}

namespace {
constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
}

std::string Gf::to_text(const FieldElement& a) const {
    check(a);
    std::string s;
    s.reserve(params_.n);
    for (auto c : a.coeffs) s.push_back(kDigits[c]);
    return s;
}

FieldElement Gf::from_text(std::string_view text) const {
    if (text.size() != params_.n)
        throw Error("Gf::from_text: expected " + std::to_string(params_.n) + " digits");
    auto e = zero();
    for (std::uint32_t i = 0; i < params_.n; ++i) {
        const auto pos = kDigits.find(text[i]);
        if (pos == std::string_view::npos || pos >= params_.p)
            throw Error("Gf::from_text: invalid digit");
        e.coeffs[i] = static_cast<std::uint8_t>(pos);
    }
    return e;
}

Basis Basis::make(const PrimeField& f, Mat<PrimeField> matrix) {
    if (matrix.rows != matrix.cols) throw SingularMatrixError("Basis: matrix not square");
    Mat<PrimeField> inv;
    try {
        inv = invert(f, matrix);
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("Basis: matrix is singular");
    }
    return Basis(std::move(matrix), std::move(inv));
}

Basis Basis::identity(const PrimeField& f, std::uint32_t n) {
    return Basis(hfe::identity(f, n), hfe::identity(f, n));
}

Basis Basis::reversed_power(const PrimeField& f, std::uint32_t n) {
    Mat<PrimeField> m(f, n, n);
    for (std::uint32_t j = 0; j < n; ++j) m.at(n - 1 - j, j) = 1;
    return make(f, std::move(m));
}

FieldElement encode(const Gf& gf, const std::vector<std::uint8_t>& v, const Basis& basis) {
    if (v.size() != gf.n()) throw FieldMismatchError("encode: wrong vector length");
    if (basis.n() != gf.n()) throw FieldMismatchError("encode: basis size mismatch");
    const PrimeField f(gf.p());
    auto coords = matvec(f, basis.matrix(), v);
    return gf.from_digits(std::move(coords));
}

std::vector<std::uint8_t> decode(const Gf& gf, const FieldElement& a, const Basis& basis) {
    if (a.coeffs.size() != gf.n()) throw FieldMismatchError("decode: wrong element length");
    if (basis.n() != gf.n()) throw FieldMismatchError("decode: basis size mismatch");
    const PrimeField f(gf.p());
    return matvec(f, basis.inverse(), a.coeffs);
}

}  // namespace hfe

#include "hfe/sparse_poly.hpp"

#include <utility>

namespace hfe {

namespace {

// Splits a weight<=2 exponent into its base-q digit positions:
// 0 -> {}, q^a -> {a}, q^a + q^b (a <= b, possibly a == b) -> {a, b}.
// Throws ShapeError for anything heavier.
std::vector<std::uint32_t> split_exponent(Exp e, std::uint32_t q) {
    std::vector<std::uint32_t> parts;
    std::uint32_t pos = 0;
    while (e > 0) {
        const auto digit = static_cast<std::uint32_t>(e % q);
        if (digit > 2 || (digit == 2 && !parts.empty()))
            throw ShapeError("exponent has base-q weight > 2");
        for (std::uint32_t i = 0; i < digit; ++i) parts.push_back(pos);
        if (parts.size() > 2) throw ShapeError("exponent has base-q weight > 2");
        e /= q;
        ++pos;
    }
    return parts;
}

Exp q_power(std::uint32_t q, std::uint32_t k) {
    Exp e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q;
    return e;
}

}  // namespace

FieldElement SparsePoly::coeff(const Gf& gf, const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? gf.zero() : it->second;
}

void SparsePoly::set_term(const Gf& gf, const Exp& e, FieldElement c) {
    if (e < 0) throw ShapeError("negative exponent");
    if (gf.is_zero(c))
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void SparsePoly::add_term(const Gf& gf, const Exp& e, const FieldElement& c) {
    if (gf.is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = gf.add(it->second, c);
        if (gf.is_zero(it->second)) terms_.erase(it);
    }
}

int SparsePoly::weight(Exp e, std::uint32_t q) {
    int w = 0;
    while (e > 0) {
        if (e % q != 0) ++w;
        e /= q;
    }
    return w;
}

int SparsePoly::poly_weight(std::uint32_t q) const {
    int w = 0;
    for (const auto& [e, c] : terms_) w = std::max(w, weight(e, q));
    return w;
}

FieldElement SparsePoly::eval(const Gf& gf, const FieldElement& x) const {
    FieldElement acc = gf.zero();
    for (const auto& [e, c] : terms_) {
        if (e == 0) {
            acc = gf.add(acc, c);  // 0^0 = 1
        } else {
            gf.add_mul(acc, c, gf.pow(x, e));
        }
    }
    return acc;
}

SparsePoly SparsePoly::add(const Gf& gf, const SparsePoly& other) const {
    SparsePoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(gf, e, c);
    return out;
}

SparsePoly SparsePoly::sub(const Gf& gf, const SparsePoly& other) const {
    SparsePoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(gf, e, gf.neg(c));
    return out;
}

SparsePoly SparsePoly::scale(const Gf& gf, const FieldElement& c) const {
    SparsePoly out;
    if (gf.is_zero(c)) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(gf, e, gf.mul(c, coeff));
    return out;
}

SparsePoly SparsePoly::reduce(const Gf& gf) const {
    const Exp period = gf.order() - 1;  // q^n - 1
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        const Exp folded = e == 0 ? Exp{0} : ((e - 1) % period) + 1;
        out.add_term(gf, folded, c);
    }
    return out;
}

SparsePoly SparsePoly::frobenius_twist(const Gf& gf, std::uint32_t k) const {
    const Exp qk = q_power(gf.p(), k % gf.n());
    SparsePoly out;
    for (const auto& [e, c] : terms_)
        out.add_term(gf, e * qk, gf.frobenius(c, k));
    return out.reduce(gf);
}

SparsePoly SparsePoly::compose_linearized(const Gf& gf, const SparsePoly& linearized) const {
    const std::uint32_t q = gf.p();
    const std::uint32_t n = gf.n();
    // L = sum t_j x^(q^j); collect (j, t_j) and reject other shapes.
    std::vector<std::pair<std::uint32_t, FieldElement>> lin;
    for (const auto& [e, c] : linearized.terms()) {
        Exp rem = e;
        std::uint32_t j = 0;
        while (rem > 1 && rem % q == 0) {
            rem /= q;
            ++j;
        }
        if (rem != 1 || j >= n)
            throw ShapeError("compose_linearized: inner polynomial is not linearized");
        lin.emplace_back(j, c);
    }

    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        const auto parts = split_exponent(e, q);
        if (parts.empty()) {
            out.add_term(gf, 0, c);
        } else if (parts.size() == 1) {
            const std::uint32_t a = parts[0];
            // (sum t_j x^(q^j))^(q^a) = sum t_j^(q^a) x^(q^((j+a) mod n))
            for (const auto& [j, tj] : lin)
                out.add_term(gf, q_power(q, (j + a) % n), gf.mul(c, gf.frobenius(tj, a)));
        } else {
            const std::uint32_t a = parts[0], b = parts[1];
            for (const auto& [j, tj] : lin) {
                const FieldElement ta = gf.frobenius(tj, a);
                for (const auto& [k, tk] : lin) {
                    const FieldElement tb = gf.frobenius(tk, b);
                    const Exp exp = q_power(q, (j + a) % n) + q_power(q, (k + b) % n);
                    out.add_term(gf, exp, gf.mul(c, gf.mul(ta, tb)));
                }
            }
        }
    }
    return out.reduce(gf);
}

SparsePoly SparsePoly::compose_linear_outer(const Gf& gf, const SparsePoly& outer) const {
    const std::uint32_t q = gf.p();
    SparsePoly out;
    for (const auto& [e, s] : outer.terms()) {
        Exp rem = e;
        std::uint32_t i = 0;
        while (rem > 1 && rem % q == 0) {
            rem /= q;
            ++i;
        }
        if (rem != 1 || i >= gf.n())
            throw ShapeError("compose_linear_outer: outer polynomial is not linearized");
        out = out.add(gf, frobenius_twist(gf, i).scale(gf, s));
    }
    return out.reduce(gf);
}

SparsePoly SparsePoly::compose_translate(const Gf& gf, const FieldElement& c,
                                         TranslateSide side) const {
    if (side == TranslateSide::Left) {
        SparsePoly out = *this;
        out.add_term(gf, 0, c);
        return out;
    }
    const std::uint32_t q = gf.p();
    SparsePoly out;
    for (const auto& [e, coeff] : terms_) {
        const auto parts = split_exponent(e, q);
        if (parts.empty()) {
            out.add_term(gf, 0, coeff);
        } else if (parts.size() == 1) {
            // (x + c)^(q^a) = x^(q^a) + c^(q^a)
            const std::uint32_t a = parts[0];
            out.add_term(gf, q_power(q, a), coeff);
            out.add_term(gf, 0, gf.mul(coeff, gf.frobenius(c, a)));
        } else {
            // (x^(q^a) + c^(q^a)) * (x^(q^b) + c^(q^b))
            const std::uint32_t a = parts[0], b = parts[1];
            const FieldElement ca = gf.frobenius(c, a);
            const FieldElement cb = gf.frobenius(c, b);
            out.add_term(gf, q_power(q, a) + q_power(q, b), coeff);
            out.add_term(gf, q_power(q, a), gf.mul(coeff, cb));
            out.add_term(gf, q_power(q, b), gf.mul(coeff, ca));
            out.add_term(gf, 0, gf.mul(coeff, gf.mul(ca, cb)));
        }
    }
    return out.reduce(gf);
}

}  // namespace hfe

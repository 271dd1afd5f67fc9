#include "hfe/forms.hpp"

#include <algorithm>
#include <sstream>

#include "hfe/rootfind.hpp"

namespace hfe {

namespace {

Exp q_power(std::uint32_t q, std::uint32_t k) {
    Exp e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q;
    return e;
}

// Positions of the one or two base-q digits of a weight-<=2 exponent.
struct ExpShape {
    int kind;  // 0 = constant, 1 = linear (q^a), 2 = pair (q^a + q^b, a<b), 3 = double (2q^a)
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

ExpShape classify(Exp e, std::uint32_t q) {
    if (e == 0) return {0};
    std::uint32_t pos = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> digits;  // (position, digit)
    while (e > 0) {
        const auto digit = static_cast<std::uint32_t>(e % q);
        if (digit) digits.emplace_back(pos, digit);
        e /= q;
        ++pos;
    }
    if (digits.size() == 1) {
        if (digits[0].second == 1) return {1, digits[0].first};
        if (digits[0].second == 2) return {3, digits[0].first};
    } else if (digits.size() == 2 && digits[0].second == 1 && digits[1].second == 1) {
        return {2, digits[0].first, digits[1].first};
    }
    throw ShapeError("exponent is not pseudoquadratic (weight > 2)");
}

// column ops paired with the mirrored row ops, so B stays congruent
void col_swap(Mat<Gf>& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
void row_swap(Mat<Gf>& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_scale(const Gf& gf, Mat<Gf>& m, std::size_t a, const FieldElement& c) {
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, a) = gf.mul(m.at(i, a), c);
}
void row_scale(const Gf& gf, Mat<Gf>& m, std::size_t a, const FieldElement& c) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(a, j) = gf.mul(m.at(a, j), c);
}
void col_addmul(const Gf& gf, Mat<Gf>& m, std::size_t dst, std::size_t src,
                const FieldElement& c) {
    for (std::size_t i = 0; i < m.rows; ++i) gf.add_mul(m.at(i, dst), c, m.at(i, src));
}
void row_addmul(const Gf& gf, Mat<Gf>& m, std::size_t dst, std::size_t src,
                const FieldElement& c) {
    for (std::size_t j = 0; j < m.cols; ++j) gf.add_mul(m.at(dst, j), c, m.at(src, j));
}
void col_submul(const Gf& gf, Mat<Gf>& m, std::size_t dst, std::size_t src,
                const FieldElement& c) {
    for (std::size_t i = 0; i < m.rows; ++i) gf.sub_mul(m.at(i, dst), c, m.at(i, src));
}
void row_submul(const Gf& gf, Mat<Gf>& m, std::size_t dst, std::size_t src,
                const FieldElement& c) {
    for (std::size_t j = 0; j < m.cols; ++j) gf.sub_mul(m.at(dst, j), c, m.at(src, j));
}

std::vector<FieldElement> transpose_apply(const Gf& gf, const Mat<Gf>& p,
                                          const std::vector<FieldElement>& v) {
    // P^T v
    std::vector<FieldElement> out(p.cols, gf.zero());
    for (std::size_t i = 0; i < p.rows; ++i)
        for (std::size_t j = 0; j < p.cols; ++j)
            if (!gf.is_zero(p.at(i, j))) gf.add_mul(out[j], p.at(i, j), v[i]);
    return out;
}

}  // namespace

QuadDecomposition decompose(const Gf& gf, const SparsePoly& a) {
    const std::uint32_t n = gf.n();
    const std::uint32_t q = gf.p();
    QuadDecomposition dec{gf.zero(), std::vector<FieldElement>(n, gf.zero()),
                          Mat<Gf>(gf, n, n)};
    for (const auto& [e, c] : a.terms()) {
        if (e >= gf.order()) throw ShapeError("decompose: polynomial is not reduced");
        const ExpShape shape = classify(e, q);
        switch (shape.kind) {
            case 0:
                dec.constant = c;
                break;
            case 1:
                dec.linear[shape.a] = c;
                break;
            case 2:
                dec.bilinear.at(shape.a, shape.b) = c;
                dec.bilinear.at(shape.b, shape.a) = c;
                break;
            case 3:
                if (q == 2) throw ShapeError("decompose: 2q^i exponent at p = 2");
                dec.bilinear.at(shape.a, shape.a) = c;
                break;
        }
    }
    return dec;
}

SparsePoly reconstruct(const Gf& gf, const QuadDecomposition& dec) {
    const std::uint32_t n = gf.n();
    const std::uint32_t q = gf.p();
    SparsePoly out;
    out.set_term(gf, 0, dec.constant);
    for (std::uint32_t i = 0; i < n; ++i) out.set_term(gf, q_power(q, i), dec.linear[i]);
    for (std::uint32_t i = 0; i < n; ++i) {
        // at p = 2 the diagonal is zero and 2q^i aliases the linear q^(i+1)
        if (q > 2) out.set_term(gf, 2 * q_power(q, i), dec.bilinear.at(i, i));
        else if (!gf.is_zero(dec.bilinear.at(i, i)))
            throw ShapeError("reconstruct: nonzero diagonal at p = 2");
        for (std::uint32_t j = i + 1; j < n; ++j)
            out.set_term(gf, q_power(q, i) + q_power(q, j), dec.bilinear.at(i, j));
    }
    return out;
}

CanonicalForm canonicalize(const Gf& gf, const Mat<Gf>& b) {
    const std::size_t n = b.rows;
    if (b.cols != n) throw FieldMismatchError("canonicalize: matrix not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (!gf.is_zero(b.at(i, i)))
            throw NotAlternatingError("canonicalize: nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!gf.eq(b.at(i, j), b.at(j, i)))
                throw NotAlternatingError("canonicalize: matrix not symmetric");
    }

    Mat<Gf> w = b;
    Mat<Gf> p = identity(gf, n);
    std::size_t pos = 0;
    while (pos + 1 < n) {
        // lowest-index nonzero entry (i, j), i >= pos, lexicographic
        std::size_t pi = n, pj = n;
        for (std::size_t i = pos; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!gf.is_zero(w.at(i, j))) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;
        if (pi != pos) {
            col_swap(w, pi, pos);
            row_swap(w, pi, pos);
            col_swap(p, pi, pos);
        }
        if (pj != pos + 1) {
            col_swap(w, pj, pos + 1);
            row_swap(w, pj, pos + 1);
            col_swap(p, pj, pos + 1);
        }
        // normalize the pair entry to 1
        const FieldElement scale = gf.inv(w.at(pos, pos + 1));
        col_scale(gf, w, pos + 1, scale);
        row_scale(gf, w, pos + 1, scale);
        col_scale(gf, p, pos + 1, scale);
        // clear the rest of rows/cols pos and pos+1 against the hyperbolic pair
        for (std::size_t k = 0; k < n; ++k) {
            if (k == pos || k == pos + 1) continue;
            FieldElement c = w.at(pos, k);
            if (!gf.is_zero(c)) {
                // kill B[pos][k] using column pos+1 (B[pos][pos+1] = 1)
                col_submul(gf, w, k, pos + 1, c);
                row_submul(gf, w, k, pos + 1, c);
                col_submul(gf, p, k, pos + 1, c);
            }
            c = w.at(pos + 1, k);
            if (!gf.is_zero(c)) {
                // kill B[pos+1][k] using column pos (B[pos+1][pos] = 1)
                col_submul(gf, w, k, pos, c);
                row_submul(gf, w, k, pos, c);
                col_submul(gf, p, k, pos, c);
            }
        }
        pos += 2;
    }

    CanonicalForm out{std::move(p), std::move(w), pos / 2, pos};
    return out;
}

CanonicalForm canonicalize_symmetric(const Gf& gf, const Mat<Gf>& b) {
    const std::size_t n = b.rows;
    if (b.cols != n) throw FieldMismatchError("canonicalize_symmetric: matrix not square");
    if (gf.p() == 2)
        throw NotAlternatingError("canonicalize_symmetric: use canonicalize at p = 2");
    Mat<Gf> w = b;
    Mat<Gf> p = identity(gf, n);
    std::size_t pos = 0;
    while (pos < n) {
        // ensure a nonzero diagonal pivot at pos
        if (gf.is_zero(w.at(pos, pos))) {
            std::size_t k = pos + 1;
            while (k < n && gf.is_zero(w.at(k, k))) ++k;
            if (k < n) {
                col_swap(w, k, pos);
                row_swap(w, k, pos);
                col_swap(p, k, pos);
            } else {
                // all-zero diagonal: find any nonzero entry and fold it in
                std::size_t fi = n, fj = n;
                for (std::size_t i = pos; i < n && fi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (!gf.is_zero(w.at(i, j))) {
                            fi = i;
                            fj = j;
                            break;
                        }
                if (fi == n) break;  // remaining block is zero
                // col_i += col_j makes the (i,i) entry 2*B_ij != 0 (char != 2)
                col_addmul(gf, w, fi, fj, gf.one());
                row_addmul(gf, w, fi, fj, gf.one());
                col_addmul(gf, p, fi, fj, gf.one());
                if (fi != pos) {
                    col_swap(w, fi, pos);
                    row_swap(w, fi, pos);
                    col_swap(p, fi, pos);
                }
            }
        }
        const FieldElement pivot = w.at(pos, pos);
        if (gf.is_zero(pivot)) break;
        const FieldElement pinv = gf.inv(pivot);
        for (std::size_t k = pos + 1; k < n; ++k) {
            const FieldElement c = gf.mul(w.at(pos, k), pinv);
            if (gf.is_zero(c)) continue;
            col_submul(gf, w, k, pos, c);
            row_submul(gf, w, k, pos, c);
            col_submul(gf, p, k, pos, c);
        }
        ++pos;
    }
    CanonicalForm out{std::move(p), std::move(w), 0, pos};
    return out;
}

Mat<Gf> reduce_linear_tail(const Gf& gf, const std::vector<FieldElement>& lambda,
                           std::size_t head) {
    const std::size_t n = lambda.size();
    Mat<Gf> q = identity(gf, n);
    if (head >= n) return q;
    const std::size_t m = n - head;
    std::size_t k0 = m;
    for (std::size_t i = 0; i < m; ++i)
        if (!gf.is_zero(lambda[head + i])) {
            k0 = i;
            break;
        }
    if (k0 == m) return q;  // tail already zero
    const FieldElement uk_inv = gf.inv(lambda[head + k0]);
    // Build the tail block: first column e_k0 / u_k0 maps the functional to 1;
    // remaining columns span its kernel.
    Mat<Gf> tail(gf, m, m);
    tail.at(k0, 0) = uk_inv;
    std::size_t slot = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == k0) continue;
        tail.at(i, slot) = gf.one();
        tail.at(k0, slot) = gf.neg(gf.mul(lambda[head + i], uk_inv));
        ++slot;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q.at(head + i, head + j) = tail.at(i, j);
    return q;
}

std::string alias_digest(const Gf& gf, const AliasKey& alias) {
    // FNV-1a over the canonical text form.
    std::ostringstream os;
    for (const auto& [e, c] : alias.a.terms()) os << e << ':' << gf.to_text(c) << ';';
    const std::string s = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

ReducedKey reduce(const Gf& gf, const AliasKey& alias) {
    const std::uint32_t n = gf.n();
    const std::uint32_t q = gf.p();
    const QuadDecomposition dec = decompose(gf, alias.a);

    CanonicalForm cf = q == 2 ? canonicalize(gf, dec.bilinear)
                              : canonicalize_symmetric(gf, dec.bilinear);
    const std::size_t head = q == 2 ? 2 * cf.r : cf.rank;

    auto lambda_p = transpose_apply(gf, cf.p, dec.linear);
    const Mat<Gf> qmat = reduce_linear_tail(gf, lambda_p, head);
    const auto lambda_pp = transpose_apply(gf, qmat, lambda_p);
    const Mat<Gf> p_total = matmul(gf, cf.p, qmat);

    // invariants: congruence preserves the canonical form and the rank
    if (!mat_eq(gf, congruence(gf, p_total, dec.bilinear), cf.canonical))
        throw VerificationError("reduce: congruence does not reach the canonical form");
    if (rank(gf, dec.bilinear) != cf.rank)
        throw VerificationError("reduce: rank changed under congruence");

    QuadDecomposition out_dec{dec.constant, lambda_pp, cf.canonical};
    // r = hyperbolic pair count at p = 2; the diagonal variant reports its rank
    ReducedKey rk{reconstruct(gf, out_dec), p_total, q == 2 ? cf.r : cf.rank,
                  alias_digest(gf, alias)};

    // degree invariant: deg F' <= q^(2r) + q^(2r-1) (head = 2r at p = 2)
    if (q == 2) {
        Exp bound = q_power(q, static_cast<std::uint32_t>(2 * cf.r));
        if (cf.r >= 1) bound += q_power(q, static_cast<std::uint32_t>(2 * cf.r - 1));
        if (!rk.f_prime.is_zero() && rk.f_prime.degree() > bound)
            throw VerificationError("reduce: F' degree exceeds the canonical bound");
    }
    if (!gf.eq(rk.f_prime.coeff(gf, 0), dec.constant))
        throw VerificationError("reduce: constant term changed");
    return rk;
}

std::vector<FieldElement> solve_via_reduction(const Gf& gf, const ReducedKey& rk,
                                              const AliasKey& alias,
                                              const FieldElement& ct) {
    const std::uint32_t n = gf.n();
    const DensePoly dense = dense_from_sparse(gf, rk.f_prime);
    const auto roots = roots_lowdegree(gf, dense, ct);

    std::vector<FieldElement> out;
    for (const auto& z : roots) {
        std::vector<FieldElement> frob(n);
        frob[0] = z;
        for (std::uint32_t i = 1; i < n; ++i) frob[i] = gf.frobenius(frob[i - 1], 1);
        const auto mapped = matvec(gf, rk.p_total, frob);
        const FieldElement x = mapped[0];
        if (gf.eq(alias.a.eval(gf, x), ct)) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [&](const FieldElement& a, const FieldElement& b) {
        return gf.to_index(a) < gf.to_index(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hfe

#ifndef HFE_LINALG_HPP
#define HFE_LINALG_HPP

// Dense exact linear algebra over an arbitrary field. The field is passed
// explicitly to every operation; Mat is a plain row-major container. Works
// for both the prime field GF(p) and the extension field K.

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "hfe/errors.hpp"

namespace hfe {

template <class F>
concept FieldLike = requires(const F f, const typename F::Element a,
                             const typename F::Element b,
                             typename F::Element& dst) {
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.add(a, b) } -> std::same_as<typename F::Element>;
    { f.sub(a, b) } -> std::same_as<typename F::Element>;
    { f.mul(a, b) } -> std::same_as<typename F::Element>;
    { f.inv(a) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    f.add_mul(dst, a, b);  // dst += a*b
    f.sub_mul(dst, a, b);  // dst -= a*b
};

template <FieldLike F>
struct Mat {
    using Element = typename F::Element;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Element> e;  // row-major

    Mat() = default;
    Mat(const F& f, std::size_t r, std::size_t c)
        : rows(r), cols(c), e(r * c, f.zero()) {}

    Element& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Element& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

template <FieldLike F>
Mat<F> identity(const F& f, std::size_t n) {
    Mat<F> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

template <FieldLike F>
bool mat_eq(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (!f.eq(a.e[i], b.e[i])) return false;
    return true;
}

template <FieldLike F>
Mat<F> transpose(const F& f, const Mat<F>& a) {
    Mat<F> t(f, a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

template <FieldLike F>
Mat<F> matmul(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.rows) throw FieldMismatchError("matmul: dimension mismatch");
    Mat<F> c(f, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                f.add_mul(c.at(i, j), aik, b.at(k, j));
        }
    return c;
}

template <FieldLike F>
std::vector<typename F::Element> matvec(const F& f, const Mat<F>& a,
                                        const std::vector<typename F::Element>& x) {
    if (a.cols != x.size()) throw FieldMismatchError("matvec: dimension mismatch");
    std::vector<typename F::Element> y(a.rows, f.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (!f.is_zero(a.at(i, j))) f.add_mul(y[i], a.at(i, j), x[j]);
    return y;
}

template <FieldLike F>
struct LinearSystemSolution {
    std::vector<typename F::Element> solution;  // free variables set to zero
    std::size_t rank = 0;
    std::size_t free_count = 0;  // rank + free_count == #unknowns
    std::vector<std::size_t> pivot_rows;  // original indices of the pivot rows
};

// Gaussian elimination with first-nonzero pivoting, exact arithmetic.
// Throws InconsistentSystemError when no solution exists.
template <FieldLike F>
LinearSystemSolution<F> solve(const F& f, const Mat<F>& a,
                              const std::vector<typename F::Element>& b) {
    if (a.rows != b.size()) throw FieldMismatchError("solve: rhs length mismatch");
    Mat<F> m = a;
    std::vector<typename F::Element> rhs = b;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::vector<std::size_t> row_index(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) row_index[i] = i;

    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row) {
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(row, j));
            std::swap(rhs[sel], rhs[row]);
            std::swap(row_index[sel], row_index[row]);
        }
        const auto pinv = f.inv(m.at(row, col));
        for (std::size_t i = row + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            const auto factor = f.mul(m.at(i, col), pinv);
            m.at(i, col) = f.zero();
            for (std::size_t j = col + 1; j < m.cols; ++j)
                f.sub_mul(m.at(i, j), factor, m.at(row, j));
            f.sub_mul(rhs[i], factor, rhs[row]);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    for (std::size_t i = row; i < m.rows; ++i)
        if (!f.is_zero(rhs[i]))
            throw InconsistentSystemError("solve: system has no solution");

    LinearSystemSolution<F> out;
    out.rank = pivots.size();
    out.free_count = m.cols - out.rank;
    out.pivot_rows.assign(row_index.begin(), row_index.begin() + out.rank);
    out.solution.assign(m.cols, f.zero());
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [pr, pc] = *it;
        auto acc = rhs[pr];
        for (std::size_t j = pc + 1; j < m.cols; ++j)
            if (!f.is_zero(m.at(pr, j))) f.sub_mul(acc, m.at(pr, j), out.solution[j]);
        out.solution[pc] = f.mul(acc, f.inv(m.at(pr, pc)));
    }
    return out;
}

template <FieldLike F>
std::size_t rank(const F& f, const Mat<F>& a) {
    Mat<F> m = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t sel = r;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(r, j));
        const auto pinv = f.inv(m.at(r, col));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            const auto factor = f.mul(m.at(i, col), pinv);
            m.at(i, col) = f.zero();
            for (std::size_t j = col + 1; j < m.cols; ++j)
                f.sub_mul(m.at(i, j), factor, m.at(r, j));
        }
        ++r;
    }
    return r;
}

// Gauss-Jordan inverse. Throws SingularMatrixError.
template <FieldLike F>
Mat<F> invert(const F& f, const Mat<F>& a) {
    if (a.rows != a.cols) throw SingularMatrixError("invert: matrix not square");
    const std::size_t n = a.rows;
    Mat<F> m = a;
    Mat<F> inv = identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == n) throw SingularMatrixError("invert: singular matrix");
        if (sel != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(sel, j), m.at(col, j));
                std::swap(inv.at(sel, j), inv.at(col, j));
            }
        const auto pinv = f.inv(m.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = f.mul(m.at(col, j), pinv);
            inv.at(col, j) = f.mul(inv.at(col, j), pinv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || f.is_zero(m.at(i, col))) continue;
            const auto factor = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                f.sub_mul(m.at(i, j), factor, m.at(col, j));
                f.sub_mul(inv.at(i, j), factor, inv.at(col, j));
            }
        }
    }
    return inv;
}

// Congruence transform P^T B P of a bilinear form matrix.
template <FieldLike F>
Mat<F> congruence(const F& f, const Mat<F>& p, const Mat<F>& b) {
    return matmul(f, transpose(f, p), matmul(f, b, p));
}

}  // namespace hfe

#endif

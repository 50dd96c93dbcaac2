#pragma once

#include "tuckvol/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tuckvol {

using Matrix = std::vector<std::vector<Rational>>;

namespace detail {

// Fraction-free Bareiss elimination on an integer matrix. Keeps intermediate
// entries as true minors, which controls coefficient growth.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return BigInt(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

}  // namespace detail

// Exact determinant of a square rational matrix. Direct cofactor formulas for
// n <= 3; for larger n the rows are scaled to integers and eliminated with the
// Bareiss fraction-free scheme.
inline Rational determinant(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix is not square");

    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    // Clear denominators row by row, then divide the integer determinant by
    // the accumulated row factors.
    std::vector<std::vector<BigInt>> scaled(n, std::vector<BigInt>(n));
    Rational factor(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm(1);
        for (std::size_t j = 0; j < n; ++j)
            row_lcm = lcm(row_lcm, denominator(m[i][j]));
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = m[i][j] * Rational(row_lcm);
            scaled[i][j] = numerator(v);
        }
        factor *= Rational(row_lcm);
    }
    return Rational(detail::bareiss_det(std::move(scaled))) / factor;
}

// Solves A x = b exactly by Gaussian elimination with partial (first nonzero)
// pivoting. Throws when A is singular.
inline std::vector<Rational> solve_linear(Matrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_linear: matrix is not square");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("solve_linear: singular matrix");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

// Rank of a (possibly rectangular) rational matrix, by exact elimination.
inline std::size_t matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace tuckvol

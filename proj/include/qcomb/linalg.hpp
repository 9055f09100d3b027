#pragma once

#include <vector>

#include "qcomb/errors.hpp"
#include "qcomb/fraction.hpp"

namespace qcomb {

using FracMatrix = std::vector<std::vector<Fraction>>;
using FracVector = std::vector<Fraction>;

// Exact solve of A x = b over the fraction field, A of size r x c with
// r >= c. Requires full column rank and a consistent system; pivoting picks
// the first row with a nonzero entry, so the result is deterministic.
// Throws singular_system otherwise.
inline FracVector solve_linear(FracMatrix A, FracVector b) {
    const size_t rows = A.size();
    if (rows == 0) return {};
    const size_t cols = A[0].size();
    if (b.size() != rows) throw qcomb_error("solve_linear: shape mismatch");

    std::vector<size_t> pivot_row(cols);
    size_t rank = 0;
    for (size_t col = 0; col < cols; ++col) {
        size_t p = rank;
        while (p < rows && A[p][col].is_zero()) ++p;
        if (p == rows) throw singular_system("no pivot in column " + std::to_string(col));
        std::swap(A[p], A[rank]);
        std::swap(b[p], b[rank]);
        Fraction inv = A[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) A[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col].is_zero()) continue;
            Fraction f = A[r][col];
            for (size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    // consistency of the leftover equations
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero())
            throw singular_system("inconsistent system at row " + std::to_string(r));
    FracVector x(cols);
    for (size_t col = 0; col < cols; ++col) x[col] = b[pivot_row[col]];
    return x;
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free Bareiss determinant. Entries stay minors of the input, so
// degrees grow linearly; every division is exact by construction.
inline LaurentPoly bareiss_determinant(PolyMatrix a) {
    const size_t n = a.size();
    if (n == 0) return LaurentPoly::one();
    LaurentPoly prev = LaurentPoly::one();
    Rat sign(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return LaurentPoly::zero();
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).div_exact(prev);
        prev = a[k][k];
    }
    return a[n - 1][n - 1] * sign;
}

// Fraction-free solve of a square polynomial system: one Bareiss forward
// elimination over the augmented matrix (entries stay minors, divisions
// exact), then back substitution in the fraction field. Throws
// singular_system when a pivot column dies.
inline FracVector solve_poly_cramer(PolyMatrix A, std::vector<LaurentPoly> b) {
    const size_t n = A.size();
    if (n == 0) return {};
    for (size_t r = 0; r < n; ++r) A[r].push_back(b[r]);
    LaurentPoly prev = LaurentPoly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && A[p][k].is_zero()) ++p;
            if (p == n) throw singular_system("no pivot in column " + std::to_string(k));
            std::swap(A[p], A[k]);  // row swap only scales the solution's det bookkeeping
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j)
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).div_exact(prev);
            A[i][k] = LaurentPoly::zero();
        }
        prev = A[k][k];
    }
    if (A[n - 1][n - 1].is_zero()) throw singular_system("zero determinant");
    // Fraction-free back substitution: every solution component is a Cramer
    // numerator over the final pivot, and the per-row division by the pivot
    // is exact on the numerators.
    const LaurentPoly det = A[n - 1][n - 1];
    std::vector<LaurentPoly> num(n);
    num[n - 1] = A[n - 1][n];
    for (size_t i = n - 1; i-- > 0;) {
        LaurentPoly acc = A[i][n] * det;
        for (size_t j = i + 1; j < n; ++j) acc -= A[i][j] * num[j];
        num[i] = acc.div_exact(A[i][i]);
    }
    FracVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = Fraction(num[i], det);
    return x;
}

}  // namespace qcomb

#pragma once

#include "hopfcm/eigen_support.hpp"
#include "hopfcm/scalar.hpp"

#include <optional>
#include <vector>

namespace hopfcm {

// Reduced row echelon form over an exact field.
template <class F>
struct Echelon {
    MatX<F> rref;
    std::vector<int> pivots;  // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

template <class F>
Echelon<F> row_reduce(MatX<F> m) {
    Echelon<F> e;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && scalar_is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.row(p).swap(m.row(r));
        F inv = F(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || scalar_is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    e.rref = std::move(m);
    return e;
}

template <class F>
int exact_rank(const MatX<F>& m) {
    return row_reduce(m).rank();
}

// Coefficients x with sum_i x_i rows.row(i) = target, or nullopt when the
// target is outside the row space. Requires linearly independent rows.
template <class F>
std::optional<std::vector<F>> row_combination(const MatX<F>& rows, const std::vector<F>& target) {
    const Eigen::Index k = rows.rows(), n = rows.cols();
    // Solve rows^T x = target through the augmented system.
    MatX<F> aug(n, k + 1);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < k; ++i) aug(j, i) = rows(i, j);
        aug(j, k) = target[j];
    }
    Echelon<F> e = row_reduce(aug);
    for (int p : e.pivots)
        if (p == k) return std::nullopt;
    if (e.rank() < k) return std::nullopt;
    std::vector<F> x(k, F(0));
    for (int r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.rref(r, k);
    return x;
}

// Inverse of a square matrix over an exact field; nullopt when singular.
template <class F>
std::optional<MatX<F>> exact_inverse(const MatX<F>& a) {
    const Eigen::Index n = a.rows();
    MatX<F> aug(n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            aug(i, j) = a(i, j);
            aug(i, n + j) = i == j ? F(1) : F(0);
        }
    Echelon<F> e = row_reduce(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return MatX<F>(e.rref.rightCols(n));
}

}  // namespace hopfcm

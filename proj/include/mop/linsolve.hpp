#pragma once

#include <vector>

#include "mop/scalar.hpp"

namespace mop {

// Dense exact solve by Gaussian elimination. Matrices here are tiny (moment
// systems of order <= ~12), so plain fraction arithmetic is fine.
template <class S>
std::vector<S> solve_dense(std::vector<std::vector<S>> a, std::vector<S> rhs) {
    const std::size_t n = a.size();
    if (rhs.size() != n) throw usage_error("solve_dense: shape mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw usage_error("solve_dense: non-square matrix");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && scalar_is_zero(a[pivot][col])) ++pivot;
        if (pivot == n) throw singular_error("solve_dense: singular system");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (scalar_is_zero(a[row][col])) continue;
            const S f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<S> x(n, S(0));
    for (std::size_t i = n; i-- > 0;) {
        S acc = rhs[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace mop

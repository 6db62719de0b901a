#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "scalar.hpp"

namespace tschur {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Determinant over a field by Gaussian elimination (partial pivoting on
/// magnitude for floating types, first nonzero pivot for exact ones).
template <class S>
S det_field(Matrix<S> a)
{
    const int n = static_cast<int>(a.size());
    if (n == 0) return S(1);
    S det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        Bound best = -1;
        for (int r = col; r < n; ++r) {
            if (a[r][col] == S(0)) continue;
            if constexpr (scalar_traits<S>::exact) {
                piv = r;
                break;
            } else {
                Bound m = magnitude(a[r][col]);
                if (m > best) {
                    best = m;
                    piv = r;
                }
            }
        }
        if (piv < 0) return S(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == S(0)) continue;
            S f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

/// Division-free determinant for commutative rings (e.g. truncated series):
/// Laplace expansion along rows with memoization over column subsets.
template <class S>
S det_ring(const Matrix<S>& a)
{
    const int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("det_ring: empty matrix has no ring context");
    if (n > 20) throw std::invalid_argument("det_ring: matrix too large");
    const S zero = a[0][0] - a[0][0];
    // minor[mask] = det of rows (n-popcount(mask))..n-1 restricted to columns in mask
    std::vector<S> memo(std::size_t(1) << n, zero);
    std::vector<char> done(memo.size(), 0);
    for (int c = 0; c < n; ++c) {
        memo[std::size_t(1) << c] = a[n - 1][c];
        done[std::size_t(1) << c] = 1;
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (done[mask]) continue;
        int k = __builtin_popcount(mask);
        int row = n - k;
        S acc = zero;
        int sign_idx = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            std::uint32_t sub = mask & ~(1u << c);
            S term = a[row][c] * memo[sub];
            if (sign_idx % 2 == 0)
                acc += term;
            else
                acc -= term;
            ++sign_idx;
        }
        memo[mask] = acc;
        done[mask] = 1;
    }
    return memo[(1u << n) - 1];
}

} // namespace tschur

#pragma once

#include <numeric>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/rational.hpp"

namespace altsum {

using IntVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;  // row-major, A[r][c]
using RatMat = std::vector<std::vector<Rational>>;

inline Int mat_det(const IntMat& A) {
    const std::size_t n = A.size();
    // Bareiss fraction-free elimination.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (A[r].size() != n) throw std::invalid_argument("determinant needs a square matrix");
        for (std::size_t c = 0; c < n; ++c) a[r][c] = A[r][c];
    }
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * a[n - 1][n - 1];
}

/// Exact inverse of a nonsingular integer matrix.
inline RatMat mat_inverse(const IntMat& A) {
    const std::size_t n = A.size();
    RatMat aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(A[r][c]);
        aug[r][n + r] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && aug[piv][k] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        std::swap(aug[k], aug[piv]);
        const Rational d = aug[k][k];
        for (std::size_t c = 0; c < 2 * n; ++c) aug[k][c] /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || aug[r][k] == 0) continue;
            const Rational factor = aug[r][k];
            for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= factor * aug[k][c];
        }
    }
    RatMat inv(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
    return inv;
}

inline RatVec mat_apply(const RatMat& M, const RatVec& x) {
    const std::size_t n = M.size();
    RatVec y(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < x.size(); ++c) y[r] += M[r][c] * x[c];
    return y;
}

inline IntVec mat_apply(const IntMat& M, const IntVec& x) {
    const std::size_t n = M.size();
    IntVec y(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < x.size(); ++c) y[r] += M[r][c] * x[c];
    return y;
}

/// Rank of the affine span of a set of integer points.
inline int affine_rank(const std::vector<IntVec>& pts) {
    if (pts.empty()) return -1;
    const std::size_t p = pts[0].size();
    RatMat rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> d(p);
        for (std::size_t r = 0; r < p; ++r) d[r] = Rational(pts[i][r] - pts[0][r]);
        rows.push_back(std::move(d));
    }
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < p; ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t c = col; c < p; ++c) rows[i][c] -= f * rows[r][c];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline IntVec primitive_direction(const IntVec& d) {
    long long g = 0;
    for (long long x : d) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::invalid_argument("zero direction has no primitive form");
    IntVec out(d);
    for (auto& x : out) x /= g;
    return out;
}

}  // namespace altsum

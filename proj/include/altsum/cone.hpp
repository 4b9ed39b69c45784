#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "altsum/multiindex.hpp"
#include "altsum/rational.hpp"
#include "altsum/rational_linalg.hpp"

namespace altsum {

/// Half-open simplicial cone apex + A * R+_J with a sign. Coordinates in
/// strict_mask are strict (> 0), the rest closed (>= 0), in the basis given
/// by the generator columns of A.
struct HalfOpenCone {
    IntVec apex;
    IntMat gens;  // p x p, column i is generator i
    std::uint32_t strict_mask = 0;
    int sign = 1;

    int dim() const { return static_cast<int>(apex.size()); }

    IntVec generator(int i) const {
        IntVec g(apex.size());
        for (std::size_t r = 0; r < apex.size(); ++r) g[r] = gens[r][static_cast<std::size_t>(i)];
        return g;
    }

    Int det() const { return mat_det(gens); }
    bool unimodular() const {
        const Int d = det();
        return d == 1 || d == -1;
    }
};

/// Signed indicator-sum semantics: the list stands for sum_i sign_i [cone_i].
using ConeList = std::vector<HalfOpenCone>;

/// Exact membership: solves A y = x - apex in rationals and checks the
/// half-open coordinate conditions.
inline bool cone_contains(const HalfOpenCone& cone, const RatVec& x) {
    const std::size_t p = cone.apex.size();
    if (x.size() != p) throw std::invalid_argument("point arity mismatch");
    RatVec rhs(p);
    for (std::size_t r = 0; r < p; ++r) rhs[r] = x[r] - Rational(cone.apex[r]);
    const RatVec y = mat_apply(mat_inverse(cone.gens), rhs);
    for (std::size_t i = 0; i < p; ++i) {
        if (cone.strict_mask & (1u << i)) {
            if (!(y[i] > 0)) return false;
        } else {
            if (!(y[i] >= 0)) return false;
        }
    }
    return true;
}

/// The lexicographically smallest nonzero integer vector inside the
/// fundamental parallelepiped {A x : x in [0,1)^p}. Exists whenever
/// |det A| >= 2 (there are exactly |det A| - 1 candidates).
inline IntVec find_splitting_vector(const IntMat& A) {
    const std::size_t p = A.size();
    {
        const Int d = mat_det(A);
        if (d == 0) throw std::invalid_argument("matrix is singular");
        if (d == 1 || d == -1)
            throw std::invalid_argument("splitting vector needs |det| >= 2");
    }
    const RatMat inv = mat_inverse(A);
    // Bounding box of the parallelepiped corners (subset sums of columns).
    IntVec lo(p, 0), hi(p, 0);
    for (std::size_t r = 0; r < p; ++r) {
        long long mn = 0, mx = 0;
        // Corner extremes decompose per column: add negative entries to the
        // minimum and positive ones to the maximum.
        for (std::size_t c = 0; c < p; ++c) {
            if (A[r][c] < 0) mn += A[r][c];
            if (A[r][c] > 0) mx += A[r][c];
        }
        lo[r] = mn;
        hi[r] = mx;
    }
    std::vector<int> ilo(p), ihi(p);
    for (std::size_t r = 0; r < p; ++r) {
        ilo[r] = static_cast<int>(lo[r]);
        ihi[r] = static_cast<int>(hi[r]);
    }
    IntVec found;
    for_each_tuple(ilo, ihi, [&](const std::vector<int>& w) {
        if (!found.empty()) return;
        bool zero = true;
        for (int x : w) zero = zero && (x == 0);
        if (zero) return;
        RatVec wr(p);
        for (std::size_t r = 0; r < p; ++r) wr[r] = Rational(w[r]);
        const RatVec y = mat_apply(inv, wr);
        for (std::size_t r = 0; r < p; ++r)
            if (y[r] < 0 || y[r] >= 1) return;
        found.assign(w.begin(), w.end());
    });
    if (found.empty()) throw InternalError("no splitting vector found; determinant logic is broken");
    return found;
}

/// Assigns open/closed flags to the replacement cones of a refinement step.
/// base[j] in {0,1} is the parent's closure of coordinate j (1 = closed);
/// K lists the coordinates being replaced. Row i (for i in K) gives the
/// closure flags of child i. Checked post-conditions:
///   (i)   rows agree with the parent off K,
///   (ii)  diagonal entries keep the parent's flag,
///   (iii) exactly one of (i,j), (j,i) is closed for distinct i,j in K,
///   (iv)  a closed i dominates: closed(i,j) implies closed parent j on K,
///   (v)   every nonempty subset of K has a row closed on the rest of it.
inline std::map<int, std::vector<int>> closure_assignment(const std::vector<int>& base,
                                                          const std::vector<int>& K) {
    const int p = static_cast<int>(base.size());
    if (K.empty()) throw std::invalid_argument("K must be nonempty");
    for (int j : K)
        if (j < 0 || j >= p) throw std::out_of_range("K entry out of range");

    // Sort K by base flag ascending, ties by index: the "open first" order.
    std::vector<int> order(K);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (base[static_cast<std::size_t>(a)] != base[static_cast<std::size_t>(b)])
            return base[static_cast<std::size_t>(a)] < base[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::map<int, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    std::map<int, std::vector<int>> rows;
    for (int i : K) {
        std::vector<int> row(base);
        for (int j : K) {
            if (j == i) continue;
            row[static_cast<std::size_t>(j)] = pos[i] < pos[j] ? 1 : 0;
        }
        rows[i] = std::move(row);
    }

    // Post-assertions; these must never fire.
    auto fail = [] { throw InternalError("closure assignment violated its conditions"); };
    std::vector<char> inK(static_cast<std::size_t>(p), 0);
    for (int j : K) inK[static_cast<std::size_t>(j)] = 1;
    for (int i : K) {
        const auto& row = rows[i];
        for (int j = 0; j < p; ++j)
            if (!inK[static_cast<std::size_t>(j)] && row[static_cast<std::size_t>(j)] != base[static_cast<std::size_t>(j)]) fail();
        if (row[static_cast<std::size_t>(i)] != base[static_cast<std::size_t>(i)]) fail();
        for (int j : K) {
            if (j == i) continue;
            if (rows[i][static_cast<std::size_t>(j)] + rows[j][static_cast<std::size_t>(i)] != 1) fail();
            if (base[static_cast<std::size_t>(i)] == 1 &&
                rows[i][static_cast<std::size_t>(j)] > base[static_cast<std::size_t>(j)])
                fail();
        }
    }
    const std::size_t k = K.size();
    for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
        bool found = false;
        for (std::size_t a = 0; a < k && !found; ++a) {
            if (!(sub & (1u << a))) continue;
            bool all = true;
            for (std::size_t b = 0; b < k; ++b) {
                if (b == a || !(sub & (1u << b))) continue;
                if (rows[K[a]][static_cast<std::size_t>(K[b])] != 1) all = false;
            }
            found = all;
        }
        if (!found) fail();
    }
    return rows;
}

/// Recursive refinement into unimodular half-open cones with the same apex
/// and sign whose indicators partition the input cone exactly. Each step
/// replaces one generator column by a fundamental-parallelepiped vector,
/// strictly decreasing |det|.
inline ConeList unimodular_refine(const HalfOpenCone& cone) {
    const Int d = cone.det();
    if (d == 0) throw std::invalid_argument("cone generators are singular");
    if (d == 1 || d == -1) return {cone};

    const std::size_t p = cone.apex.size();
    const IntVec w = find_splitting_vector(cone.gens);
    const RatVec wcoords = mat_apply(mat_inverse(cone.gens), [&] {
        RatVec wr(p);
        for (std::size_t r = 0; r < p; ++r) wr[r] = Rational(w[r]);
        return wr;
    }());

    std::vector<int> K;
    for (std::size_t i = 0; i < p; ++i)
        if (wcoords[i] > 0) K.push_back(static_cast<int>(i));

    std::vector<int> base(p);
    for (std::size_t j = 0; j < p; ++j) base[j] = (cone.strict_mask & (1u << j)) ? 0 : 1;

    const auto rows = closure_assignment(base, K);

    ConeList out;
    for (int i : K) {
        HalfOpenCone child;
        child.apex = cone.apex;
        child.sign = cone.sign;
        child.gens = cone.gens;
        for (std::size_t r = 0; r < p; ++r) child.gens[r][static_cast<std::size_t>(i)] = w[r];
        child.strict_mask = 0;
        const auto& row = rows.at(i);
        for (std::size_t j = 0; j < p; ++j)
            if (row[j] == 0) child.strict_mask |= (1u << j);
        const Int cd = child.det();
        if (cd == 0 || abs(cd) >= abs(d))
            throw InternalError("refinement step did not shrink the determinant");
        ConeList sub = unimodular_refine(child);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

/// All lattice points of a unimodular half-open cone inside the integer box
/// [lo, hi]: k = apex + A (l + 1_J) over integer l >= 0, clipped to the box.
inline std::vector<IntVec> cone_lattice_points(const HalfOpenCone& cone, const IntVec& lo,
                                               const IntVec& hi) {
    if (!cone.unimodular())
        throw CapabilityError("lattice enumeration requires a unimodular cone");
    const std::size_t p = cone.apex.size();
    if (lo.size() != p || hi.size() != p) throw std::invalid_argument("box arity mismatch");

    const RatMat inv = mat_inverse(cone.gens);
    // Range of l = A^{-1}(x - apex) - 1_J over the box corners.
    std::vector<Rational> lmin(p), lmax(p);
    bool first = true;
    for (std::uint32_t corner = 0; corner < (1u << p); ++corner) {
        RatVec x(p);
        for (std::size_t r = 0; r < p; ++r)
            x[r] = Rational((corner & (1u << r)) ? hi[r] : lo[r]) - Rational(cone.apex[r]);
        const RatVec y = mat_apply(inv, x);
        for (std::size_t r = 0; r < p; ++r) {
            const Rational l = y[r] - ((cone.strict_mask & (1u << r)) ? 1 : 0);
            if (first || l < lmin[r]) lmin[r] = l;
            if (first || l > lmax[r]) lmax[r] = l;
        }
        first = false;
    }

    std::vector<int> ilo(p), ihi(p);
    for (std::size_t r = 0; r < p; ++r) {
        Int f = numerator(lmin[r]) / denominator(lmin[r]);  // floor toward -inf
        if (numerator(lmin[r]) < 0 && f * denominator(lmin[r]) != numerator(lmin[r])) f -= 1;
        Int c = numerator(lmax[r]) / denominator(lmax[r]);
        if (numerator(lmax[r]) > 0 && c * denominator(lmax[r]) != numerator(lmax[r])) c += 1;
        const long long flo = static_cast<long long>(f);
        ilo[r] = static_cast<int>(std::max<long long>(0, flo));
        ihi[r] = static_cast<int>(static_cast<long long>(c));
        if (ihi[r] < ilo[r]) return {};
    }

    std::vector<IntVec> points;
    for_each_tuple(ilo, ihi, [&](const std::vector<int>& l) {
        IntVec shifted(p);
        for (std::size_t r = 0; r < p; ++r)
            shifted[r] = l[r] + ((cone.strict_mask & (1u << r)) ? 1 : 0);
        IntVec x = mat_apply(cone.gens, shifted);
        for (std::size_t r = 0; r < p; ++r) x[r] += cone.apex[r];
        for (std::size_t r = 0; r < p; ++r)
            if (x[r] < lo[r] || x[r] > hi[r]) return;
        points.push_back(std::move(x));
    });
    return points;
}

}  // namespace altsum

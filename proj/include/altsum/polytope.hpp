#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "altsum/boxcalc.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/cone.hpp"
#include "altsum/parallel.hpp"
#include "altsum/rational_linalg.hpp"

namespace altsum {

/// Full-dimensional lattice polytope given by its integer vertices, with
/// vertex-edge adjacency either supplied or computed.
struct LatticePolytope {
    int dim = 0;
    std::vector<IntVec> vertices;
    std::optional<std::vector<std::vector<int>>> adjacency;
};

namespace detail {

/// Feasibility of { x : a . x >= b } systems by exact Fourier-Motzkin
/// elimination. Each row is (a_1, ..., a_d, b).
inline bool linear_feasible(std::vector<RatVec> rows, int d) {
    auto normalize = [](RatVec& row) {
        Rational scale(0);
        for (const auto& v : row)
            if (v != 0) {
                scale = rat_abs(v);
                break;
            }
        if (scale != 0)
            for (auto& v : row) v /= scale;
    };
    for (int var = d - 1; var >= 0; --var) {
        std::vector<RatVec> pos, neg, rest;
        for (auto& row : rows) {
            const Rational& a = row[static_cast<std::size_t>(var)];
            if (a > 0)
                pos.push_back(std::move(row));
            else if (a < 0)
                neg.push_back(std::move(row));
            else
                rest.push_back(std::move(row));
        }
        std::set<RatVec> seen;
        std::vector<RatVec> next;
        auto push = [&](RatVec row) {
            normalize(row);
            if (seen.insert(row).second) next.push_back(std::move(row));
        };
        for (auto& row : rest) push(std::move(row));
        for (const auto& rp : pos)
            for (const auto& rn : neg) {
                // Cancel x_var: (-a_n) * rp + a_p * rn, both multipliers > 0.
                const Rational mp = -rn[static_cast<std::size_t>(var)];
                const Rational mn = rp[static_cast<std::size_t>(var)];
                RatVec row(static_cast<std::size_t>(d) + 1, Rational(0));
                for (int c = 0; c <= d; ++c)
                    row[static_cast<std::size_t>(c)] = mp * rp[static_cast<std::size_t>(c)] +
                                                       mn * rn[static_cast<std::size_t>(c)];
                row[static_cast<std::size_t>(var)] = 0;
                push(std::move(row));
            }
        rows = std::move(next);
    }
    for (const auto& row : rows)
        if (row[static_cast<std::size_t>(d)] > 0) return false;  // 0 >= b with b > 0
    return true;
}

/// Is there a functional xi with xi.(u - w) >= 1 for all listed w,
/// optionally with xi.(u - v) == 0? Decides vertexhood and edges.
inline bool separating_functional_exists(const std::vector<IntVec>& vertices, std::size_t u,
                                         std::optional<std::size_t> v) {
    const int p = static_cast<int>(vertices[u].size());
    std::vector<RatVec> rows;
    for (std::size_t w = 0; w < vertices.size(); ++w) {
        if (w == u || (v && w == *v)) continue;
        RatVec row(static_cast<std::size_t>(p) + 1, Rational(0));
        for (int r = 0; r < p; ++r) row[static_cast<std::size_t>(r)] = Rational(vertices[u][static_cast<std::size_t>(r)] - vertices[w][static_cast<std::size_t>(r)]);
        row[static_cast<std::size_t>(p)] = 1;  // xi.(u-w) >= 1
        rows.push_back(std::move(row));
    }
    if (v) {
        RatVec eq(static_cast<std::size_t>(p) + 1, Rational(0));
        for (int r = 0; r < p; ++r) eq[static_cast<std::size_t>(r)] = Rational(vertices[u][static_cast<std::size_t>(r)] - vertices[*v][static_cast<std::size_t>(r)]);
        eq[static_cast<std::size_t>(p)] = 0;
        RatVec eq_neg(eq);
        for (auto& x : eq_neg) x = -x;
        rows.push_back(eq);
        rows.push_back(eq_neg);
    }
    return linear_feasible(std::move(rows), p);
}

}  // namespace detail

/// Computes the vertex-edge adjacency by exact feasibility tests. Requires
/// the input to be full-dimensional, in convex position, and simple (every
/// vertex on exactly p edges).
inline LatticePolytope resolve_adjacency(const LatticePolytope& input) {
    LatticePolytope P = input;
    const int p = P.dim;
    if (p < 1) throw DimensionError("polytope dimension must be >= 1");
    for (const auto& v : P.vertices)
        if (static_cast<int>(v.size()) != p) throw std::invalid_argument("vertex arity mismatch");
    if (P.vertices.size() < static_cast<std::size_t>(p) + 1)
        throw DimensionError("too few vertices for a full-dimensional polytope");
    if (affine_rank(P.vertices) != p)
        throw DimensionError("vertices do not span the ambient dimension");

    for (std::size_t u = 0; u < P.vertices.size(); ++u)
        if (!detail::separating_functional_exists(P.vertices, u, std::nullopt))
            throw std::invalid_argument("vertex " + std::to_string(u) +
                                        " lies in the convex hull of the others");

    if (P.adjacency) {
        // Trust but verify the shape.
        if (P.adjacency->size() != P.vertices.size())
            throw std::invalid_argument("adjacency list arity mismatch");
    } else {
        std::vector<std::vector<int>> adj(P.vertices.size());
        for (std::size_t u = 0; u < P.vertices.size(); ++u)
            for (std::size_t v = u + 1; v < P.vertices.size(); ++v)
                if (detail::separating_functional_exists(P.vertices, u, v)) {
                    adj[u].push_back(static_cast<int>(v));
                    adj[v].push_back(static_cast<int>(u));
                }
        P.adjacency = std::move(adj);
    }

    for (std::size_t u = 0; u < P.vertices.size(); ++u)
        if (static_cast<int>((*P.adjacency)[u].size()) != p)
            throw UnsupportedPolytopeError(
                "vertex " + std::to_string(u) + " meets " +
                std::to_string((*P.adjacency)[u].size()) + " edges, not " + std::to_string(p) +
                ": only simple polytopes are supported");
    return P;
}

/// Signed half-open unimodular vertex-cone decomposition of the indicator.
struct SignedDecomposition {
    ConeList cones;
    IntVec xi;  ///< the generic direction used
};

inline int signed_indicator(const SignedDecomposition& d, const RatVec& x) {
    int s = 0;
    for (const auto& cone : d.cones)
        if (cone_contains(cone, x)) s += cone.sign;
    return s;
}

namespace detail {

inline std::vector<IntVec> primitive_edge_directions(const LatticePolytope& P) {
    std::vector<IntVec> dirs;
    const auto& adj = *P.adjacency;
    for (std::size_t u = 0; u < P.vertices.size(); ++u)
        for (int vi : adj[u]) {
            IntVec d(P.vertices[u].size());
            for (std::size_t r = 0; r < d.size(); ++r)
                d[r] = P.vertices[static_cast<std::size_t>(vi)][r] - P.vertices[u][r];
            dirs.push_back(primitive_direction(d));
        }
    return dirs;
}

inline bool generic_for(const IntVec& xi, const std::vector<IntVec>& dirs) {
    for (const auto& d : dirs) {
        Int dot = 0;
        for (std::size_t r = 0; r < d.size(); ++r) dot += Int(xi[r]) * d[r];
        if (dot == 0) return false;
    }
    return true;
}

}  // namespace detail

/// Vertex tangent cones polarized against a generic direction xi: edge
/// directions with xi . d < 0 are flipped and made strict, the sign is
/// (-1)^{#flips}; each cone is then refined to unimodular ones. The signed
/// indicators sum to the indicator of P pointwise.
inline SignedDecomposition vertex_cones(const LatticePolytope& input,
                                        std::optional<IntVec> xi = std::nullopt,
                                        std::uint64_t seed = 20240801u) {
    LatticePolytope P = resolve_adjacency(input);
    const int p = P.dim;
    const auto dirs = detail::primitive_edge_directions(P);

    IntVec direction;
    if (xi) {
        if (static_cast<int>(xi->size()) != p) throw std::invalid_argument("xi arity mismatch");
        direction = *xi;
    } else {
        long long maxabs = 1;
        for (const auto& d : dirs)
            for (long long e : d) maxabs = std::max(maxabs, e < 0 ? -e : e);
        direction.assign(static_cast<std::size_t>(p), 0);
        long long scale = 1;
        for (int r = 0; r < p; ++r) {
            direction[static_cast<std::size_t>(r)] = scale;
            scale *= 2 * maxabs + 2;
        }
    }
    std::mt19937_64 rng(seed);
    int budget = 1000;
    while (!detail::generic_for(direction, dirs)) {
        if (--budget < 0) throw RandomnessError("could not draw a generic direction");
        std::uniform_int_distribution<long long> dist(-1000, 1000);
        for (auto& e : direction) e = dist(rng);
    }

    SignedDecomposition out;
    out.xi = direction;
    const auto& adj = *P.adjacency;
    for (std::size_t u = 0; u < P.vertices.size(); ++u) {
        HalfOpenCone cone;
        cone.apex = P.vertices[u];
        cone.gens.assign(static_cast<std::size_t>(p), IntVec(static_cast<std::size_t>(p), 0));
        cone.strict_mask = 0;
        int flips = 0;
        for (int i = 0; i < p; ++i) {
            const int vi = adj[u][static_cast<std::size_t>(i)];
            IntVec d(static_cast<std::size_t>(p));
            for (int r = 0; r < p; ++r)
                d[static_cast<std::size_t>(r)] =
                    P.vertices[static_cast<std::size_t>(vi)][static_cast<std::size_t>(r)] -
                    P.vertices[u][static_cast<std::size_t>(r)];
            d = primitive_direction(d);
            Int dot = 0;
            for (int r = 0; r < p; ++r) dot += Int(direction[static_cast<std::size_t>(r)]) * d[static_cast<std::size_t>(r)];
            if (dot < 0) {
                for (auto& e : d) e = -e;
                cone.strict_mask |= (1u << i);
                ++flips;
            }
            for (int r = 0; r < p; ++r) cone.gens[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(r)];
        }
        cone.sign = (flips % 2 == 0) ? 1 : -1;
        if (cone.det() == 0)
            throw InternalError("vertex cone generators are singular; adjacency is wrong");
        ConeList refined = unimodular_refine(cone);
        out.cones.insert(out.cones.end(), refined.begin(), refined.end());
    }
    return out;
}

/// Integer bounding box of the vertex set.
inline std::pair<IntVec, IntVec> bounding_box(const LatticePolytope& P) {
    const std::size_t p = static_cast<std::size_t>(P.dim);
    IntVec lo(p), hi(p);
    for (std::size_t r = 0; r < p; ++r) {
        lo[r] = hi[r] = P.vertices[0][r];
        for (const auto& v : P.vertices) {
            lo[r] = std::min(lo[r], v[r]);
            hi[r] = std::max(hi[r], v[r]);
        }
    }
    return {lo, hi};
}

/// Lattice point count via the signed cone decomposition: contributions
/// outside P cancel inside the bounding box.
inline long long count_lattice_points(const LatticePolytope& P,
                                      const SignedDecomposition* decomp = nullptr) {
    SignedDecomposition local;
    if (!decomp) {
        local = vertex_cones(P);
        decomp = &local;
    }
    const auto [lo, hi] = bounding_box(P);
    long long total = 0;
    for (const auto& cone : decomp->cones)
        total += cone.sign * static_cast<long long>(cone_lattice_points(cone, lo, hi).size());
    return total;
}

/// Facet half-spaces (normal . x <= offset) recovered from the vertices:
/// hyperplanes through p affinely independent vertices that support the
/// whole vertex set.
inline std::vector<std::pair<RatVec, Rational>> facet_halfspaces(const LatticePolytope& P) {
    const int p = P.dim;
    const auto& V = P.vertices;
    if (p == 1) {
        long long lo = V[0][0], hi = V[0][0];
        for (const auto& v : V) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return {{{Rational(1)}, Rational(hi)}, {{Rational(-1)}, Rational(-lo)}};
    }
    std::set<std::vector<Rational>> seen;
    std::vector<std::pair<RatVec, Rational>> facets;
    std::vector<int> idx(static_cast<std::size_t>(p));
    // Iterate p-subsets of vertices.
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int chosen) {
        if (chosen == p) {
            // Normal: solve (v_i - v_0) . n = 0 for the p-1 differences.
            RatMat rows;
            for (int i = 1; i < p; ++i) {
                RatVec d(static_cast<std::size_t>(p));
                for (int r = 0; r < p; ++r)
                    d[static_cast<std::size_t>(r)] =
                        Rational(V[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])][static_cast<std::size_t>(r)] -
                                 V[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(r)]);
                rows.push_back(std::move(d));
            }
            // Gaussian elimination to find a null vector.
            RatMat m = rows;
            std::vector<int> pivot_col(m.size(), -1);
            std::size_t rank = 0;
            for (int col = 0; col < p && rank < m.size(); ++col) {
                std::size_t piv = rank;
                while (piv < m.size() && m[piv][static_cast<std::size_t>(col)] == 0) ++piv;
                if (piv == m.size()) continue;
                std::swap(m[rank], m[piv]);
                const Rational pv = m[rank][static_cast<std::size_t>(col)];
                for (auto& x : m[rank]) x /= pv;
                for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
                    if (r2 == rank || m[r2][static_cast<std::size_t>(col)] == 0) continue;
                    const Rational f = m[r2][static_cast<std::size_t>(col)];
                    for (int c = 0; c < p; ++c) m[r2][static_cast<std::size_t>(c)] -= f * m[rank][static_cast<std::size_t>(c)];
                }
                pivot_col[rank] = col;
                ++rank;
            }
            if (rank == static_cast<std::size_t>(p - 1)) {
                // One free column: set it to 1, back-substitute.
                std::vector<char> is_pivot(static_cast<std::size_t>(p), 0);
                for (std::size_t r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[r])] = 1;
                int free_col = 0;
                while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
                RatVec normal(static_cast<std::size_t>(p), Rational(0));
                normal[static_cast<std::size_t>(free_col)] = 1;
                for (std::size_t r = 0; r < rank; ++r)
                    normal[static_cast<std::size_t>(pivot_col[r])] = -m[r][static_cast<std::size_t>(free_col)];
                // Offset and side check.
                Rational c0(0);
                for (int r = 0; r < p; ++r)
                    c0 += normal[static_cast<std::size_t>(r)] * Rational(V[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(r)]);
                bool any_above = false, any_below = false;
                for (const auto& v : V) {
                    Rational s(0);
                    for (int r = 0; r < p; ++r) s += normal[static_cast<std::size_t>(r)] * Rational(v[static_cast<std::size_t>(r)]);
                    if (s > c0) any_above = true;
                    if (s < c0) any_below = true;
                }
                if (!(any_above && any_below)) {
                    RatVec n = normal;
                    Rational c = c0;
                    if (any_above) {  // flip so the polytope satisfies n.x <= c
                        for (auto& x : n) x = -x;
                        c = -c;
                    }
                    // Canonical scale for dedup.
                    Rational scale(0);
                    for (const auto& x : n)
                        if (x != 0) {
                            scale = rat_abs(x);
                            break;
                        }
                    std::vector<Rational> key;
                    for (const auto& x : n) key.push_back(x / scale);
                    key.push_back(c / scale);
                    if (seen.insert(key).second) facets.emplace_back(std::move(n), std::move(c));
                }
            }
            return;
        }
        for (std::size_t i = start; i + (static_cast<std::size_t>(p) - chosen) <= V.size(); ++i) {
            idx[static_cast<std::size_t>(chosen)] = static_cast<int>(i);
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);
    return facets;
}

inline bool polytope_contains(const std::vector<std::pair<RatVec, Rational>>& facets,
                              const RatVec& x) {
    for (const auto& [n, c] : facets) {
        Rational s(0);
        for (std::size_t r = 0; r < x.size(); ++r) s += n[r] * x[r];
        if (s > c) return false;
    }
    return true;
}

/// Brute-force lattice point count over the bounding box via exact facet
/// membership; the independent oracle for the cone path.
inline long long count_lattice_points_brute(const LatticePolytope& P,
                                            long long cap = 10'000'000LL) {
    const auto facets = facet_halfspaces(P);
    const auto [lo, hi] = bounding_box(P);
    const std::size_t p = static_cast<std::size_t>(P.dim);
    long long volume = 1;
    for (std::size_t r = 0; r < p; ++r) {
        const long long len = hi[r] - lo[r] + 1;
        if (volume > cap / std::max<long long>(len, 1)) throw SizeError("bounding box too large");
        volume *= len;
    }
    std::vector<int> ilo(p), ihi(p);
    for (std::size_t r = 0; r < p; ++r) {
        ilo[r] = static_cast<int>(lo[r]);
        ihi[r] = static_cast<int>(hi[r]);
    }
    long long count = 0;
    RatVec x(p);
    for_each_tuple(ilo, ihi, [&](const std::vector<int>& k) {
        for (std::size_t r = 0; r < p; ++r) x[r] = Rational(k[r]);
        if (polytope_contains(facets, x)) ++count;
    });
    return count;
}

/// Brute-force sum of f over the lattice points of P.
inline double exact_polytope_sum(const LatticePolytope& P, const RealFn& f,
                                 long long cap = 10'000'000LL) {
    const auto facets = facet_halfspaces(P);
    const auto [lo, hi] = bounding_box(P);
    const std::size_t p = static_cast<std::size_t>(P.dim);
    long long volume = 1;
    for (std::size_t r = 0; r < p; ++r) {
        const long long len = hi[r] - lo[r] + 1;
        if (volume > cap / std::max<long long>(len, 1)) throw SizeError("bounding box too large");
        volume *= len;
    }
    std::vector<int> ilo(p), ihi(p);
    for (std::size_t r = 0; r < p; ++r) {
        ilo[r] = static_cast<int>(lo[r]);
        ihi[r] = static_cast<int>(hi[r]);
    }
    double total = 0.0;
    RatVec x(p);
    Point xd(p);
    for_each_tuple(ilo, ihi, [&](const std::vector<int>& k) {
        for (std::size_t r = 0; r < p; ++r) x[r] = Rational(k[r]);
        if (!polytope_contains(facets, x)) return;
        for (std::size_t r = 0; r < p; ++r) xd[r] = static_cast<double>(k[r]);
        total += f(xd);
    });
    return total;
}

/// Integral approximation of sum_{k in P} f(k) for compactly supported f:
/// tau-weighted, per-cone shifted half-open cone integrals, each truncated
/// to the support box mapped through the (unimodular) generator inverse in
/// exact rationals, then evaluated by tensor quadrature.
inline double polytope_alt_sum(const LatticePolytope& P, const RealFn& f, const RatVec& support_lo,
                               const RatVec& support_hi, int m, const QuadratureConfig& cfg = {},
                               const SignedDecomposition* decomp = nullptr) {
    if (m < 1) throw std::invalid_argument("order m must be >= 1");
    const int p = P.dim;
    if (static_cast<int>(support_lo.size()) != p || static_cast<int>(support_hi.size()) != p)
        throw CapabilityError("polytope_alt_sum needs the support box of f");
    SignedDecomposition local;
    if (!decomp) {
        local = vertex_cones(P);
        decomp = &local;
    }
    const CoefficientTable& table = gamma_table(m);

    struct Task {
        Rational weight;  // tau * sign
        RatVec lo, hi;    // z-box, exact
        const HalfOpenCone* cone;
    };
    std::vector<Task> tasks;

    for_each_tuple(std::vector<int>(static_cast<std::size_t>(p), 1 - m),
                   std::vector<int>(static_cast<std::size_t>(p), m - 1), [&](const std::vector<int>& beta) {
                       MultiIndex jj(static_cast<std::size_t>(p));
                       for (int r = 0; r < p; ++r)
                           jj[static_cast<std::size_t>(r)] = 1 + std::abs(beta[static_cast<std::size_t>(r)]);
                       const Rational tau = tau_of(table, jj);
                       for (const auto& cone : decomp->cones) {
                           // z ranges over [1_J - (1+beta)/2, inf) intersected with
                           // the bounding box of A^{-1}(support - apex).
                           const RatMat inv = mat_inverse(cone.gens);
                           RatVec zlo(static_cast<std::size_t>(p)), zhi(static_cast<std::size_t>(p));
                           bool first = true;
                           for (std::uint32_t corner = 0; corner < (1u << p); ++corner) {
                               RatVec s(static_cast<std::size_t>(p));
                               for (int r = 0; r < p; ++r)
                                   s[static_cast<std::size_t>(r)] =
                                       ((corner & (1u << r)) ? support_hi[static_cast<std::size_t>(r)]
                                                             : support_lo[static_cast<std::size_t>(r)]) -
                                       Rational(cone.apex[static_cast<std::size_t>(r)]);
                               const RatVec z = mat_apply(inv, s);
                               for (int r = 0; r < p; ++r) {
                                   if (first || z[static_cast<std::size_t>(r)] < zlo[static_cast<std::size_t>(r)])
                                       zlo[static_cast<std::size_t>(r)] = z[static_cast<std::size_t>(r)];
                                   if (first || z[static_cast<std::size_t>(r)] > zhi[static_cast<std::size_t>(r)])
                                       zhi[static_cast<std::size_t>(r)] = z[static_cast<std::size_t>(r)];
                               }
                               first = false;
                           }
                           bool empty = false;
                           for (int r = 0; r < p; ++r) {
                               const Rational shift =
                                   Rational((cone.strict_mask & (1u << r)) ? 1 : 0) -
                                   (Rational(1) + Rational(beta[static_cast<std::size_t>(r)])) / 2;
                               if (shift > zlo[static_cast<std::size_t>(r)]) zlo[static_cast<std::size_t>(r)] = shift;
                               if (zhi[static_cast<std::size_t>(r)] <= zlo[static_cast<std::size_t>(r)]) empty = true;
                           }
                           if (empty) continue;
                           tasks.push_back(Task{tau * Rational(cone.sign), zlo, zhi, &cone});
                       }
                   });

    const auto values = parallel_map<double>(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        const std::size_t pp = static_cast<std::size_t>(p);
        const auto& A = t.cone->gens;
        const auto& apex = t.cone->apex;
        auto integrand = [&](const Point& z) {
            Point x(pp);
            for (std::size_t r = 0; r < pp; ++r) {
                double v = static_cast<double>(apex[r]);
                for (std::size_t c = 0; c < pp; ++c) v += static_cast<double>(A[r][c]) * z[c];
                x[r] = v;
            }
            return f(x);
        };
        return to_double(t.weight) *
               integrate_box_plain(integrand, to_double(t.lo), to_double(t.hi), cfg);
    });
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

/// Diagnostic only: the signed sum of shifted-cone indicators that plays
/// the role of a perturbed indicator of P for one shift orbit |beta| =
/// alpha. No bound on its support is claimed anywhere.
inline int perturbed_indicator(const SignedDecomposition& decomp, const MultiIndex& alpha,
                               const RatVec& x) {
    const int p = static_cast<int>(alpha.size());
    int total = 0;
    std::vector<int> beta(alpha.begin(), alpha.end());
    auto visit = [&](auto&& self, int r) -> void {
        if (r == p) {
            for (const auto& cone : decomp.cones) {
                // membership of x in cone + A (1_J - (1+beta)/2)
                RatVec rhs(static_cast<std::size_t>(p));
                for (int q = 0; q < p; ++q)
                    rhs[static_cast<std::size_t>(q)] = x[static_cast<std::size_t>(q)] - Rational(cone.apex[static_cast<std::size_t>(q)]);
                const RatVec y = mat_apply(mat_inverse(cone.gens), rhs);
                bool inside = true;
                for (int q = 0; q < p; ++q) {
                    const Rational shift = Rational((cone.strict_mask & (1u << q)) ? 1 : 0) -
                                           (Rational(1) + Rational(beta[static_cast<std::size_t>(q)])) / 2;
                    const Rational yq = y[static_cast<std::size_t>(q)] - shift;
                    if (cone.strict_mask & (1u << q)) {
                        if (!(yq > 0)) inside = false;
                    } else {
                        if (!(yq >= 0)) inside = false;
                    }
                }
                if (inside) total += cone.sign;
            }
            return;
        }
        beta[static_cast<std::size_t>(r)] = alpha[static_cast<std::size_t>(r)];
        self(self, r + 1);
        if (alpha[static_cast<std::size_t>(r)] != 0) {
            beta[static_cast<std::size_t>(r)] = -alpha[static_cast<std::size_t>(r)];
            self(self, r + 1);
            beta[static_cast<std::size_t>(r)] = alpha[static_cast<std::size_t>(r)];
        }
    };
    visit(visit, 0);
    return total;
}

}  // namespace altsum

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "altsum/alt_formula.hpp"
#include "altsum/bounds.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/polynomial.hpp"

namespace altsum {

namespace detail {

/// Visits the tau stencil: every beta in {1-m..m-1}^p with its tau weight,
/// handing over the evaluation point n*1_J - 1/2 - beta/2.
template <typename PointMaker, typename Sink>
inline void visit_tau_stencil(int m, int p, PointMaker&& point_of, Sink&& sink) {
    const CoefficientTable& table = gamma_table(m);
    for_each_tuple(std::vector<int>(static_cast<std::size_t>(p), 1 - m),
                   std::vector<int>(static_cast<std::size_t>(p), m - 1), [&](const std::vector<int>& beta) {
                       MultiIndex jj(static_cast<std::size_t>(p));
                       for (int r = 0; r < p; ++r)
                           jj[static_cast<std::size_t>(r)] = 1 + std::abs(beta[static_cast<std::size_t>(r)]);
                       sink(tau_of(table, jj), point_of(beta));
                   });
}

}  // namespace detail

/// Tau-weighted antiderivative stencil with the coordinates outside J
/// pinned to zero: evaluates F at the points n*1_J - 1/2 - beta/2 over the
/// (2m-1)^p stencil. Independent of the n-coordinates outside J.
inline double antiderivative_stencil(const RealFn& F, int m, const std::vector<long long>& n,
                                     std::uint32_t J) {
    if (m < 1) throw std::invalid_argument("order m must be >= 1");
    const int p = static_cast<int>(n.size());
    double total = 0.0;
    detail::visit_tau_stencil(
        m, p,
        [&](const std::vector<int>& beta) {
            Point x(static_cast<std::size_t>(p));
            for (int r = 0; r < p; ++r) {
                const double nj = (J & (1u << r)) ? static_cast<double>(n[static_cast<std::size_t>(r)]) : 0.0;
                x[static_cast<std::size_t>(r)] = nj - 0.5 - 0.5 * beta[static_cast<std::size_t>(r)];
            }
            return x;
        },
        [&](const Rational& w, const Point& x) {
            const double v = F(x);
            if (!std::isfinite(v)) throw EvalError("antiderivative returned a non-finite value");
            total += to_double(w) * v;
        });
    return total;
}

inline Rational antiderivative_stencil_exact(const RationalPolynomial& F, int m,
                                             const std::vector<long long>& n, std::uint32_t J) {
    if (m < 1) throw std::invalid_argument("order m must be >= 1");
    const int p = F.dim();
    if (p != static_cast<int>(n.size())) throw std::invalid_argument("polynomial/n dimension mismatch");
    Rational total(0);
    const Rational half(1, 2);
    detail::visit_tau_stencil(
        m, p,
        [&](const std::vector<int>& beta) {
            RatVec x(static_cast<std::size_t>(p));
            for (int r = 0; r < p; ++r) {
                const Rational nj = (J & (1u << r)) ? Rational(n[static_cast<std::size_t>(r)]) : Rational(0);
                x[static_cast<std::size_t>(r)] = nj - half - half * Rational(beta[static_cast<std::size_t>(r)]);
            }
            return x;
        },
        [&](const Rational& w, const RatVec& x) { total += w * F.eval(x); });
    return total;
}

/// Alternating combination of stencils over the nonempty subsets of [p]:
/// the finite-part correction subtracted from a partial sum.
inline double tail_correction(const RealFn& F, int m, const std::vector<long long>& n) {
    const int p = static_cast<int>(n.size());
    double total = 0.0;
    for (std::uint32_t J = 1; J <= full_mask(p); ++J) {
        const int sign = ((p - popcount_mask(J)) % 2 == 0) ? 1 : -1;
        total += sign * antiderivative_stencil(F, m, n, J);
    }
    return total;
}

inline Rational tail_correction_exact(const RationalPolynomial& F, int m,
                                      const std::vector<long long>& n) {
    const int p = F.dim();
    Rational total(0);
    for (std::uint32_t J = 1; J <= full_mask(p); ++J) {
        const int sign = ((p - popcount_mask(J)) % 2 == 0) ? 1 : -1;
        total += Rational(sign) * antiderivative_stencil_exact(F, m, n, J);
    }
    return total;
}

struct SeriesResult {
    double value = 0.0;                    ///< partial_sum - correction
    std::vector<long long> shift;          ///< the c vector used
    double partial_sum = 0.0;              ///< sum_{k < c} f(k)
    double correction = 0.0;               ///< tail correction at c
    std::optional<double> remainder_bound; ///< (2^p - 1) * coarse bound, if M2m given
};

/// Generalized sum of a possibly divergent multi-index series: the partial
/// sum up to c minus the tail correction at c. The caller is responsible
/// for the decay/uniform-convergence hypotheses on F; this routine cannot
/// verify them. The omitted remainder is reported only as a bound, and only
/// when the caller certifies M2m (which must cover the shifted tails).
inline SeriesResult generalized_sum(const FieldSpec& f, const RealFn& F, int m, int m0,
                                    const std::vector<long long>& c,
                                    std::optional<double> M2m = std::nullopt,
                                    long long cap = 10'000'000LL) {
    if (m0 < 1 || m < m0) throw std::invalid_argument("orders must satisfy 1 <= m0 <= m");
    const int p = static_cast<int>(c.size());
    if (f.dim != p) throw std::invalid_argument("field/shift dimension mismatch");
    for (long long cr : c)
        if (cr < 0) throw std::invalid_argument("shift entries must be >= 0");

    SeriesResult res;
    res.shift = c;
    bool empty = false;
    for (long long cr : c)
        if (cr == 0) empty = true;
    res.partial_sum = empty ? 0.0 : exact_sum(f, c, cap);
    res.correction = tail_correction(F, m, c);
    res.value = res.partial_sum - res.correction;
    if (M2m) res.remainder_bound = ((1 << p) - 1) * bound_coarse(m, p, *M2m, m >= 2);
    return res;
}

/// Exact path for polynomial fields; the remainder vanishes identically
/// when the total degree is at most 2m-1, so the result is exact.
inline Rational generalized_sum_exact(const RationalPolynomial& f, const RationalPolynomial& F,
                                      int m, int m0, const std::vector<long long>& c,
                                      long long cap = 10'000'000LL) {
    if (m0 < 1 || m < m0) throw std::invalid_argument("orders must satisfy 1 <= m0 <= m");
    bool empty = false;
    for (long long cr : c) {
        if (cr < 0) throw std::invalid_argument("shift entries must be >= 0");
        if (cr == 0) empty = true;
    }
    const Rational partial = empty ? Rational(0) : exact_sum_exact(f, c, cap);
    return partial - tail_correction_exact(F, m, c);
}

/// Values of the generalized sum at several shifts; under the decay
/// hypotheses the spread shrinks as the smallest shift grows.
inline std::vector<std::pair<std::vector<long long>, double>> shift_scan(
    const FieldSpec& f, const RealFn& F, int m, int m0,
    const std::vector<std::vector<long long>>& shifts, long long cap = 10'000'000LL) {
    std::vector<std::pair<std::vector<long long>, double>> out;
    out.reserve(shifts.size());
    for (const auto& c : shifts)
        out.emplace_back(c, generalized_sum(f, F, m, m0, c, std::nullopt, cap).value);
    return out;
}

/// HEURISTIC decay diagnostic: samples central finite-difference proxies of
/// the order-2m0 partials of F at points t*dir along a ray and reports the
/// largest magnitude at the far end. Small values are consistent with the
/// decay hypothesis; this is not a proof and is never treated as one.
inline double decay_diagnostic(const RealFn& F, int m0, int p, const std::vector<double>& dir,
                               double t_far = 32.0, double h = 0.5) {
    if (static_cast<int>(dir.size()) != p) throw std::invalid_argument("direction arity mismatch");
    double worst = 0.0;
    for (const MultiIndex& alpha : compositions(2 * m0, p)) {
        // Central differences per axis, tensorized.
        std::function<double(Point, int)> diff = [&](Point x, int axis) -> double {
            if (axis == p) return F(x);
            double acc = 0.0;
            const int order = alpha[static_cast<std::size_t>(axis)];
            for (int i = 0; i <= order; ++i) {
                const double coeff = to_double(Rational(binomial(order, i))) * ((order - i) % 2 == 0 ? 1.0 : -1.0);
                Point y = x;
                y[static_cast<std::size_t>(axis)] += (i - order / 2.0) * h;
                acc += coeff * diff(y, axis + 1);
            }
            return acc / std::pow(h, order);
        };
        Point far(static_cast<std::size_t>(p));
        for (int r = 0; r < p; ++r) far[static_cast<std::size_t>(r)] = t_far * dir[static_cast<std::size_t>(r)];
        worst = std::max(worst, std::abs(diff(far, 0)));
    }
    return worst;
}

}  // namespace altsum

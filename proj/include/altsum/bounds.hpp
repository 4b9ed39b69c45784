#pragma once

#include <cmath>
#include <stdexcept>

#include "altsum/alt_formula.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/multiindex.hpp"

namespace altsum {

struct EnvelopePeak {
    double t = 0.0;
    double value = 0.0;
};

/// Maximum over (0,1) of Lambda(t) = (1-t)^{t-1} (1+t)^{-1-t} t^2, found by
/// golden-section search; Lambda is evaluated in log space.
inline EnvelopePeak lambda_star() {
    auto log_lambda = [](double t) {
        return (t - 1.0) * std::log1p(-t) - (1.0 + t) * std::log1p(t) + 2.0 * std::log(t);
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 1e-6, b = 1.0 - 1e-6;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = log_lambda(c), fd = log_lambda(d);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = log_lambda(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = log_lambda(d);
        }
    }
    EnvelopePeak peak;
    peak.t = 0.5 * (a + b);
    peak.value = std::exp(log_lambda(peak.t));
    return peak;
}

/// kappa = sqrt(lambda_star / 4); the per-axis rate in the coarse bound.
inline double kappa() {
    static const double k = std::sqrt(lambda_star().value / 4.0);
    return k;
}

/// Tight remainder bound: M_{2m}/2^{2m} times the exact combinatorial sum
/// over all |alpha| = 2m of sum_j |gamma_j| j^{alpha+1} / (alpha+1)!.
inline double bound_tight(const CoefficientTable& table, int p, double M2m) {
    if (p < 1) throw std::invalid_argument("dimension must be >= 1");
    if (M2m < 0) throw std::invalid_argument("M2m must be >= 0");
    const int m = table.m;
    // Per-axis sums G_t = sum_j |gamma_j| j^t for the exponents that occur.
    std::vector<Rational> G(static_cast<std::size_t>(2 * m + 2), Rational(0));
    for (int t = 1; t <= 2 * m + 1; ++t) {
        Rational s(0);
        for (int j = 1; j <= m; ++j)
            s += rat_abs(table.gamma_at(j)) * Rational(int_pow(Int(j), static_cast<unsigned>(t)));
        G[static_cast<std::size_t>(t)] = s;
    }
    Rational sum(0);
    for (const MultiIndex& alpha : compositions(2 * m, p)) {
        Rational term(1);
        for (int ar : alpha) term *= G[static_cast<std::size_t>(ar + 1)] / Rational(factorial(ar + 1));
        sum += term;
    }
    sum /= Rational(int_pow(Int(2), static_cast<unsigned>(2 * m)));
    return M2m * to_double(sum);
}

/// Coarse closed-form bound M * factor * (pi m)^{(p+1)/2} / (2m+1)! *
/// (kappa p m)^{2m}; the 1.001 factor needs m >= 2.
inline double bound_coarse(int m, int p, double M2m, bool strict_factor = false) {
    if (m < 1 || p < 1) throw std::invalid_argument("m and p must be >= 1");
    if (M2m < 0) throw std::invalid_argument("M2m must be >= 0");
    if (strict_factor && m < 2)
        throw std::invalid_argument("the 1.001 factor requires m >= 2");
    const double factor = strict_factor ? 1.001 : 1.0331;
    const double num = factor * std::pow(M_PI * m, (p + 1) / 2.0) *
                       std::pow(kappa() * p * m, 2.0 * m);
    return M2m * num / to_double(Rational(factorial(2 * m + 1)));
}

struct BoundReport {
    int m = 1;
    int p = 1;
    double M2m = 0.0;
    double tight_bound = 0.0;
    double coarse_bound = 0.0;
    double factor = 1.0331;
};

inline BoundReport make_bound_report(int m, int p, double M2m, bool strict_factor = false) {
    BoundReport r;
    r.m = m;
    r.p = p;
    r.M2m = M2m;
    r.tight_bound = bound_tight(gamma_table(m), p, M2m);
    r.coarse_bound = bound_coarse(m, p, M2m, strict_factor);
    r.factor = strict_factor ? 1.001 : 1.0331;
    return r;
}

/// HEURISTIC, not a certificate: samples |sum_k f^{(alpha)}(k+u)| over a
/// uniform u-grid in the closed shift box [-m/2, m/2]^p and returns the
/// largest value seen. The true M_{2m} is a supremum over a continuum of
/// shifts; use an analytically derived bound for any rigorous claim.
inline double m2m_grid_estimate(const FieldSpec& f, int m, const std::vector<long long>& n,
                                int grid_per_axis = 9) {
    const int p = static_cast<int>(n.size());
    if (f.dim != p) throw std::invalid_argument("field/n dimension mismatch");
    if (!f.has_derivative_oracle()) throw CapabilityError("m2m estimate needs a derivative oracle");
    if (grid_per_axis < 2) throw std::invalid_argument("grid must have >= 2 points per axis");

    double best = 0.0;
    Point x(static_cast<std::size_t>(p));
    for (const MultiIndex& alpha : compositions(2 * m, p)) {
        const RealFn deriv = f.derivative_oracle(alpha);
        std::vector<int> lo(static_cast<std::size_t>(p), 0), hi(static_cast<std::size_t>(p), grid_per_axis - 1);
        for_each_tuple(lo, hi, [&](const std::vector<int>& g) {
            Point u(static_cast<std::size_t>(p));
            for (int r = 0; r < p; ++r)
                u[static_cast<std::size_t>(r)] =
                    -0.5 * m + static_cast<double>(m) * g[static_cast<std::size_t>(r)] / (grid_per_axis - 1);
            double s = 0.0;
            std::vector<long long> k(static_cast<std::size_t>(p), 0);
            bool any = true;
            for (long long nr : n)
                if (nr == 0) any = false;
            while (any) {
                for (int r = 0; r < p; ++r)
                    x[static_cast<std::size_t>(r)] =
                        static_cast<double>(k[static_cast<std::size_t>(r)]) + u[static_cast<std::size_t>(r)];
                s += deriv(x);
                std::size_t r = static_cast<std::size_t>(p);
                bool done = true;
                while (r > 0) {
                    --r;
                    if (++k[r] < n[r]) {
                        done = false;
                        break;
                    }
                    k[r] = 0;
                }
                if (done) break;
            }
            best = std::max(best, std::abs(s));
        });
    }
    return best;
}

}  // namespace altsum

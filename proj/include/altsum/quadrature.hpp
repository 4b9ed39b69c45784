#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "altsum/errors.hpp"

namespace altsum {

struct QuadratureConfig {
    int nodes_per_panel = 8;
    int panels_per_unit = 2;
    double refinement_tolerance = 1e-10;
    int max_doublings = 8;

    void validate() const {
        if (nodes_per_panel < 1 || panels_per_unit < 1 || !(refinement_tolerance > 0))
            throw std::invalid_argument("quadrature config entries must be positive");
    }
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Newton iteration on Legendre polynomials; cached per order.
inline const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
    static std::mutex mu;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess for the i-th root.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n and its derivative by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    // n == 1 needs the closed form (the recurrence above starts at degree 2).
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

/// Composite tensor-product Gauss-Legendre over the axis-aligned box
/// [lo, hi] with per-axis panel counts. Summation order is fixed.
inline double tensor_gauss(const std::function<double(const std::vector<double>&)>& f,
                           const std::vector<double>& lo, const std::vector<double>& hi,
                           int nodes_per_panel, const std::vector<int>& panels) {
    const std::size_t p = lo.size();
    const GaussLegendreRule& rule = gauss_legendre(nodes_per_panel);
    const int nn = nodes_per_panel;

    // Per-axis flattened node/weight lists over all panels.
    std::vector<std::vector<double>> axis_nodes(p), axis_weights(p);
    for (std::size_t r = 0; r < p; ++r) {
        const int np = panels[r];
        const double h = (hi[r] - lo[r]) / np;
        axis_nodes[r].reserve(static_cast<std::size_t>(np) * nn);
        axis_weights[r].reserve(static_cast<std::size_t>(np) * nn);
        for (int panel = 0; panel < np; ++panel) {
            const double a = lo[r] + panel * h;
            const double mid = a + 0.5 * h, half = 0.5 * h;
            for (int i = 0; i < nn; ++i) {
                axis_nodes[r].push_back(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
                axis_weights[r].push_back(half * rule.weights[static_cast<std::size_t>(i)]);
            }
        }
    }

    std::vector<std::size_t> idx(p, 0);
    std::vector<double> x(p);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (std::size_t r = 0; r < p; ++r) {
            x[r] = axis_nodes[r][idx[r]];
            w *= axis_weights[r][idx[r]];
        }
        const double v = f(x);
        if (!std::isfinite(v)) throw EvalError("integrand returned a non-finite value");
        total += w * v;
        std::size_t r = p;
        bool done = true;
        while (r > 0) {
            --r;
            if (++idx[r] < axis_nodes[r].size()) {
                done = false;
                break;
            }
            idx[r] = 0;
        }
        if (done) break;
    }
    return total;
}

/// Integral of f over the axis-aligned box [lo, hi] (lo <= hi entrywise),
/// refined by panel doubling until two successive values agree within
/// cfg.refinement_tolerance.
inline double integrate_box_plain(const std::function<double(const std::vector<double>&)>& f,
                                  const std::vector<double>& lo, const std::vector<double>& hi,
                                  const QuadratureConfig& cfg) {
    cfg.validate();
    const std::size_t p = lo.size();
    std::vector<int> panels(p);
    for (std::size_t r = 0; r < p; ++r) {
        const double len = hi[r] - lo[r];
        if (len == 0.0) return 0.0;
        panels[r] = std::max(1, static_cast<int>(std::ceil(len * cfg.panels_per_unit)));
    }
    double prev = tensor_gauss(f, lo, hi, cfg.nodes_per_panel, panels);
    for (int d = 0; d < cfg.max_doublings; ++d) {
        for (auto& n : panels) n *= 2;
        const double next = tensor_gauss(f, lo, hi, cfg.nodes_per_panel, panels);
        if (std::abs(next - prev) < cfg.refinement_tolerance) return next;
        prev = next;
    }
    std::vector<int> finer(panels);
    for (auto& n : finer) n *= 2;
    const double last = tensor_gauss(f, lo, hi, cfg.nodes_per_panel, finer);
    if (std::abs(last - prev) < cfg.refinement_tolerance) return last;
    throw ToleranceError("quadrature did not converge within the doubling budget", prev, last);
}

}  // namespace altsum

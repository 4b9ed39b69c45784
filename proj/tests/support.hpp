#pragma once

// Shared helpers for tests: a C-infinity plateau bump with controllable
// support, and a crude finite-difference bound on its derivative sizes.

#include <cmath>
#include <functional>
#include <vector>

namespace testsupport {

// phi(u) = exp(-1/u) for u > 0, else 0; the classic smooth step built from
// it is identically 0 for u <= 0 and 1 for u >= 1.
inline double smooth_phi(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

inline double smooth_step(double u) {
    const double a = smooth_phi(u);
    const double b = smooth_phi(1.0 - u);
    return a / (a + b);
}

/// 1 on [lo + ramp, hi - ramp], 0 outside [lo, hi], C-infinity everywhere.
inline double plateau(double t, double lo, double hi, double ramp) {
    return smooth_step((t - lo) / ramp) * smooth_step((hi - t) / ramp);
}

/// Tensor plateau bump on R^p.
inline std::function<double(const std::vector<double>&)> plateau_bump(int p, double lo, double hi,
                                                                      double ramp) {
    return [=](const std::vector<double>& x) {
        double v = 1.0;
        for (int r = 0; r < p; ++r) v *= plateau(x[static_cast<std::size_t>(r)], lo, hi, ramp);
        return v;
    };
}

/// Max |d^k/dt^k plateau| over a fine grid, by iterated central differences
/// in long double. Rough but adequate as an upper-bound ingredient once
/// multiplied by a safety margin.
inline double plateau_derivative_max(int k, double lo, double hi, double ramp) {
    const long double h = 0.02L;
    auto f = [=](long double t) -> long double {
        return static_cast<long double>(plateau(static_cast<double>(t), lo, hi, ramp));
    };
    std::function<long double(long double, int)> d = [&](long double t, int order) -> long double {
        if (order == 0) return f(t);
        return (d(t + h / 2, order - 1) - d(t - h / 2, order - 1)) / h;
    };
    long double best = 0.0L;
    for (long double t = lo; t <= hi; t += 0.05L) {
        const long double v = d(t, k) < 0 ? -d(t, k) : d(t, k);
        if (v > best) best = v;
    }
    return static_cast<double>(best);
}

}  // namespace testsupport

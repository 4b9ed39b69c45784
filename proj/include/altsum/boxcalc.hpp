#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/multiindex.hpp"
#include "altsum/quadrature.hpp"

namespace altsum {

using Point = std::vector<double>;
using RealFn = std::function<double(const Point&)>;

/// Axis-aligned box with the signed convention: lower_r > upper_r flips the
/// sign of integrals over that axis, no ordering is required.
struct BoxDomain {
    Point lower;
    Point upper;

    int dim() const { return static_cast<int>(lower.size()); }

    void validate() const {
        if (lower.size() != upper.size()) throw std::invalid_argument("box corner arity mismatch");
        for (std::size_t r = 0; r < lower.size(); ++r)
            if (!std::isfinite(lower[r]) || !std::isfinite(upper[r]))
                throw std::invalid_argument("box corners must be finite");
    }
};

/// An evaluatable scalar field on R^p, optionally with an antiderivative F
/// (mixed partial in every variable equals the field) and a derivative
/// oracle mapping a multi-index to the corresponding partial derivative.
struct FieldSpec {
    int dim = 1;
    RealFn eval;
    RealFn antiderivative;                                  // optional
    std::function<RealFn(const MultiIndex&)> derivative_oracle;  // optional

    bool has_antiderivative() const { return static_cast<bool>(antiderivative); }
    bool has_derivative_oracle() const { return static_cast<bool>(derivative_oracle); }
};

namespace detail {
inline std::string point_to_string(const Point& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    return os.str();
}
}  // namespace detail

/// Signed box integral of f via its antiderivative F: the alternating sum
/// of F over the 2^p corners u + (v-u)1_J with sign (-1)^{p-|J|}.
/// Corners are visited in Gray-code order so each step moves one coordinate.
inline double integrate_ftc(const RealFn& F, const BoxDomain& box) {
    box.validate();
    const std::size_t p = box.lower.size();
    Point corner(box.lower);   // J = empty set
    int sign = (p % 2 == 0) ? 1 : -1;  // (-1)^{p-0}
    std::uint32_t mask = 0;
    double total = 0.0;
    const std::uint32_t count = 1u << p;
    for (std::uint32_t g = 0;; ++g) {
        const double val = F(corner);
        if (!std::isfinite(val))
            throw EvalError("antiderivative returned a non-finite value at corner " +
                            detail::point_to_string(corner));
        total += sign * val;
        if (g + 1 == count) break;
        // Gray code: flip the lowest bit position of g+1.
        std::uint32_t next = (g + 1) ^ ((g + 1) >> 1);
        std::uint32_t flipped = mask ^ next;
        std::size_t r = 0;
        while (!(flipped & (1u << r))) ++r;
        mask = next;
        corner[r] = (mask & (1u << r)) ? box.upper[r] : box.lower[r];
        sign = -sign;
    }
    return total;
}

/// Signed box integral of f by composite tensor Gauss-Legendre with a
/// panel-doubling convergence check.
inline double integrate_quad(const FieldSpec& f, const BoxDomain& box, const QuadratureConfig& cfg) {
    box.validate();
    if (f.dim != box.dim()) throw std::invalid_argument("field/box dimension mismatch");
    const std::size_t p = box.lower.size();
    Point lo(p), hi(p);
    int sign = 1;
    for (std::size_t r = 0; r < p; ++r) {
        if (box.lower[r] > box.upper[r]) {
            lo[r] = box.upper[r];
            hi[r] = box.lower[r];
            sign = -sign;
        } else {
            lo[r] = box.lower[r];
            hi[r] = box.upper[r];
        }
        if (lo[r] == hi[r]) return 0.0;
    }
    return sign * integrate_box_plain(f.eval, lo, hi, cfg);
}

/// FTC path when an antiderivative is available (unless forced off),
/// quadrature otherwise.
inline double integrate_box(const FieldSpec& f, const BoxDomain& box, const QuadratureConfig& cfg,
                            bool force_quad = false) {
    if (f.has_antiderivative() && !force_quad) return integrate_ftc(f.antiderivative, box);
    return integrate_quad(f, box, cfg);
}

}  // namespace altsum

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "altsum/boxcalc.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/multiindex.hpp"
#include "altsum/parallel.hpp"
#include "altsum/polynomial.hpp"
#include "altsum/rational.hpp"

namespace altsum {

/// The six equivalent ways of arranging the integral approximation.
/// "left" variants use boxes symmetric about (n-1)/2; "right" variants use
/// boxes whose upper and lower corners differ exactly by n.
enum class AltForm {
    gamma_left,
    gamma_right,
    tau_symmetric_left,
    tau_symmetric_right,
    tau_grouped_left,
    tau_grouped_right,
};

inline const char* form_name(AltForm f) {
    switch (f) {
        case AltForm::gamma_left: return "gamma-left";
        case AltForm::gamma_right: return "gamma-right";
        case AltForm::tau_symmetric_left: return "tau-symmetric-left";
        case AltForm::tau_symmetric_right: return "tau-symmetric-right";
        case AltForm::tau_grouped_left: return "tau-grouped-left";
        case AltForm::tau_grouped_right: return "tau-grouped-right";
    }
    return "?";
}

inline AltForm form_from_name(const std::string& s) {
    for (AltForm f : {AltForm::gamma_left, AltForm::gamma_right, AltForm::tau_symmetric_left,
                      AltForm::tau_symmetric_right, AltForm::tau_grouped_left, AltForm::tau_grouped_right})
        if (s == form_name(f)) return f;
    throw std::invalid_argument("unknown form id: " + s);
}

/// One weighted box. Corners are exact rationals (always half-integers),
/// so the exact corner-sum path loses nothing.
struct PlanTerm {
    Rational weight;
    RatVec lower;
    RatVec upper;

    BoxDomain box() const { return BoxDomain{to_double(lower), to_double(upper)}; }
};

struct IntegralPlan {
    AltForm form = AltForm::tau_grouped_right;
    int dim = 0;
    std::vector<PlanTerm> terms;

    Rational weight_sum() const {
        Rational s(0);
        for (const auto& t : terms) s += t.weight;
        return s;
    }
};

/// Weighted box list realizing the integral approximation of
/// sum_{k=0}^{n-1} f(k) at order m. If any n_r = 0 the sum is empty and so
/// is the plan.
inline IntegralPlan build_plan(int m, const std::vector<long long>& n, AltForm form) {
    if (m < 1) throw std::invalid_argument("order m must be >= 1");
    if (n.empty()) throw std::invalid_argument("n must have at least one entry");
    for (long long nr : n)
        if (nr < 0) throw std::invalid_argument("n entries must be >= 0");

    const int p = static_cast<int>(n.size());
    IntegralPlan plan;
    plan.form = form;
    plan.dim = p;
    for (long long nr : n)
        if (nr == 0) return plan;  // empty-sum convention

    const CoefficientTable& table = gamma_table(m);
    const Rational half(1, 2);

    auto add_term = [&](const Rational& w, RatVec lo, RatVec hi) {
        plan.terms.push_back(PlanTerm{w, std::move(lo), std::move(hi)});
    };

    switch (form) {
        case AltForm::gamma_left:
        case AltForm::gamma_right: {
            const bool left = (form == AltForm::gamma_left);
            for_each_tuple(std::vector<int>(p, 1), std::vector<int>(p, m), [&](const std::vector<int>& j) {
                const Rational w = gamma_of(table, j);
                std::vector<int> ilo(p, 0), ihi(p);
                for (int r = 0; r < p; ++r) ihi[r] = j[r] - 1;
                for_each_tuple(ilo, ihi, [&](const std::vector<int>& i) {
                    RatVec lo(p), hi(p);
                    for (int r = 0; r < p; ++r) {
                        const Rational jh = Rational(j[r]) * half;
                        hi[r] = Rational(n[r] - 1) + jh - i[r];
                        lo[r] = left ? Rational(i[r]) - jh : Rational(-1) + jh - i[r];
                    }
                    add_term(w, std::move(lo), std::move(hi));
                });
            });
            break;
        }
        case AltForm::tau_symmetric_left:
        case AltForm::tau_symmetric_right: {
            const bool left = (form == AltForm::tau_symmetric_left);
            for_each_tuple(std::vector<int>(p, 1 - m), std::vector<int>(p, m - 1),
                           [&](const std::vector<int>& beta) {
                               MultiIndex jj(p);
                               for (int r = 0; r < p; ++r) jj[r] = 1 + std::abs(beta[r]);
                               const Rational w = tau_of(table, jj);
                               RatVec lo(p), hi(p);
                               for (int r = 0; r < p; ++r) {
                                   const Rational bh = Rational(beta[r]) * half;
                                   hi[r] = Rational(n[r]) - half - bh;
                                   lo[r] = left ? Rational(bh - half) : Rational(-half - bh);
                               }
                               add_term(w, std::move(lo), std::move(hi));
                           });
            break;
        }
        case AltForm::tau_grouped_left:
        case AltForm::tau_grouped_right: {
            const bool left = (form == AltForm::tau_grouped_left);
            for_each_tuple(std::vector<int>(p, 0), std::vector<int>(p, m - 1),
                           [&](const std::vector<int>& alpha) {
                               MultiIndex jj(p);
                               for (int r = 0; r < p; ++r) jj[r] = 1 + alpha[r];
                               const Rational w = tau_of(table, jj);
                               // Expand the sign orbit {beta : |beta| = alpha}.
                               std::vector<int> beta(alpha.begin(), alpha.end());
                               auto emit = [&](auto&& self, int r) -> void {
                                   if (r == p) {
                                       RatVec lo(p), hi(p);
                                       for (int q = 0; q < p; ++q) {
                                           const Rational bh = Rational(beta[q]) * half;
                                           hi[q] = Rational(n[q]) - half - bh;
                                           lo[q] = left ? Rational(bh - half) : Rational(-half - bh);
                                       }
                                       add_term(w, std::move(lo), std::move(hi));
                                       return;
                                   }
                                   beta[r] = alpha[r];
                                   self(self, r + 1);
                                   if (alpha[r] != 0) {
                                       beta[r] = -alpha[r];
                                       self(self, r + 1);
                                       beta[r] = alpha[r];
                                   }
                               };
                               emit(emit, 0);
                           });
            break;
        }
    }
    return plan;
}

struct AltResult {
    double approximation = 0.0;
    std::optional<double> exact_sum;
    std::optional<double> residual;  // exact_sum - approximation
};

/// FieldSpec view of a rational polynomial: evaluation, the iterated
/// antiderivative, and an exact derivative oracle.
inline FieldSpec field_from_polynomial(const RationalPolynomial& poly) {
    FieldSpec f;
    f.dim = poly.dim();
    f.eval = [poly](const Point& x) { return poly.eval(x); };
    const RationalPolynomial anti = poly.antiderivative_all();
    f.antiderivative = [anti](const Point& x) { return anti.eval(x); };
    f.derivative_oracle = [poly](const MultiIndex& alpha) -> RealFn {
        const RationalPolynomial d = poly.partial(alpha);
        return [d](const Point& x) { return d.eval(x); };
    };
    return f;
}

/// Integral approximation of the multiple sum; FTC path when the field has
/// an antiderivative (unless force_quad), tensor quadrature otherwise.
/// Term contributions are reduced in plan order for determinism.
inline AltResult evaluate_alt(const FieldSpec& f, int m, const std::vector<long long>& n, AltForm form,
                              const QuadratureConfig& cfg = {}, bool force_quad = false) {
    if (f.dim != static_cast<int>(n.size())) throw std::invalid_argument("field/n dimension mismatch");
    const IntegralPlan plan = build_plan(m, n, form);
    const auto values = parallel_map<double>(plan.terms.size(), [&](std::size_t i) {
        const PlanTerm& t = plan.terms[i];
        return to_double(t.weight) * integrate_box(f, t.box(), cfg, force_quad);
    });
    AltResult res;
    for (double v : values) res.approximation += v;
    return res;
}

/// Exact-rational approximation for polynomial fields: every plan corner is
/// a half-integer, so corner sums of the polynomial antiderivative are
/// evaluated exactly.
inline Rational evaluate_alt_exact(const RationalPolynomial& antiderivative, int m,
                                   const std::vector<long long>& n, AltForm form) {
    const int p = antiderivative.dim();
    if (p != static_cast<int>(n.size())) throw std::invalid_argument("polynomial/n dimension mismatch");
    const IntegralPlan plan = build_plan(m, n, form);
    Rational total(0);
    RatVec corner(static_cast<std::size_t>(p));
    for (const PlanTerm& t : plan.terms) {
        Rational box_integral(0);
        for (std::uint32_t J = 0; J < (1u << p); ++J) {
            for (int r = 0; r < p; ++r)
                corner[static_cast<std::size_t>(r)] = (J & (1u << r)) ? t.upper[static_cast<std::size_t>(r)]
                                                                      : t.lower[static_cast<std::size_t>(r)];
            const int sign = ((p - popcount_mask(J)) % 2 == 0) ? 1 : -1;
            box_integral += Rational(sign) * antiderivative.eval(corner);
        }
        total += t.weight * box_integral;
    }
    return total;
}

/// Plain iterated sum over k in [0, n-1]^p, deterministic lexicographic order.
inline double exact_sum(const FieldSpec& f, const std::vector<long long>& n,
                        long long cap = 10'000'000LL) {
    if (f.dim != static_cast<int>(n.size())) throw std::invalid_argument("field/n dimension mismatch");
    long long count = 1;
    for (long long nr : n) {
        if (nr < 0) throw std::invalid_argument("n entries must be >= 0");
        if (nr == 0) return 0.0;
        if (count > cap / std::max<long long>(nr, 1)) throw SizeError("exact_sum: lattice too large");
        count *= nr;
    }
    const std::size_t p = n.size();
    std::vector<long long> k(p, 0);
    Point x(p);
    double s = 0.0;
    while (true) {
        for (std::size_t r = 0; r < p; ++r) x[r] = static_cast<double>(k[r]);
        s += f.eval(x);
        std::size_t r = p;
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
    return s;
}

/// Exact lattice sum of a rational polynomial.
inline Rational exact_sum_exact(const RationalPolynomial& f, const std::vector<long long>& n,
                                long long cap = 10'000'000LL) {
    const std::size_t p = n.size();
    if (f.dim() != static_cast<int>(p)) throw std::invalid_argument("polynomial/n dimension mismatch");
    long long count = 1;
    for (long long nr : n) {
        if (nr < 0) throw std::invalid_argument("n entries must be >= 0");
        if (nr == 0) return Rational(0);
        if (count > cap / std::max<long long>(nr, 1)) throw SizeError("exact_sum: lattice too large");
        count *= nr;
    }
    std::vector<long long> k(p, 0);
    RatVec x(p);
    Rational s(0);
    while (true) {
        for (std::size_t r = 0; r < p; ++r) x[r] = Rational(k[r]);
        s += f.eval(x);
        std::size_t r = p;
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
    return s;
}

/// Direct numerical evaluation of the order-2m remainder: the approximation
/// minus the exact sum, computed from the derivative side. Needs every
/// partial derivative of total order 2m. Cost grows fast, hence the guard.
inline double remainder_direct(const FieldSpec& f, int m, const std::vector<long long>& n,
                               const QuadratureConfig& cfg = {}) {
    (void)cfg;  // the inner rules are pinned (32-node s, 8-node/2-panel v)
    const int p = static_cast<int>(n.size());
    if (f.dim != p) throw std::invalid_argument("field/n dimension mismatch");
    if (!f.has_derivative_oracle())
        throw CapabilityError("remainder_direct needs a derivative oracle");
    if (p > 3 || m > 3) throw CapabilityError("remainder_direct supports p <= 3 and m <= 3 only");
    if (m < 1) throw std::invalid_argument("order m must be >= 1");
    for (long long nr : n)
        if (nr <= 0) return 0.0;

    const CoefficientTable& table = gamma_table(m);
    const auto alphas = compositions(2 * m, p);

    // s-quadrature: 32-node Gauss-Legendre on [0,1] with weight (1-s)^{2m-1}.
    const GaussLegendreRule& srule = gauss_legendre(32);
    std::vector<double> s_nodes, s_weights;
    for (std::size_t i = 0; i < srule.nodes.size(); ++i) {
        const double s = 0.5 + 0.5 * srule.nodes[i];
        s_nodes.push_back(s);
        s_weights.push_back(0.5 * srule.weights[i] * std::pow(1.0 - s, 2 * m - 1));
    }

    // v-quadrature: tensor 8-node rule, 2 panels per axis on [-1,1].
    const GaussLegendreRule& vrule = gauss_legendre(8);
    std::vector<double> v_nodes, v_weights;
    for (int panel = 0; panel < 2; ++panel) {
        const double a = -1.0 + panel;
        for (std::size_t i = 0; i < vrule.nodes.size(); ++i) {
            v_nodes.push_back(a + 0.5 + 0.5 * vrule.nodes[i]);
            v_weights.push_back(0.5 * vrule.weights[i]);
        }
    }
    const std::size_t vn = v_nodes.size();

    // All j-tuples in {1..m}^p with their gamma products.
    std::vector<MultiIndex> jlist;
    for_each_tuple(std::vector<int>(p, 1), std::vector<int>(p, m),
                   [&](const std::vector<int>& j) { jlist.push_back(j); });

    const double prefactor = static_cast<double>(m) / std::pow(2.0, 2 * m + p - 1);

    const auto per_alpha = parallel_map<double>(alphas.size(), [&](std::size_t ai) {
        const MultiIndex& alpha = alphas[ai];
        const RealFn deriv = f.derivative_oracle(alpha);
        // gamma_j * j^{alpha+1} per j-tuple.
        std::vector<double> jfactor(jlist.size());
        for (std::size_t ji = 0; ji < jlist.size(); ++ji) {
            double w = to_double(gamma_of(table, jlist[ji]));
            for (int r = 0; r < p; ++r)
                w *= std::pow(static_cast<double>(jlist[ji][static_cast<std::size_t>(r)]),
                              alpha[static_cast<std::size_t>(r)] + 1);
            jfactor[ji] = w;
        }

        std::vector<std::size_t> vidx(static_cast<std::size_t>(p), 0);
        Point x(static_cast<std::size_t>(p));
        double acc = 0.0;
        while (true) {
            double vw = 1.0, vpow = 1.0;
            for (int r = 0; r < p; ++r) {
                const double vr = v_nodes[vidx[static_cast<std::size_t>(r)]];
                vw *= v_weights[vidx[static_cast<std::size_t>(r)]];
                vpow *= std::pow(vr, alpha[static_cast<std::size_t>(r)]);
            }
            for (std::size_t si = 0; si < s_nodes.size(); ++si) {
                const double s = s_nodes[si];
                double inner = 0.0;
                for (std::size_t ji = 0; ji < jlist.size(); ++ji) {
                    const MultiIndex& j = jlist[ji];
                    // sum over the lattice of shifted derivative values
                    double lat = 0.0;
                    std::vector<long long> k(static_cast<std::size_t>(p), 0);
                    while (true) {
                        for (int r = 0; r < p; ++r)
                            x[static_cast<std::size_t>(r)] =
                                static_cast<double>(k[static_cast<std::size_t>(r)]) +
                                s * j[static_cast<std::size_t>(r)] * v_nodes[vidx[static_cast<std::size_t>(r)]] / 2.0;
                        lat += deriv(x);
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
                    inner += jfactor[ji] * lat;
                }
                acc += s_weights[si] * vw * vpow * inner;
            }
            std::size_t r = static_cast<std::size_t>(p);
            bool done = true;
            while (r > 0) {
                --r;
                if (++vidx[r] < vn) {
                    done = false;
                    break;
                }
                vidx[r] = 0;
            }
            if (done) break;
        }
        return acc / to_double(Rational(mi_factorial(alpha)));
    });

    double total = 0.0;
    for (double v : per_alpha) total += v;
    return prefactor * total;
}

/// Classical one-dimensional Euler-Maclaurin approximation with Bernoulli
/// endpoint corrections up to order 2m-1, for benchmarking.
inline double em_sum_1d(const FieldSpec& f, int m, long long n) {
    if (f.dim != 1) throw CapabilityError("em_sum_1d applies to one-dimensional fields only");
    if (!f.has_antiderivative()) throw CapabilityError("em_sum_1d needs an antiderivative");
    if (m < 1) throw std::invalid_argument("order m must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n == 0) return 0.0;
    if (m > 1 && !f.has_derivative_oracle())
        throw CapabilityError("em_sum_1d needs a derivative oracle for m > 1");

    const Point x0{0.0}, xn{static_cast<double>(n)};
    double value = f.antiderivative(xn) - f.antiderivative(x0);
    Int fact = 1;
    for (int j = 1; j <= 2 * m - 1; ++j) {
        fact *= j;
        const Rational bj = bernoulli(j);
        if (bj == 0) continue;
        const RealFn deriv = (j == 1) ? f.eval : f.derivative_oracle(MultiIndex{j - 1});
        value += to_double(bj / Rational(fact)) * (deriv(xn) - deriv(x0));
    }
    return value;
}

}  // namespace altsum

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "altsum/alt_formula.hpp"

using namespace altsum;

namespace {

const std::vector<AltForm> kAllForms = {
    AltForm::gamma_left,        AltForm::gamma_right,        AltForm::tau_symmetric_left,
    AltForm::tau_symmetric_right, AltForm::tau_grouped_left, AltForm::tau_grouped_right,
};

RationalPolynomial random_polynomial(std::mt19937& rng, int p, int max_total_degree) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> keep(0, 9);
    RationalPolynomial poly(p);
    std::vector<int> e(static_cast<std::size_t>(p), 0);
    // walk all exponent tuples with sum <= max_total_degree
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == p) {
            if (keep(rng) < 4) {
                const int c = coeff(rng);
                if (c != 0) poly.add_term(e, Rational(c));
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
            e[static_cast<std::size_t>(pos)] = 0;
        }
    };
    rec(rec, 0, max_total_degree);
    if (poly.is_zero()) poly.add_term(std::vector<int>(static_cast<std::size_t>(p), 0), Rational(1));
    return poly;
}

}  // namespace

TEST_CASE("plan shapes and stated example") {
    // m=1: single term with weight 1 and box [-1/2, n-1/2], all forms
    for (AltForm form : kAllForms) {
        const auto plan = build_plan(1, {4, 7}, form);
        REQUIRE(plan.terms.size() == 1);
        CHECK(plan.terms[0].weight == Rational(1));
        CHECK(plan.terms[0].lower == RatVec{Rational(-1, 2), Rational(-1, 2)});
        CHECK(plan.terms[0].upper == RatVec{Rational(7, 2), Rational(13, 2)});
    }

    // m=2, p=1, n=3, tau-symmetric-left: weights (-1/6, 4/3, -1/6) on
    // [-1,3], [-1/2,5/2], [0,2]
    const auto plan = build_plan(2, {3}, AltForm::tau_symmetric_left);
    REQUIRE(plan.terms.size() == 3);
    CHECK(plan.terms[0].weight == Rational(-1, 6));
    CHECK(plan.terms[0].lower == RatVec{Rational(-1)});
    CHECK(plan.terms[0].upper == RatVec{Rational(3)});
    CHECK(plan.terms[1].weight == Rational(4, 3));
    CHECK(plan.terms[1].lower == RatVec{Rational(-1, 2)});
    CHECK(plan.terms[1].upper == RatVec{Rational(5, 2)});
    CHECK(plan.terms[2].weight == Rational(-1, 6));
    CHECK(plan.terms[2].lower == RatVec{Rational(0)});
    CHECK(plan.terms[2].upper == RatVec{Rational(2)});

    // empty-sum convention
    CHECK(build_plan(2, {0, 4}, AltForm::tau_grouped_right).terms.empty());

    CHECK_THROWS_AS(build_plan(0, {3}, AltForm::gamma_left), std::invalid_argument);
    CHECK_THROWS_AS(build_plan(1, {-1}, AltForm::gamma_left), std::invalid_argument);
}

TEST_CASE("plan invariants: weight sum, term counts, box geometry") {
    for (int m = 1; m <= 4; ++m)
        for (int p = 1; p <= 2; ++p) {
            std::vector<long long> n(static_cast<std::size_t>(p), 3 + m);
            for (AltForm form : kAllForms) {
                const auto plan = build_plan(m, n, form);
                CHECK(plan.weight_sum() == Rational(1));

                std::size_t expected = 0;
                if (form == AltForm::gamma_left || form == AltForm::gamma_right) {
                    expected = 1;
                    for (int r = 0; r < p; ++r) expected *= static_cast<std::size_t>(m * (m + 1) / 2);
                } else {
                    expected = 1;
                    for (int r = 0; r < p; ++r) expected *= static_cast<std::size_t>(2 * m - 1);
                }
                CHECK(plan.terms.size() == expected);

                const bool left = form == AltForm::gamma_left || form == AltForm::tau_symmetric_left ||
                                  form == AltForm::tau_grouped_left;
                for (const auto& t : plan.terms)
                    for (int r = 0; r < p; ++r) {
                        if (left)  // symmetric about (n-1)/2
                            CHECK(t.lower[static_cast<std::size_t>(r)] + t.upper[static_cast<std::size_t>(r)] ==
                                  Rational(n[static_cast<std::size_t>(r)] - 1));
                        else  // upper - lower = n
                            CHECK(t.upper[static_cast<std::size_t>(r)] - t.lower[static_cast<std::size_t>(r)] ==
                                  Rational(n[static_cast<std::size_t>(r)]));
                    }
            }
        }
}

TEST_CASE("exact sums of lattice samples") {
    FieldSpec fx{1, [](const Point& x) { return x[0]; }, nullptr, nullptr};
    CHECK(exact_sum(fx, {5}) == 10.0);
    FieldSpec one{2, [](const Point&) { return 1.0; }, nullptr, nullptr};
    CHECK(exact_sum(one, {3, 4}) == 12.0);
    FieldSpec fxy{2, [](const Point& x) { return x[0] * x[1]; }, nullptr, nullptr};
    CHECK(exact_sum(fxy, {3, 3}) == 9.0);
    CHECK(exact_sum(fxy, {0, 3}) == 0.0);
    CHECK_THROWS_AS(exact_sum(one, {100000, 1000}, 10'000'000), SizeError);
}

TEST_CASE("stated evaluation examples") {
    // f(x) = x^2, m=2, n=3: exactly 5 via the FTC path
    auto f = RationalPolynomial::variable(1, 0).pow(2);
    const auto res = evaluate_alt(field_from_polynomial(f), 2, {3}, AltForm::tau_symmetric_left);
    CHECK(res.approximation == Catch::Approx(5.0).margin(1e-12));
    CHECK(evaluate_alt_exact(f.antiderivative_all(), 2, {3}, AltForm::tau_symmetric_left) == Rational(5));

    // f(x,y) = x^2 y + y^3, m=2, n=(5,4): equals the brute-force double sum
    auto x = RationalPolynomial::variable(2, 0), y = RationalPolynomial::variable(2, 1);
    auto g = x.pow(2) * y + y.pow(3);
    const Rational brute = exact_sum_exact(g, {5, 4});
    CHECK(evaluate_alt_exact(g.antiderivative_all(), 2, {5, 4}, AltForm::tau_grouped_right) == brute);

    // f = 1, m=3, n=(2,2): weights sum to 1, every box integral is 4
    FieldSpec one{2, [](const Point&) { return 1.0; }, nullptr, nullptr};
    const auto r1 = evaluate_alt(one, 3, {2, 2}, AltForm::tau_grouped_right);
    CHECK(r1.approximation == Catch::Approx(4.0).margin(1e-9));

    // empty dimension
    const auto r0 = evaluate_alt(one, 3, {0, 2}, AltForm::tau_grouped_right);
    CHECK(r0.approximation == 0.0);
}

TEST_CASE("six forms agree") {
    // exactly, on a random polynomial via the rational path
    std::mt19937 rng(777);
    for (int trial = 0; trial < 5; ++trial) {
        const int p = 1 + trial % 2;
        auto poly = random_polynomial(rng, p, 4);
        auto F = poly.antiderivative_all();
        std::vector<long long> n(static_cast<std::size_t>(p), 2 + trial);
        const Rational first = evaluate_alt_exact(F, 3, n, kAllForms[0]);
        for (AltForm form : kAllForms) CHECK(evaluate_alt_exact(F, 3, n, form) == first);
    }

    // within 10x quadrature tolerance on a smooth non-polynomial
    QuadratureConfig cfg;
    FieldSpec f{1, [](const Point& x) { return std::exp(-x[0] * x[0] / 4.0); }, nullptr, nullptr};
    const double first = evaluate_alt(f, 2, {4}, kAllForms[0], cfg).approximation;
    for (AltForm form : kAllForms) {
        const double v = evaluate_alt(f, 2, {4}, form, cfg).approximation;
        CHECK(std::abs(v - first) < 10 * cfg.refinement_tolerance);
    }
}

TEST_CASE("polynomial exactness across p and m") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> nval(1, 6);
    for (int trial = 0; trial < 12; ++trial) {
        const int p = 1 + trial % 3;
        const int m = 1 + (trial / 3) % 3;
        auto poly = random_polynomial(rng, p, 2 * m - 1);
        auto F = poly.antiderivative_all();
        std::vector<long long> n(static_cast<std::size_t>(p));
        for (auto& v : n) v = nval(rng);
        CHECK(evaluate_alt_exact(F, m, n, AltForm::tau_grouped_right) == exact_sum_exact(poly, n));
    }
}

TEST_CASE("remainder vanishes for low-degree polynomials") {
    auto x = RationalPolynomial::variable(2, 0), y = RationalPolynomial::variable(2, 1);
    auto poly = x.pow(2) * y + y.pow(3) - x * Rational(3);  // total degree 3 <= 2m-1 for m=2
    const double r = remainder_direct(field_from_polynomial(poly), 2, {3, 2});
    CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("remainder matches the identity for exponentials") {
    // p = 1, f = e^x
    FieldSpec f1;
    f1.dim = 1;
    f1.eval = [](const Point& x) { return std::exp(x[0]); };
    f1.antiderivative = f1.eval;
    f1.derivative_oracle = [&](const MultiIndex&) -> RealFn {
        return [](const Point& x) { return std::exp(x[0]); };
    };
    const double a1 = evaluate_alt(f1, 1, {2}, AltForm::tau_grouped_right).approximation;
    const double s1 = exact_sum(f1, {2});
    const double r1 = remainder_direct(f1, 1, {2});
    CHECK(a1 - s1 == Catch::Approx(r1).margin(1e-8));

    // p = 2, f = e^{x+y}
    FieldSpec f2;
    f2.dim = 2;
    f2.eval = [](const Point& x) { return std::exp(x[0] + x[1]); };
    f2.antiderivative = f2.eval;
    f2.derivative_oracle = [&](const MultiIndex&) -> RealFn {
        return [](const Point& x) { return std::exp(x[0] + x[1]); };
    };
    const double a2 = evaluate_alt(f2, 1, {2, 2}, AltForm::tau_grouped_right).approximation;
    const double s2 = exact_sum(f2, {2, 2});
    const double r2 = remainder_direct(f2, 1, {2, 2});
    CHECK(a2 - s2 == Catch::Approx(r2).margin(1e-7));
}

TEST_CASE("remainder guards") {
    FieldSpec f{1, [](const Point& x) { return x[0]; }, nullptr, nullptr};
    CHECK_THROWS_AS(remainder_direct(f, 1, {2}), CapabilityError);  // no oracle
    auto poly = RationalPolynomial::variable(1, 0);
    auto field = field_from_polynomial(poly);
    CHECK_THROWS_AS(remainder_direct(field, 4, {2}), CapabilityError);  // m too big
}

TEST_CASE("euler-maclaurin baseline") {
    auto x = RationalPolynomial::variable(1, 0);
    CHECK(em_sum_1d(field_from_polynomial(x), 1, 5) == Catch::Approx(10.0).margin(1e-12));
    CHECK(em_sum_1d(field_from_polynomial(RationalPolynomial::constant(1, Rational(1))), 2, 4) ==
          Catch::Approx(4.0).margin(1e-12));
    CHECK(em_sum_1d(field_from_polynomial(x.pow(3)), 2, 3) == Catch::Approx(9.0).margin(1e-12));

    FieldSpec f2{2, [](const Point& x_) { return x_[0]; }, nullptr, nullptr};
    CHECK_THROWS_AS(em_sum_1d(f2, 1, 3), CapabilityError);
}

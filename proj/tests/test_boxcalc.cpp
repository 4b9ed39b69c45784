#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "altsum/boxcalc.hpp"

using namespace altsum;

TEST_CASE("FTC corner sums") {
    // p=2, F(x,y) = xy on [0,1]^2
    RealFn Fxy = [](const Point& x) { return x[0] * x[1]; };
    CHECK(integrate_ftc(Fxy, BoxDomain{{0, 0}, {1, 1}}) == 1.0);

    // p=1, F = x^3/3 on [-1,3]
    RealFn Fcube = [](const Point& x) { return x[0] * x[0] * x[0] / 3.0; };
    CHECK(integrate_ftc(Fcube, BoxDomain{{-1}, {3}}) == Catch::Approx(28.0 / 3.0).epsilon(1e-14));

    // signed convention: u=(1,1), v=(0,0), F = x^2 y^2 / 4
    RealFn Fq = [](const Point& x) { return x[0] * x[0] * x[1] * x[1] / 4.0; };
    CHECK(integrate_ftc(Fq, BoxDomain{{1, 1}, {0, 0}}) == 0.25);

    // non-finite F -> EvalError naming the corner
    RealFn bad = [](const Point& x) { return 1.0 / x[0]; };
    CHECK_THROWS_AS(integrate_ftc(bad, BoxDomain{{0}, {1}}), EvalError);
}

TEST_CASE("tensor quadrature hits stated values") {
    QuadratureConfig cfg;
    FieldSpec one{2, [](const Point&) { return 1.0; }, nullptr, nullptr};
    CHECK(integrate_quad(one, BoxDomain{{0, 0}, {2, 3}}, cfg) == Catch::Approx(6.0).margin(1e-12));

    FieldSpec sq{1, [](const Point& x) { return x[0] * x[0]; }, nullptr, nullptr};
    CHECK(integrate_quad(sq, BoxDomain{{-0.5}, {2.5}}, cfg) ==
          Catch::Approx(21.0 / 4.0).margin(1e-12));

    FieldSpec ee{2, [](const Point& x) { return std::exp(-x[0] - x[1]); }, nullptr, nullptr};
    const double oneDim = 1.0 - std::exp(-1.0);
    CHECK(integrate_quad(ee, BoxDomain{{0, 0}, {1, 1}}, cfg) ==
          Catch::Approx(oneDim * oneDim).margin(1e-10));
}

TEST_CASE("swapping one coordinate negates both paths") {
    QuadratureConfig cfg;
    FieldSpec f{2, [](const Point& x) { return std::exp(x[0]) * std::cos(x[1]); },
                [](const Point& x) { return std::exp(x[0]) * std::sin(x[1]); }, nullptr};
    const BoxDomain fwd{{0.25, -0.5}, {1.5, 1.0}};
    const BoxDomain swapped{{1.5, -0.5}, {0.25, 1.0}};
    CHECK(integrate_ftc(f.antiderivative, fwd) == -integrate_ftc(f.antiderivative, swapped));
    CHECK(integrate_quad(f, fwd, cfg) == Catch::Approx(-integrate_quad(f, swapped, cfg)).margin(1e-11));
}

TEST_CASE("FTC and quadrature agree on random boxes up to p = 3") {
    QuadratureConfig cfg;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    int boxes = 0;
    for (int p = 1; p <= 3; ++p) {
        // f = exp(sum x_r) has antiderivative exp(sum x_r)
        FieldSpec f;
        f.dim = p;
        f.eval = [p](const Point& x) {
            double s = 0;
            for (int r = 0; r < p; ++r) s += x[static_cast<std::size_t>(r)];
            return std::exp(s);
        };
        f.antiderivative = f.eval;
        const int trials = p == 3 ? 34 : 33;
        for (int t = 0; t < trials; ++t) {
            BoxDomain box;
            box.lower.resize(static_cast<std::size_t>(p));
            box.upper.resize(static_cast<std::size_t>(p));
            for (int r = 0; r < p; ++r) {
                box.lower[static_cast<std::size_t>(r)] = coord(rng);
                box.upper[static_cast<std::size_t>(r)] = coord(rng);
            }
            const double viaF = integrate_ftc(f.antiderivative, box);
            const double viaQ = integrate_quad(f, box, cfg);
            CHECK(std::abs(viaF - viaQ) < 10 * cfg.refinement_tolerance);
            ++boxes;
        }
    }
    CHECK(boxes == 100);
}

TEST_CASE("additivity under axis splits") {
    QuadratureConfig cfg;
    FieldSpec f{2, [](const Point& x) { return std::sin(x[0] + 2 * x[1]); }, nullptr, nullptr};
    const double whole = integrate_quad(f, BoxDomain{{0, 0}, {2, 1}}, cfg);
    const double left = integrate_quad(f, BoxDomain{{0, 0}, {0.75, 1}}, cfg);
    const double right = integrate_quad(f, BoxDomain{{0.75, 0}, {2, 1}}, cfg);
    CHECK(whole == Catch::Approx(left + right).margin(1e-10));
}

TEST_CASE("degenerate and invalid boxes") {
    QuadratureConfig cfg;
    FieldSpec f{1, [](const Point& x) { return x[0]; }, nullptr, nullptr};
    CHECK(integrate_quad(f, BoxDomain{{2}, {2}}, cfg) == 0.0);
    CHECK_THROWS_AS(integrate_quad(f, BoxDomain{{0}, {std::nan("")}}, cfg), std::invalid_argument);
    QuadratureConfig badcfg;
    badcfg.nodes_per_panel = 0;
    CHECK_THROWS_AS(integrate_quad(f, BoxDomain{{0}, {1}}, badcfg), std::invalid_argument);
}

TEST_CASE("gauss-legendre rules integrate polynomials to degree 2n-1") {
    for (int n : {1, 2, 3, 5, 8, 16, 32}) {
        const auto& rule = gauss_legendre(n);
        for (int deg = 0; deg <= 2 * n - 1; ++deg) {
            double acc = 0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * std::pow(rule.nodes[i], deg);
            const double expect = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;  // int_{-1}^{1} t^deg dt
            CHECK(acc == Catch::Approx(expect).margin(1e-12));
        }
    }
}

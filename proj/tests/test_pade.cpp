#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "uniexp/analysis.hpp"
#include "uniexp/interpolation.hpp"
#include "uniexp/pade.hpp"

using namespace uniexp;
using doctest::Approx;

TEST_CASE("pade denominator coefficients") {
    CHECK(pade_denominator(0) == std::vector<double>{1.0});
    auto c1 = pade_denominator(1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == Approx(1.0));
    CHECK(c1[1] == Approx(-0.5));
}

TEST_CASE("pade matches e^z to order 2n+1") {
    // residual at z=1e-2 for n=3 is far below the 1e-12 gate
    std::complex<double> z(1e-2, 0.0);
    CHECK(std::abs(pade_eval(3, z) - std::exp(z)) <= 1e-12);
    std::complex<double> zi(0.0, 1e-2);
    CHECK(std::abs(pade_eval(3, zi) - std::exp(zi)) <= 1e-12);
}

TEST_CASE("pade eval and poles, small degrees") {
    CHECK(std::abs(pade_eval(1, {0.0, 0.0}) - 1.0) == 0.0);
    auto p1 = pade_poles(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].real() == Approx(2.0));
    CHECK(p1[0].imag() == Approx(0.0));

    for (const auto& s : pade_poles(4)) CHECK(s.real() > 0.0);
}

TEST_CASE("pade error series agrees with direct evaluation at moderate z") {
    for (int n : {1, 2, 3}) {
        std::complex<double> z(0.0, 1.3);
        auto direct = std::exp(z) - pade_eval(n, z);
        auto series = pade_error_series(n, z);
        CHECK(std::abs(series - direct) <= 1e-13 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("pade error bound values and measured sup") {
    CHECK(pade_error_bound(1, 1.0) == Approx(1.0 / 12.0));
    CHECK(pade_error_bound(0, 1.0) == Approx(1.0));

    double bound = pade_error_bound(4, 1.5);
    double measured = sup_error(make_pade_evaluator(4, 1.5), 1.5, 4096).value;
    CHECK(measured <= bound);
}

TEST_CASE("best error estimate reproduces the reported values") {
    CHECK(best_error_estimate(4, 0.5) == Approx(3.0e-13).epsilon(0.02));
    CHECK(best_error_estimate(4, 1.5) == Approx(5.91e-9).epsilon(0.005));
    for (int n : {1, 3, 5})
        CHECK(best_error_estimate(n, 1.7) / pade_error_bound(n, 1.7) ==
              Approx(std::pow(0.5, 2 * n)).epsilon(1e-12));
}

TEST_CASE("superlinear thresholds") {
    auto t0 = superlinear_thresholds(0);
    CHECK(t0.bound_based == Approx(0.7358).epsilon(1e-3));
    CHECK(t0.estimate_based == Approx(1.4715).epsilon(1e-3));
    auto t4 = superlinear_thresholds(4);
    CHECK(t4.bound_based == Approx(6.62).epsilon(1e-3));
    CHECK(t4.estimate_based == Approx(13.24).epsilon(1e-3));
    CHECK(t4.estimate_based == Approx(2.0 * t4.bound_based));
}

TEST_CASE("pade is unitary on the imaginary axis") {
    for (int n : {1, 3, 6}) {
        auto r = make_pade_evaluator(n, 2.0);
        double defect = 0.0;
        for (int i = 0; i < 2048; ++i) {
            double x = -1.0 + 2.0 * i / 2047.0;
            defect = std::max(defect, std::abs(std::abs(r(x)) - 1.0));
        }
        CHECK(defect <= 1e-13);
    }
}

TEST_CASE("pade error is asymptotically the leading term") {
    // |e^{i y} - rhat(i y)| / (n!)^2 y^{2n+1}/((2n)!(2n+1)!) -> 1 for y -> 0
    int n = 2;
    double y = 0.05;
    double leading = pade_error_bound(n, y);
    double err = std::abs(pade_error_series(n, {0.0, y}));
    CHECK(err / leading > 0.95);
    CHECK(err / leading < 1.05);
}

TEST_CASE("chebyshev quotient baseline") {
    ChebQuotient q0(0, 1.3);
    // degree 0: a unimodular constant
    CHECK(std::abs(std::abs(q0.eval(0.3)) - 1.0) <= 1e-14);
    CHECK(std::abs(q0.eval(0.3) - q0.eval(-0.8)) <= 1e-14);

    ChebQuotient q(4, 4.0);
    double defect = 0.0;
    for (int i = 0; i < 512; ++i) {
        double x = -1.0 + 2.0 * i / 511.0;
        defect = std::max(defect, std::abs(std::abs(q.eval(x)) - 1.0));
    }
    CHECK(defect <= 1e-13);

    // the quotient baseline trails the Chebyshev-node interpolant at n=4, omega=4
    double err_q = sup_error(make_evaluator(q), 4.0, 2048).value;
    auto interp = interpolate_unitary(4.0, NodeSet(chebyshev_nodes(9)));
    double err_i = sup_error(make_evaluator(interp.approximant), 4.0, 2048).value;
    CHECK(err_q > err_i);
}

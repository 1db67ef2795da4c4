#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "uniexp/interpolation.hpp"
#include "uniexp/unitary.hpp"

using namespace uniexp;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

UnitaryBarycentric cheb_interpolant(int n, double omega) {
    return interpolate_unitary(omega, NodeSet(chebyshev_nodes(2 * n + 1))).approximant;
}

} // namespace

TEST_CASE("derived weights formula") {
    double s0[] = {0.0};
    double v0[] = {1.0};
    auto w = derived_weights(3.0, s0, v0);
    CHECK(std::abs(w[0] - Complex(1.0, 0.0)) == 0.0);

    double s1[] = {1.0};
    w = derived_weights(pi, s1, v0);
    CHECK(std::abs(w[0] - Complex(0.0, -1.0)) <= 1e-15);

    double s2[] = {0.5};
    double v2[] = {2.0};
    w = derived_weights(2.0, s2, v2);
    CHECK(w[0].real() == Approx(2.0 * std::cos(0.5)));
    CHECK(w[0].imag() == Approx(-2.0 * std::sin(0.5)));

    // through the type the weight vector is unit-normalized first
    UnitaryBarycentric b(2.0, {0.5}, {2.0});
    auto wn = derived_weights(b);
    CHECK(std::abs(wn[0]) == Approx(1.0));
}

TEST_CASE("barycentric evaluation basics") {
    UnitaryBarycentric one(2.0, {0.0}, {1.0});
    CHECK(eval_barycentric(one, 0.3) == Complex(1.0, 0.0));

    auto b = cheb_interpolant(2, 1.0);
    for (double s : b.support_nodes()) {
        Complex expected = std::polar(1.0, b.omega() * s);
        CHECK(std::abs(eval_barycentric(b, s) - expected) == 0.0);
    }
    double defect = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double x = -1.0 + 2.0 * i / 999.0;
        defect = std::max(defect, std::abs(std::abs(eval_barycentric(b, x)) - 1.0));
    }
    CHECK(defect <= 1e-13);
}

TEST_CASE("unitarity over a large grid, several instances") {
    for (int n : {1, 3, 5}) {
        auto b = cheb_interpolant(n, 0.7 * (n + 1));
        double defect = 0.0;
        for (int i = 0; i < 10000; ++i) {
            double x = -1.0 + 2.0 * i / 9999.0;
            defect = std::max(defect, std::abs(std::abs(eval_barycentric(b, x)) - 1.0));
        }
        CHECK(defect <= 5e-15 * (n + 1));
    }
}

TEST_CASE("weight scaling cancels in the ratio") {
    auto b = cheb_interpolant(3, 2.0);
    std::vector<double> scaled = b.rotated_weights();
    for (double& v : scaled) v *= 4.0; // power of two: renormalizes bit-exactly
    UnitaryBarycentric b2(b.omega(), b.support_nodes(), scaled);
    CHECK(eval_barycentric(b, 0.37) == eval_barycentric(b2, 0.37));

    for (double& v : scaled) v *= 3.7 / 4.0;
    UnitaryBarycentric b3(b.omega(), b.support_nodes(), scaled);
    CHECK(std::abs(eval_barycentric(b, 0.37) - eval_barycentric(b3, 0.37)) <= 1e-14);
}

TEST_CASE("spurious real pole is signalled") {
    // equal weights at tiny omega put a denominator zero within the guard of x = 0
    UnitaryBarycentric b(1e-13, {-0.5, 0.5}, {1.0, 1.0});
    CHECK_THROWS_AS(eval_barycentric(b, 0.0), SpuriousPoleError);
}

TEST_CASE("pole form evaluation") {
    UnitaryPoleForm empty{{}, 0.0};
    CHECK(eval_pole_form(empty, {0.3, 0.1}) == Complex(1.0, 0.0));

    UnitaryPoleForm cayley{{Complex(2.0, 0.0)}, 0.0};
    CHECK(std::abs(eval_pole_form(cayley, {0.0, 0.0}) - Complex(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(eval_pole_form(cayley, {0.0, 2.0}) - Complex(0.0, 1.0)) <= 1e-15);
    CHECK_THROWS_AS(eval_pole_form(cayley, {2.0, 0.0}), PoleHitError);
}

TEST_CASE("phase function") {
    UnitaryPoleForm empty{{}, 0.0};
    CHECK(phase_function(empty, 0.8) == 0.0);

    UnitaryPoleForm cayley{{Complex(2.0, 0.0)}, 0.0};
    CHECK(phase_function(cayley, 2.0) == Approx(pi / 2));

    UnitaryPoleForm pair{{Complex(1.5, -0.4), Complex(1.5, 0.4)}, 0.0};
    for (double x : {0.1, 0.45, 0.9})
        CHECK(phase_function(pair, -x) == Approx(-phase_function(pair, x)));

    UnitaryPoleForm bad{{Complex(0.0, 0.5)}, 0.0};
    CHECK_THROWS_AS(phase_function(bad, 0.3), DegeneratePoleError);
}

TEST_CASE("phase error") {
    UnitaryBarycentric one(1.0, {0.0}, {1.0});
    CHECK(phase_error(one, 0.0) == 0.0);
    CHECK(phase_error(one, 0.5) == Approx(-0.5));

    // Cayley pole s=2 has g(1) = 2 arctan(1/2)
    UnitaryPoleForm cayley{{Complex(2.0, 0.0)}, 0.0};
    double omega = 2.0 * std::atan(0.5);
    CHECK(phase_function(cayley, 1.0) - omega * 1.0 == Approx(0.0));
}

TEST_CASE("phase identity |r - e| = 2|sin(delta/2)|") {
    auto b = cheb_interpolant(3, 2.0);
    for (int i = 0; i < 500; ++i) {
        double x = -1.0 + 2.0 * i / 499.0;
        double err = std::abs(eval_barycentric(b, x) - std::polar(1.0, b.omega() * x));
        double delta = phase_error(b, x);
        CHECK(std::abs(err - 2.0 * std::abs(std::sin(0.5 * delta))) <= 1e-14);
    }
}

TEST_CASE("phase curve flags no wrap on a benign instance") {
    auto b = cheb_interpolant(2, 1.5);
    std::vector<double> xs(257);
    for (int i = 0; i < 257; ++i) xs[i] = -1.0 + 2.0 * i / 256.0;
    auto curve = make_phase_curve(b, xs);
    CHECK_FALSE(curve.wrap_flagged);
    CHECK(curve.delta.size() == xs.size());
}

TEST_CASE("pole extraction") {
    UnitaryBarycentric one(2.0, {0.0}, {1.0});
    CHECK(poles(one).empty());

    // n=1: the denominator root can be formed by clearing denominators
    auto b = cheb_interpolant(1, 1.0);
    auto w = derived_weights(b);
    const auto& s = b.support_nodes();
    Complex root = (w[0] * s[1] + w[1] * s[0]) / (w[0] + w[1]);
    auto ps = poles(b);
    REQUIRE(ps.size() == 1);
    CHECK(std::abs(ps[0] - Complex(0.0, 1.0) * root) <= 1e-10);
}

TEST_CASE("pole-zero mirror: -conj(s) is a zero") {
    auto b = cheb_interpolant(2, 2.0);
    auto ps = poles(b);
    REQUIRE(!ps.empty());
    Complex zero = -std::conj(ps[0]);
    auto val = [&](double eps) {
        Complex z = zero + Complex(eps * 0.6, eps * 0.8);
        // |r| at z via the pole form, which shares the zeros
        return std::abs(eval_pole_form(pole_form(b), z));
    };
    double ratio = val(1e-3) / val(1e-2);
    CHECK(ratio > 0.05);
    CHECK(ratio < 0.2);
}

TEST_CASE("pole form round trip") {
    for (int n : {2, 5, 8}) {
        double omega = 0.6 * (n + 1);
        auto b = cheb_interpolant(n, omega);
        auto pf = pole_form(b);
        REQUIRE(static_cast<int>(pf.poles.size()) == n);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            double x = -1.0 + 2.0 * i / 199.0;
            Complex via_poles = eval_pole_form(pf, Complex(0.0, x));
            Complex direct = eval_barycentric(b, x);
            worst = std::max(worst, std::abs(via_poles - direct));
        }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("interval transform") {
    auto b = cheb_interpolant(2, 1.0);

    auto t = transform_to_interval(b, -1.0, 1.0);
    CHECK(t.gamma == 0.0);
    CHECK(t.scale == Approx(1.0));
    CHECK(std::abs(t.prefactor - Complex(1.0, 0.0)) == 0.0);

    auto b2 = cheb_interpolant(2, 1.3);
    auto t2 = transform_to_interval(b2, 0.0, 2.6);
    CHECK(std::abs(eval_transformed(b2, t2, t2.gamma) -
                   t2.prefactor * eval_barycentric(b2, 0.0)) == 0.0);

    // [2,4]: transformed error equals the error of b at mapped samples
    auto t3 = transform_to_interval(b, 2.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double y = 2.0 + 2.0 * i / 999.0;
        double x = (y - t3.gamma) * t3.scale;
        double err_t = std::abs(eval_transformed(b, t3, y) - std::polar(1.0, y));
        double err_b = std::abs(eval_barycentric(b, x) - std::polar(1.0, b.omega() * x));
        worst = std::max(worst, std::abs(err_t - err_b));
    }
    CHECK(worst <= 1e-14);

    CHECK_THROWS_AS(transform_to_interval(b, 0.0, 5.0), std::invalid_argument);
}

TEST_CASE("structural checks") {
    UnitaryBarycentric one(0.5, {0.0}, {1.0});
    auto rep = structural_checks(one, 64);
    CHECK(rep.unitarity_defect == 0.0);
    CHECK(rep.symmetry_defect == 0.0);
    CHECK(rep.stability_ok);
    CHECK(rep.irreducible_ok);

    auto b = cheb_interpolant(3, 2.5);
    auto rep2 = structural_checks(b, 512);
    CHECK(rep2.unitarity_defect <= 5e-15 * 4);
    CHECK(rep2.symmetry_defect <= 1e-12);
    CHECK(rep2.stability_ok);
    CHECK(rep2.irreducible_ok);
}

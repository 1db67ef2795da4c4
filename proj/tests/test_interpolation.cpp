#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "uniexp/interpolation.hpp"

using namespace uniexp;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("chebyshev nodes") {
    auto one = chebyshev_nodes(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == 0.0);

    auto three = chebyshev_nodes(3);
    CHECK(three[0] == Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(three[1] == 0.0);
    CHECK(three[2] == Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    auto nodes = chebyshev_nodes(11);
    for (int j = 0; j < 11; ++j) CHECK(nodes[j] == -nodes[10 - j]);
}

TEST_CASE("chebyshev nodes minimize the monic sup norm") {
    // max over [-1,1] of |prod (x - tau_j)| = 2^{-2n} for 2n+1 nodes, n=3
    const int n = 3;
    auto tau = chebyshev_nodes(2 * n + 1);
    auto f = [&](double x) {
        double p = 1.0;
        for (double t : tau) p *= (x - t);
        return std::abs(p);
    };
    double best = std::max(f(-1.0), f(1.0));
    const int scan = 4096;
    std::vector<double> val(scan);
    for (int i = 0; i < scan; ++i) val[i] = f(-1.0 + 2.0 * i / (scan - 1));
    for (int i = 1; i + 1 < scan; ++i) {
        if (val[i] >= val[i - 1] && val[i] >= val[i + 1]) {
            double lo = -1.0 + 2.0 * (i - 1) / (scan - 1);
            double hi = -1.0 + 2.0 * (i + 1) / (scan - 1);
            // golden refinement via ternary steps
            for (int it = 0; it < 200; ++it) {
                double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                if (f(m1) < f(m2)) lo = m1;
                else hi = m2;
            }
            best = std::max(best, f(0.5 * (lo + hi)));
        }
    }
    CHECK(std::abs(best - std::pow(2.0, -2 * n)) <= 1e-12);
}

TEST_CASE("support/test split") {
    NodeSet nodes({-0.866, 0.0, 0.866});
    auto split = split_support_test(nodes);
    CHECK(split.support == std::vector<double>{-0.866, 0.866});
    CHECK(split.test == std::vector<double>{0.0});

    NodeSet five({-0.9, -0.4, 0.0, 0.4, 0.9});
    auto s5 = split_support_test(five);
    CHECK(s5.support.size() == 3);
    CHECK(s5.test.size() == 2);
    // support strictly interleaves test and the union is the input
    CHECK(s5.support[0] < s5.test[0]);
    CHECK(s5.test[0] < s5.support[1]);
    CHECK(s5.support[1] < s5.test[1]);
    CHECK(s5.test[1] < s5.support[2]);
}

TEST_CASE("rotated Loewner matrix entries") {
    double support[] = {0.0};
    double test[] = {1.0};
    auto a0 = rotated_loewner_matrix(0.0, support, test);
    CHECK(a0(0, 0) == 0.0);

    auto a1 = rotated_loewner_matrix(pi, support, test);
    CHECK(a1(0, 0) == Approx(1.0));

    double bad_support[] = {0.5};
    double bad_test[] = {0.5};
    CHECK_THROWS_AS(rotated_loewner_matrix(1.0, bad_support, bad_test), CoincidentNodeError);
}

TEST_CASE("null vector solves the linearized interpolation problem") {
    const int n = 3;
    const double omega = 2.0;
    NodeSet nodes(chebyshev_nodes(2 * n + 1));
    auto split = split_support_test(nodes);
    auto a = rotated_loewner_matrix(omega, split.support, split.test);

    auto result = interpolate_unitary(omega, nodes);
    Eigen::VectorXd v(n + 1);
    for (int j = 0; j <= n; ++j) v(j) = result.approximant.rotated_weights()[j];
    CHECK((a * v).cwiseAbs().maxCoeff() <= 1e-13);

    for (std::size_t j = 0; j < nodes.nodes().size(); ++j)
        CHECK(result.residuals[j] <= 1e-13);
}

TEST_CASE("degree-0 interpolation is the sampled constant") {
    auto result = interpolate_unitary(1.0, NodeSet({0.2}));
    Complex expected = std::polar(1.0, 0.2);
    CHECK(std::abs(eval_barycentric(result.approximant, -0.7) - expected) <= 1e-15);
    CHECK(std::abs(eval_barycentric(result.approximant, 0.9) - expected) <= 1e-15);
}

TEST_CASE("chebyshev interpolant error matches the asymptotic estimate") {
    // n=2, omega=0.1: leading term 2(2!)^2/(4!5!) (omega/2)^5 = 8.68e-10
    auto result = interpolate_unitary(0.1, NodeSet(chebyshev_nodes(5)));
    double sup = 0.0;
    for (int i = 0; i < 20000; ++i) {
        double x = -1.0 + 2.0 * i / 19999.0;
        sup = std::max(sup,
                       std::abs(eval_barycentric(result.approximant, x) - std::polar(1.0, 0.1 * x)));
    }
    CHECK(sup / 8.6806e-10 > 0.9);
    CHECK(sup / 8.6806e-10 < 1.1);
}

TEST_CASE("interpolation residuals stay tiny") {
    for (auto [n, omega] : {std::pair{4, 3.0}, {2, 1.0}, {5, 8.0}}) {
        auto nodes = NodeSet(chebyshev_nodes(2 * n + 1));
        auto result = interpolate_unitary(omega, nodes);
        for (std::size_t j = 0; j < nodes.nodes().size(); ++j) {
            CHECK(result.residuals[j] <= 1e-12 * (n + 1));
        }
        CHECK(result.unattainable.empty());
    }
}

TEST_CASE("mirrored nodes give a symmetric interpolant") {
    auto result = interpolate_unitary(2.5, NodeSet(chebyshev_nodes(7)));
    auto rep = structural_checks(result.approximant, 512);
    CHECK(rep.symmetry_defect <= 1e-12);
}

TEST_CASE("omega -> 0 degenerates to the constant one") {
    auto result = interpolate_unitary(1e-4, NodeSet(chebyshev_nodes(5)));
    double sup = 0.0;
    for (int i = 0; i < 2000; ++i) {
        double x = -1.0 + 2.0 * i / 1999.0;
        sup = std::max(sup, std::abs(eval_barycentric(result.approximant, x) - 1.0));
    }
    CHECK(sup <= 1e-3);
}

TEST_CASE("ambiguous null space raises, Accept policy returns the linearized solution") {
    NodeSet nodes(chebyshev_nodes(9));
    CHECK_THROWS_AS(interpolate_unitary(1e-6, nodes, RankPolicy::Throw), RankDeficiencyError);
    auto result = interpolate_unitary(1e-6, nodes, RankPolicy::Accept);
    double sup = 0.0;
    for (int i = 0; i < 500; ++i) {
        double x = -1.0 + 2.0 * i / 499.0;
        sup = std::max(sup, std::abs(eval_barycentric(result.approximant, x) - 1.0));
    }
    CHECK(sup <= 1e-5);
}

TEST_CASE("node validation") {
    CHECK_THROWS_AS(NodeSet({0.1, 0.2}), std::invalid_argument);         // even count
    CHECK_THROWS_AS(NodeSet({0.2, 0.1, 0.3}), CoincidentNodeError);      // not ascending
    CHECK_THROWS_AS(NodeSet({-1.5, 0.0, 0.5}), std::invalid_argument);   // outside [-1,1]
}

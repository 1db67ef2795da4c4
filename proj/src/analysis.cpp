#include "uniexp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "uniexp/interpolation.hpp"
#include "uniexp/pade.hpp"
#include "detail.hpp"

namespace uniexp {

namespace {

double point_error(const UnitaryEvaluator& r, double omega, double x) {
    return std::abs(r(x) - std::polar(1.0, omega * x));
}

double phase_err_of(const UnitaryEvaluator& r, double omega, double x) {
    Complex u = r(x) * std::polar(1.0, -omega * x);
    double d = std::atan2(u.imag(), u.real());
    if (d == -detail::kPi) d = detail::kPi;
    return d;
}

double bisect_zero(const std::function<double(double)>& f, double a, double b, double fa,
                   double tol) {
    while (b - a > tol) {
        double mid = 0.5 * (a + b);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

// max|s_j - ref_j| after sorting both sets the same way
double matched_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
    return d;
}

double matched_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    auto by_imag = [](const Complex& u, const Complex& v) {
        if (u.imag() != v.imag()) return u.imag() < v.imag();
        return u.real() < v.real();
    };
    std::sort(a.begin(), a.end(), by_imag);
    std::sort(b.begin(), b.end(), by_imag);
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
    return d;
}

} // namespace

SupError sup_error(const UnitaryEvaluator& r, double omega, int coarse) {
    if (coarse < 64) throw std::invalid_argument("coarse grid must have at least 64 points");
    auto f = [&](double x) { return point_error(r, omega, x); };
    std::vector<double> val(coarse);
    for (int i = 0; i < coarse; ++i) val[i] = f(-1.0 + 2.0 * i / (coarse - 1));

    SupError best{val[0], -1.0};
    auto consider = [&](double x, double v) {
        if (v > best.value) best = {v, x};
    };
    consider(1.0, val[coarse - 1]);
    const double h = 2.0 / (coarse - 1);
    for (int i = 0; i < coarse; ++i) {
        bool local_max = (i == 0 || val[i] >= val[i - 1]) && (i + 1 == coarse || val[i] >= val[i + 1]);
        if (!local_max) continue;
        double lo = std::max(-1.0, -1.0 + (i - 1) * h);
        double hi = std::min(1.0, -1.0 + (i + 1) * h);
        auto [x, v] = detail::golden_max(f, lo, hi, 1e-12);
        consider(x, v);
        consider(-1.0 + i * h, val[i]);
    }
    best.value = std::min(best.value, 2.0); // unitarity bound, trims roundoff excess
    return best;
}

std::vector<double> phase_zeros(const UnitaryEvaluator& r, double omega, int scan) {
    if (scan < 2) throw std::invalid_argument("scan grid must have at least 2 points");
    auto delta = [&](double x) { return phase_err_of(r, omega, x); };
    std::vector<double> zeros;
    double prev_x = -1.0;
    double prev_d = delta(prev_x);
    for (int i = 1; i < scan; ++i) {
        double x = -1.0 + 2.0 * i / (scan - 1);
        double d = delta(x);
        if (d == 0.0) {
            zeros.push_back(x);
        } else if (prev_d != 0.0 && (d > 0.0) != (prev_d > 0.0)) {
            zeros.push_back(bisect_zero(delta, prev_x, x, prev_d, 1e-13));
        }
        prev_x = x;
        prev_d = d;
    }
    return zeros;
}

EquioscillationReport equioscillation_report(const UnitaryEvaluator& r, double omega, int n) {
    EquioscillationReport rep;
    rep.zeros = phase_zeros(r, omega);
    rep.zero_count_ok = static_cast<int>(rep.zeros.size()) == 2 * n + 1;

    auto delta = [&](double x) { return phase_err_of(r, omega, x); };
    auto mag = [&](double x) { return std::abs(delta(x)); };
    rep.extrema.push_back({-1.0, delta(-1.0)});
    for (std::size_t k = 1; k < rep.zeros.size(); ++k) {
        auto [x, v] = detail::scan_golden_max(mag, rep.zeros[k - 1], rep.zeros[k], 1e-12);
        rep.extrema.push_back({x, delta(x)});
    }
    rep.extrema.push_back({1.0, delta(1.0)});

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    bool alt = rep.extrema.size() == static_cast<std::size_t>(2 * n + 2);
    for (std::size_t j = 0; j < rep.extrema.size(); ++j) {
        double v = rep.extrema[j].value;
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
        if (v == 0.0) alt = false;
        else if (j > 0 && (v > 0.0) == (rep.extrema[j - 1].value > 0.0)) alt = false;
    }
    rep.deviation = hi > 0.0 ? (hi - lo) / hi : 0.0;
    rep.alternating = alt;
    rep.first_sign_positive = rep.extrema.front().value > 0.0;
    return rep;
}

ErrorCurve error_curve(const UnitaryEvaluator& r, double omega, int m) {
    if (m < 2) throw std::invalid_argument("need at least 2 samples");
    ErrorCurve curve;
    curve.samples.reserve(m);
    for (double x : chebyshev_nodes(m)) {
        Complex err = r(x) - std::polar(1.0, omega * x);
        curve.samples.push_back({x, err.real(), err.imag(), std::abs(err),
                                 phase_err_of(r, omega, x)});
    }
    return curve;
}

int count_error_maxima(const ErrorCurve& curve) {
    const auto& s = curve.samples;
    const int m = static_cast<int>(s.size());
    int count = 0;
    for (int i = 0; i < m; ++i) {
        bool up = i == 0 || s[i].abs_err > s[i - 1].abs_err;
        bool down = i + 1 == m || s[i].abs_err > s[i + 1].abs_err;
        if (up && down) ++count;
    }
    return count;
}

AsymptoticDiagnostics asymptotic_diagnostics(const BestApproximation& result) {
    const int n = result.approximant.degree();
    const double omega = result.approximant.omega();
    AsymptoticDiagnostics d;

    d.d_cheb = matched_distance(result.interpolation_nodes, chebyshev_nodes(2 * n + 1));

    std::vector<double> limit_nodes(2 * n + 1);
    for (int k = 1; k <= 2 * n + 1; ++k) limit_nodes[k - 1] = -1.0 + k / (n + 1.0);
    d.d_limit_nodes = matched_distance(result.interpolation_nodes, limit_nodes);

    auto ps = poles(result.approximant);
    std::vector<Complex> scaled(ps.size());
    for (std::size_t j = 0; j < ps.size(); ++j) scaled[j] = omega * ps[j];
    d.d_pade = matched_distance(scaled, pade_poles(n));

    std::vector<Complex> limit_poles(n);
    for (int j = 1; j <= n; ++j) limit_poles[j - 1] = Complex(0.0, -1.0 + 2.0 * j / (n + 1.0));
    d.d_limit_poles = matched_distance(ps, limit_poles);
    return d;
}

} // namespace uniexp

#pragma once

#include <cmath>
#include <numbers>
#include <utility>

namespace uniexp::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInvGolden = 0.6180339887498949; // 1/phi

/// Golden-section maximization of f on [a,b], assuming unimodality.
/// Returns (argmax, max); terminates when the bracket is below tol.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol) {
    double c = b - kInvGolden * (b - a);
    double d = a + kInvGolden * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvGolden * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    double fm = f(xm);
    if (fc > fm) { xm = c; fm = fc; }
    if (fd > fm) { xm = d; fm = fd; }
    return {xm, fm};
}

/// Pre-scan at `pre` interior points, then golden-section refinement of the
/// bracketing sub-interval.  Robust when f is not unimodal on [a,b].
template <class F>
std::pair<double, double> scan_golden_max(F&& f, double a, double b, double tol, int pre = 32) {
    const double h = (b - a) / (pre + 1);
    int best = 1;
    double fbest = f(a + h);
    for (int i = 2; i <= pre; ++i) {
        double fi = f(a + i * h);
        if (fi > fbest) { fbest = fi; best = i; }
    }
    double lo = a + (best - 1) * h;
    double hi = a + (best + 1) * h;
    auto [xg, fg] = golden_max(f, lo, hi, tol);
    if (fbest > fg) return {a + best * h, fbest};
    return {xg, fg};
}

/// Wrap an angle to the principal branch (-pi, pi].
inline double principal_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a = kPi;
    return a;
}

} // namespace uniexp::detail

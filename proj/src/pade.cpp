#include "uniexp/pade.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "uniexp/interpolation.hpp"
#include "detail.hpp"

namespace uniexp {

namespace {

double log_factorial(int k) { return std::lgamma(k + 1.0); }

Complex horner(const std::vector<double>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Parlett-Reinsch style balancing with powers of two.
void balance(Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r < 0.95 * s) {
                converged = false;
                a.col(i) *= f;
                a.row(i) /= f;
            }
        }
    }
}

} // namespace

std::vector<double> pade_denominator(int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        double lg = log_factorial(2 * n - k) + log_factorial(n) - log_factorial(2 * n) -
                    log_factorial(k) - log_factorial(n - k);
        c[k] = (k % 2 == 0 ? 1.0 : -1.0) * std::exp(lg);
    }
    return c;
}

PadeApproximant make_pade(int n) { return PadeApproximant{n, pade_denominator(n)}; }

Complex pade_eval(const PadeApproximant& p, Complex z) {
    Complex den = horner(p.denominator, z);
    if (std::abs(den) == 0.0) throw PoleHitError("Pade denominator vanishes");
    return horner(p.denominator, -z) / den;
}

Complex pade_eval(int n, Complex z) { return pade_eval(make_pade(n), z); }

std::vector<Complex> pade_poles(int n) {
    if (n == 0) return {};
    auto c = pade_denominator(n);
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) comp(0, j) = -c[n - 1 - j] / c[n];
    for (int j = 1; j < n; ++j) comp(j, j - 1) = 1.0;
    balance(comp);
    Eigen::EigenSolver<Eigen::MatrixXd> eig(comp, false);
    std::vector<Complex> roots(n);
    for (int j = 0; j < n; ++j) roots[j] = eig.eigenvalues()(j);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    return roots;
}

Complex pade_error_series(int n, Complex z) {
    const auto c = pade_denominator(n);
    // e^z phat(z) - phat(-z) = sum_{m >= 2n+1} t_m z^m exactly (orders <= 2n cancel)
    Complex num(0.0, 0.0);
    Complex zp = std::pow(z, 2 * n + 1);
    for (int m = 2 * n + 1; m <= 2 * n + 120; ++m) {
        double tm = 0.0;
        for (int j = std::max(0, m - 120); j <= std::min(m, n); ++j)
            tm += c[j] * std::exp(-log_factorial(m - j));
        Complex term = tm * zp;
        num += term;
        if (std::abs(term) < 1e-20 * std::abs(num) && m > 2 * n + 4) break;
        zp *= z;
    }
    Complex den = horner(c, z);
    if (std::abs(den) == 0.0) throw PoleHitError("Pade denominator vanishes");
    return num / den;
}

double pade_error_bound(int n, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    double lg = 2.0 * log_factorial(n) - log_factorial(2 * n) - log_factorial(2 * n + 1);
    return std::exp(lg + (2 * n + 1) * std::log(omega));
}

double best_error_estimate(int n, double omega) {
    return 2.0 * pade_error_bound(n, 0.5 * omega);
}

SuperlinearThresholds superlinear_thresholds(int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    double base = (n + 0.5) / std::numbers::e;
    return {4.0 * base, 8.0 * base};
}

ChebQuotient::ChebQuotient(int n, double omega) : omega_(omega) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    // Discrete Chebyshev transform on a 64(n+1)-point first-kind grid:
    // exact least-squares truncation at degree n.
    const int m = 64 * (n + 1);
    coeffs_.assign(n + 1, Complex(0.0, 0.0));
    for (int i = 1; i <= m; ++i) {
        double theta = (2.0 * i - 1.0) * detail::kPi / (2.0 * m);
        double x = std::cos(theta);
        Complex f = std::polar(1.0, -0.5 * omega * x);
        for (int k = 0; k <= n; ++k) coeffs_[k] += f * std::cos(k * theta);
    }
    for (int k = 0; k <= n; ++k) coeffs_[k] *= (k == 0 ? 1.0 : 2.0) / static_cast<double>(m);
}

Complex ChebQuotient::eval(double x) const {
    // Clenshaw for p(ix) = sum a_k T_k(x)
    Complex b1(0.0, 0.0), b2(0.0, 0.0);
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 1; --k) {
        Complex b0 = coeffs_[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    Complex p = coeffs_[0] + x * b1 - b2;
    if (std::abs(p) == 0.0) throw PoleHitError("Chebyshev quotient denominator vanishes");
    return std::conj(p) / p;
}

UnitaryEvaluator make_pade_evaluator(int n, double omega) {
    PadeApproximant p = make_pade(n);
    return [p, omega](double x) { return pade_eval(p, Complex(0.0, omega * x)); };
}

UnitaryEvaluator make_evaluator(const ChebQuotient& q) {
    return [q](double x) { return q.eval(x); };
}

} // namespace uniexp

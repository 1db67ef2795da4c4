#include "uniexp/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "detail.hpp"

namespace uniexp {

namespace {

const Complex kImag(0.0, 1.0);

} // namespace

UnitaryBarycentric::UnitaryBarycentric(double omega, std::vector<double> support_nodes,
                                       std::vector<double> rotated_weights)
    : omega_(omega), support_nodes_(std::move(support_nodes)),
      rotated_weights_(std::move(rotated_weights)) {
    if (!(omega_ > 0.0)) throw std::invalid_argument("omega must be positive");
    if (support_nodes_.empty() || support_nodes_.size() != rotated_weights_.size())
        throw std::invalid_argument("need n+1 support nodes and matching weights");
    for (std::size_t j = 0; j < support_nodes_.size(); ++j) {
        double s = support_nodes_[j];
        if (!(s >= -1.0 && s <= 1.0)) throw std::invalid_argument("support node outside [-1,1]");
        if (j > 0 && !(support_nodes_[j - 1] < s))
            throw std::invalid_argument("support nodes must be strictly increasing");
    }
    double norm = 0.0;
    for (double v : rotated_weights_) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::invalid_argument("rotated weights must not all vanish");
    double sign = 1.0;
    for (double v : rotated_weights_) {
        if (v != 0.0) {
            sign = v > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    for (double& v : rotated_weights_) v *= sign / norm;
}

std::vector<Complex> derived_weights(double omega, std::span<const double> support_nodes,
                                     std::span<const double> rotated_weights) {
    std::vector<Complex> w(support_nodes.size());
    for (std::size_t j = 0; j < support_nodes.size(); ++j)
        w[j] = rotated_weights[j] * std::polar(1.0, -0.5 * omega * support_nodes[j]);
    return w;
}

std::vector<Complex> derived_weights(const UnitaryBarycentric& b) {
    return derived_weights(b.omega(), b.support_nodes(), b.rotated_weights());
}

Complex eval_barycentric(const UnitaryBarycentric& b, double x) {
    const auto& s = b.support_nodes();
    const auto& v = b.rotated_weights();
    const double omega = b.omega();
    for (std::size_t j = 0; j < s.size(); ++j)
        if (x == s[j]) return std::polar(1.0, omega * s[j]);

    // N(x) = conj(D(x)) for real x, so a single weighted sum suffices.
    Complex den(0.0, 0.0);
    double scale = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        Complex w = v[j] * std::polar(1.0, -0.5 * omega * s[j]);
        double d = x - s[j];
        den += w / d;
        scale += std::abs(w) / std::abs(d);
    }
    if (std::abs(den) < 1e-13 * scale)
        throw SpuriousPoleError("barycentric denominator collapses near x = " + std::to_string(x));
    return std::conj(den) / den;
}

UnitaryEvaluator make_evaluator(const UnitaryBarycentric& b) {
    return [b](double x) { return eval_barycentric(b, x); };
}

std::vector<Complex> poles(const UnitaryBarycentric& b) {
    const int n = b.degree();
    if (n == 0) return {};
    const auto& s = b.support_nodes();
    const auto w = derived_weights(b);

    // Arrowhead pencil (E, B) of the denominator: finite eigenvalues lambda
    // solve sum_j w_j/(lambda - s_j) = 0; z-plane poles are i*lambda.
    const int m = n + 2;
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(m, m);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(m, m);
    for (int j = 0; j < n + 1; ++j) {
        E(0, j + 1) = w[j];
        E(j + 1, 0) = 1.0;
        E(j + 1, j + 1) = s[j];
        B(j + 1, j + 1) = 1.0;
    }
    std::vector<Complex> alpha(m), beta(m);
    int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', m, E.data(), m, B.data(), m,
                             alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0) throw std::runtime_error("zggev failed on the barycentric pole pencil");

    std::vector<Complex> out;
    for (int k = 0; k < m; ++k) {
        if (beta[k] == Complex(0.0, 0.0)) continue;
        Complex lambda = alpha[k] / beta[k];
        if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) continue;
        if (std::abs(lambda) > 1e12) continue; // spurious infinite eigenvalue
        out.push_back(kImag * lambda);
    }
    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& c) {
        if (a.imag() != c.imag()) return a.imag() < c.imag();
        return a.real() < c.real();
    });
    return out;
}

UnitaryPoleForm pole_form(const UnitaryBarycentric& b) {
    UnitaryPoleForm p;
    p.poles = poles(b);
    double a = 0.0;
    for (const Complex& s : p.poles) {
        if (s.real() == 0.0)
            throw DegeneratePoleError("pole on the imaginary axis; phase function undefined");
        a += 2.0 * std::atan2(-s.imag(), s.real());
    }
    Complex r0 = eval_barycentric(b, 0.0);
    p.theta = detail::principal_angle(std::arg(r0) - a);
    return p;
}

Complex eval_pole_form(const UnitaryPoleForm& p, Complex z) {
    Complex r = std::polar(1.0, p.theta);
    if (p.poles.size() % 2 == 1) r = -r;
    for (const Complex& s : p.poles) {
        double tol = 1e-13 * std::max(1.0, std::abs(s));
        if (std::abs(z - s) < tol) throw PoleHitError("evaluation at a pole");
        r *= (z + std::conj(s)) / (z - s);
    }
    return r;
}

double phase_function(const UnitaryPoleForm& p, double x) {
    double g = p.theta;
    for (const Complex& s : p.poles) {
        if (s.real() == 0.0)
            throw DegeneratePoleError("pole with vanishing real part in phase function");
        g += 2.0 * std::atan((x - s.imag()) / s.real());
    }
    return g;
}

double phase_error(const UnitaryBarycentric& b, double x) {
    Complex u = eval_barycentric(b, x) * std::polar(1.0, -b.omega() * x);
    double d = std::atan2(u.imag(), u.real());
    if (d == -detail::kPi) d = detail::kPi;
    return d;
}

PhaseCurve make_phase_curve(const UnitaryBarycentric& b, std::span<const double> xs) {
    PhaseCurve curve;
    curve.xs.assign(xs.begin(), xs.end());
    curve.delta.reserve(xs.size());
    for (double x : xs) curve.delta.push_back(phase_error(b, x));
    for (std::size_t i = 1; i < curve.delta.size(); ++i)
        if (std::abs(curve.delta[i] - curve.delta[i - 1]) > detail::kPi) curve.wrap_flagged = true;
    return curve;
}

IntervalTransform transform_to_interval(const UnitaryBarycentric& b, double a, double bnd) {
    if (!(a < bnd)) throw std::invalid_argument("need a < b");
    double omega = 0.5 * (bnd - a);
    if (std::abs(omega - b.omega()) > 1e-12 * std::max(1.0, omega))
        throw std::invalid_argument("approximant frequency does not match (b-a)/2");
    IntervalTransform t;
    t.gamma = 0.5 * (a + bnd);
    t.scale = 1.0 / b.omega();
    t.prefactor = std::polar(1.0, t.gamma);
    return t;
}

Complex eval_transformed(const UnitaryBarycentric& b, const IntervalTransform& t, double y) {
    return t.prefactor * eval_barycentric(b, (y - t.gamma) * t.scale);
}

StructuralReport structural_checks(const UnitaryBarycentric& b, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");
    StructuralReport rep;
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i) {
        double x = -1.0 + 2.0 * i / (grid_size - 1);
        try {
            Complex rp = eval_barycentric(b, x);
            Complex rm = eval_barycentric(b, -x);
            rep.unitarity_defect = std::max(rep.unitarity_defect, std::abs(std::abs(rp) - 1.0));
            rep.symmetry_defect = std::max(rep.symmetry_defect, std::abs(rm - std::conj(rp)));
        } catch (const SpuriousPoleError&) {
            rep.unitarity_defect = inf;
            rep.symmetry_defect = inf;
        }
    }
    auto ps = poles(b);
    for (const Complex& s : ps)
        if (!(s.real() > 0.0)) rep.stability_ok = false;
    for (std::size_t j = 0; j < ps.size(); ++j)
        for (std::size_t l = 0; l < ps.size(); ++l) {
            double rel = std::abs(std::conj(ps[j]) + ps[l]) /
                         std::max(1.0, std::max(std::abs(ps[j]), std::abs(ps[l])));
            if (rel <= 1e-8) rep.irreducible_ok = false;
        }
    return rep;
}

} // namespace uniexp

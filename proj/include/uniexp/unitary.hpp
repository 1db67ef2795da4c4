#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "uniexp/errors.hpp"

namespace uniexp {

using Complex = std::complex<double>;

/// Map x -> r(ix) for a unitary rational function r.
using UnitaryEvaluator = std::function<Complex(double)>;

/// Degree-(n,n) unitary rational function in barycentric form.
///
/// Stores n+1 real support nodes s_j in [-1,1] and a real rotated weight
/// vector v, normalized to unit Euclidean norm with the first nonzero entry
/// positive.  The complex denominator weights are w_j = v_j e^{-i omega s_j/2},
/// the numerator weights are their conjugates, so |r(ix)| = 1 in exact
/// arithmetic and r(i s_j) = e^{i omega s_j}.
class UnitaryBarycentric {
public:
    UnitaryBarycentric(double omega, std::vector<double> support_nodes,
                       std::vector<double> rotated_weights);

    int degree() const { return static_cast<int>(support_nodes_.size()) - 1; }
    double omega() const { return omega_; }
    const std::vector<double>& support_nodes() const { return support_nodes_; }
    const std::vector<double>& rotated_weights() const { return rotated_weights_; }

private:
    double omega_ = 0.0;
    std::vector<double> support_nodes_;
    std::vector<double> rotated_weights_;
};

/// Pole-phase representation r(z) = (-1)^m e^{i theta} prod (z+conj(s_j))/(z-s_j).
struct UnitaryPoleForm {
    std::vector<Complex> poles; // s_j = xi_j + i mu_j, xi_j != 0
    double theta = 0.0;
};

/// Sampled phase error delta(x) = g(x) - omega x on ascending abscissae.
struct PhaseCurve {
    std::vector<double> xs;
    std::vector<double> delta;
    bool wrap_flagged = false; // adjacent samples jumped by more than pi
};

/// Parameters of the change of variables from [-1,1] to [a,b],
/// rt(iy) = prefactor * r(i (y-gamma) * scale).
struct IntervalTransform {
    double gamma = 0.0;
    double scale = 1.0; // 1/omega
    Complex prefactor{1.0, 0.0};
};

struct StructuralReport {
    double unitarity_defect = 0.0; // max | |r(ix)| - 1 |
    double symmetry_defect = 0.0;  // max | r(-ix) - conj(r(ix)) |
    bool stability_ok = true;      // all finite poles in the open right half-plane
    bool irreducible_ok = true;    // min |conj(s_j) + s_l| above tolerance
};

/// w_j = v_j e^{-i omega s_j / 2}.
std::vector<Complex> derived_weights(double omega, std::span<const double> support_nodes,
                                     std::span<const double> rotated_weights);
std::vector<Complex> derived_weights(const UnitaryBarycentric& b);

/// Evaluate r(ix).  At a support node returns the interpolated datum
/// e^{i omega s_k}; throws SpuriousPoleError when the denominator collapses
/// below 1e-13 of its term-magnitude sum.
Complex eval_barycentric(const UnitaryBarycentric& b, double x);

UnitaryEvaluator make_evaluator(const UnitaryBarycentric& b);

/// Finite z-plane poles s_j = i*lambda_j from the (n+2)x(n+2) arrowhead
/// pencil of the barycentric denominator; sorted by imaginary part.
std::vector<Complex> poles(const UnitaryBarycentric& b);

/// Pole form with theta fitted so that e^{i g(0)} matches r(0), theta in (-pi, pi].
UnitaryPoleForm pole_form(const UnitaryBarycentric& b);

/// (-1)^m e^{i theta} prod (z+conj(s_j))/(z-s_j); throws PoleHitError near poles.
Complex eval_pole_form(const UnitaryPoleForm& p, Complex z);

/// g(x) = theta + 2 sum arctan((x-mu_j)/xi_j); satisfies e^{i g(x)} = r(ix).
double phase_function(const UnitaryPoleForm& p, double x);

/// Principal-branch phase error delta(x) = arg(r(ix) e^{-i omega x}) in (-pi, pi].
double phase_error(const UnitaryBarycentric& b, double x);

/// Sample the phase error on the given ascending abscissae; flags branch wraps
/// (adjacent jumps above pi) instead of unwrapping.
PhaseCurve make_phase_curve(const UnitaryBarycentric& b, std::span<const double> xs);

/// Transform parameters such that rt(iy) = e^{i gamma} r(i(y-gamma)/omega)
/// approximates e^{iy} on [a, b]; requires omega = (b-a)/2.
IntervalTransform transform_to_interval(const UnitaryBarycentric& b, double a, double bnd);

/// Evaluate the transformed approximant rt(iy).
Complex eval_transformed(const UnitaryBarycentric& b, const IntervalTransform& t, double y);

/// Unitarity/symmetry defects over a uniform grid plus pole-based
/// stability and irreducibility checks.  Report-only.
StructuralReport structural_checks(const UnitaryBarycentric& b, int grid_size);

} // namespace uniexp

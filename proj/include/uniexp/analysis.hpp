#pragma once

#include <vector>

#include "uniexp/brasil.hpp"
#include "uniexp/unitary.hpp"

namespace uniexp {

struct SupError {
    double value = 0.0;
    double argmax = 0.0;
};

/// Sup of |r(ix) - e^{i omega x}| over [-1,1]: coarse uniform scan plus
/// golden-section refinement around every scan-local maximum.  Always <= 2
/// for unitary evaluators.
SupError sup_error(const UnitaryEvaluator& r, double omega, int coarse = 4096);

/// All sign changes of the phase error on a dense scan, refined by bisection
/// to 1e-13.
std::vector<double> phase_zeros(const UnitaryEvaluator& r, double omega, int scan = 8192);

struct EquioscillationReport {
    std::vector<Extremum> extrema;  // endpoint extrema plus one per zero interval
    std::vector<double> zeros;
    double deviation = 0.0;         // relative spread of |delta| over the extrema
    bool alternating = false;       // exactly 2n+2 extrema with strictly alternating signs
    bool first_sign_positive = false;
    bool zero_count_ok = false;     // found exactly 2n+1 zeros
};

EquioscillationReport equioscillation_report(const UnitaryEvaluator& r, double omega, int n);

struct ErrorCurveRow {
    double x, re_err, im_err, abs_err, phase_err;
};

struct ErrorCurve {
    std::vector<ErrorCurveRow> samples; // Chebyshev-distributed, ascending in x
};

ErrorCurve error_curve(const UnitaryEvaluator& r, double omega, int m);

/// Local maxima of the |err| column (endpoints included); 2n+2 petal tips
/// for a converged best approximant.
int count_error_maxima(const ErrorCurve& curve);

/// Sorted-matching distances of a converged result to its asymptotic
/// references: Chebyshev nodes and Pade poles (omega -> 0), uniform nodes
/// -1+k/(n+1) and poles i(-1+2j/(n+1)) (omega -> (n+1)pi).
struct AsymptoticDiagnostics {
    double d_cheb = 0.0;        // nodes vs chebyshev_nodes(2n+1)
    double d_pade = 0.0;        // omega*poles vs pade_poles(n)
    double d_limit_nodes = 0.0; // nodes vs -1 + k/(n+1)
    double d_limit_poles = 0.0; // poles vs i(-1 + 2j/(n+1))
};

AsymptoticDiagnostics asymptotic_diagnostics(const BestApproximation& result);

} // namespace uniexp

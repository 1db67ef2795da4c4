#pragma once

#include <span>
#include <vector>

#include "uniexp/interpolation.hpp"
#include "uniexp/unitary.hpp"

namespace uniexp {

enum class Init {
    Auto,         // Chebyshev for omega <= n*pi, uniform-limit otherwise
    Chebyshev,    // chebyshev_nodes(2n+1)
    UniformLimit, // -1 + k/(n+1), k = 1..2n+1
    Warm,         // user-supplied nodes
};

/// How phase-error extrema were evaluated by the solver.
enum class PhaseMode {
    Direct,     // principal-branch arg of r(ix) e^{-i omega x}
    Asymptotic, // leading-order term -C prod(x - x_j), used when the true
                // phase error lies below the double-precision noise floor
};

struct SolverOptions {
    double eq_tolerance = 1e-3;       // relative deviation target
    int max_iterations = 200;
    double rescale_exponent = 0.35;   // gamma; extrema respond superlinearly to
                                      // interval length, so full steps oscillate
    double damping = 1.0;             // in (0,1]; halved automatically on failure
    Init init = Init::Auto;
    std::vector<double> warm_nodes;   // used when init == Init::Warm
    double extremum_search_tol = 1e-12;
};

struct Extremum {
    double x = 0.0;
    double value = 0.0; // signed phase-error value delta(x)
};

struct BestApproximation {
    UnitaryBarycentric approximant;
    std::vector<double> interpolation_nodes;    // 2n+1 zeros x_j of delta
    std::vector<double> equioscillation_points; // 2n+2 points, eta_1=-1, eta_{2n+2}=1
    std::vector<double> extrema_values;         // delta(eta_j)
    double max_error = 0.0;  // sup |r(ix) - e^{i omega x}|
    double estimate = 0.0;   // leading-order error estimate
    double deviation = 0.0;  // (max|delta| - min|delta|) / max|delta| over extrema
    int iterations = 0;
    bool converged = false;
    bool near_degenerate = false; // some pole magnitude exceeds 1e6
    PhaseMode phase_mode = PhaseMode::Direct;
};

/// One extremum of |delta| per interval of the partition induced by the
/// nodes; first and last extrema forced to -1 and 1.  Throws SignChangeError
/// when delta does not alternate across the claimed nodes.
std::vector<Extremum> local_extrema(const UnitaryBarycentric& r, std::span<const double> nodes,
                                    double search_tol = 1e-12);

struct RescaleResult {
    std::vector<double> nodes;
    bool exact_fit = false; // an extremum was exactly zero
};

/// BRASIL-style interval update: lengths scaled by (geomean/eps_k)^gamma and
/// renormalized to total length 2; new nodes are cumulative sums from -1.
RescaleResult rescale_intervals(std::span<const double> nodes,
                                std::span<const double> extremum_magnitudes, double gamma);

/// Unitary best approximation to e^{i omega x} on [-1,1] by iterative
/// interpolation-node adjustment until the phase error equioscillates.
/// Requires 0 < omega < (n+1)*pi.
BestApproximation best_approx(int n, double omega, const SolverOptions& opts = {});

/// Solve for each omega in ascending order, warm-starting from the previous
/// solution's nodes.  Per-omega failures yield non-converged entries with
/// NaN max_error; the sweep continues.
std::vector<BestApproximation> sweep(int n, const std::vector<double>& omegas,
                                     const SolverOptions& opts = {});

} // namespace uniexp

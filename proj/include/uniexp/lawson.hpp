#pragma once

#include "uniexp/unitary.hpp"

namespace uniexp {

struct LawsonOptions {
    int grid_size = 2000;       // Chebyshev-distributed test samples, > 2n+2
    int iterations = 50;
    double stagnation_tol = 1e-3; // stop on relative sup-error improvement below this
};

struct LawsonResult {
    UnitaryBarycentric approximant; // best iterate over the test grid
    int iterations = 0;
    double grid_error = 0.0; // sup residual over the test grid
};

/// AAA-Lawson variant with the n+1 support nodes fixed at Chebyshev nodes;
/// the rotated weight vector is the smallest right singular vector of the
/// sqrt(gamma)-row-weighted rotated Loewner matrix over the test grid, and
/// gamma_k <- gamma_k |r(i t_k) - e^{i omega t_k}| with renormalization.
/// Requires 0 < omega < (n+1)*pi.
LawsonResult aaa_lawson_cheb(int n, double omega, const LawsonOptions& opts = {});

} // namespace uniexp

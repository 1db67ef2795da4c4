#pragma once

#include <complex>
#include <vector>

#include "uniexp/unitary.hpp"

namespace uniexp {

/// Diagonal (n,n)-Pade approximant rhat(z) = phat(-z)/phat(z) to e^z,
/// stored through the denominator coefficients of phat with phat(0) = 1.
struct PadeApproximant {
    int degree = 0;
    std::vector<double> denominator; // phat coefficients, ascending powers
};

/// Coefficients of phat: (-1)^k (2n-k)! n! / ((2n)! k! (n-k)!), via log-gamma.
std::vector<double> pade_denominator(int n);

PadeApproximant make_pade(int n);

/// phat(-z)/phat(z) by Horner; throws PoleHitError at denominator zeros.
Complex pade_eval(int n, Complex z);
Complex pade_eval(const PadeApproximant& p, Complex z);

/// Roots of phat via a balanced companion matrix; all in the right half-plane.
std::vector<Complex> pade_poles(int n);

/// e^z - rhat(z) through the Taylor tail -sum_{m >= 2n+1} t_m z^m with
/// t_m = sum_j phat_j/(m-j)!; accurate even when the error is far below
/// the double-precision distance of e^z and rhat(z) themselves.
Complex pade_error_series(int n, Complex z);

/// (n!)^2 omega^{2n+1} / ((2n)! (2n+1)!), via log-gamma.
double pade_error_bound(int n, double omega);

/// 2 (n!)^2 / ((2n)! (2n+1)!) (omega/2)^{2n+1}; equals 2*pade_error_bound(n, omega/2).
double best_error_estimate(int n, double omega);

struct SuperlinearThresholds {
    double bound_based = 0.0;    // 4/e (n+1/2)
    double estimate_based = 0.0; // 8/e (n+1/2)
};

SuperlinearThresholds superlinear_thresholds(int n);

/// Quotient-of-Chebyshev baseline: rcheck = p^dag/p where p is the degree-n
/// discrete-least-squares Chebyshev approximation of e^{-i omega x/2} on a
/// 64(n+1)-point Chebyshev grid.  Unimodular on the imaginary axis by the
/// conjugate-quotient structure.
class ChebQuotient {
public:
    ChebQuotient(int n, double omega);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double omega() const { return omega_; }
    Complex eval(double x) const; // rcheck(ix)

private:
    double omega_ = 0.0;
    std::vector<Complex> coeffs_; // Chebyshev-basis coefficients of p(ix)
};

inline ChebQuotient cheb_quotient_baseline(int n, double omega) { return ChebQuotient(n, omega); }

UnitaryEvaluator make_pade_evaluator(int n, double omega);   // x -> rhat(i omega x)
UnitaryEvaluator make_evaluator(const ChebQuotient& q);

} // namespace uniexp

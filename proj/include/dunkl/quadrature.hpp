#pragma once

#include <functional>
#include <vector>

namespace dunkl {

/// Gauss-Laguerre rule for the weight t^alpha e^{-t} on (0, inf).
struct QuadratureRule {
    std::vector<double> nodes;    ///< strictly increasing, positive
    std::vector<double> weights;  ///< positive, summing to Gamma(alpha+1)
    double alpha = 0.0;
    int order = 0;

    /// sum_i w_i f(t_i)
    double apply(const std::function<double(double)>& f) const;
};

/// Golub-Welsch: eigenvalues of the Jacobi matrix (diag 2i+alpha+1,
/// off-diag sqrt(i(i+alpha))) are the nodes, Gamma(alpha+1) v_0^2 the weights.
QuadratureRule gauss_laguerre(int order, double alpha);

/// Result of an adaptive half-line integral.
struct IntegralEstimate {
    double value = 0.0;
    int order = 0;  ///< Gauss-Laguerre order at which the doubling converged
};

/// Integral over r in (0, inf) of r^{2p} e^{-a r^2} g(r^2) dr, evaluated as
/// (1/2) a^{-p-1/2} * int t^{p-1/2} e^{-t} g(t/a) dt with Gauss-Laguerre.
///
/// The order doubles from 8 until consecutive estimates differ by less than
/// 1e-12 (relative to max(1, |value|)), capped at 512. Throws NumericError
/// carrying the last two estimates if the cap is reached.
IntegralEstimate half_line_gaussian_integral(const std::function<double(double)>& g, double p, double a = 1.0);

/// Dunkl-measure moment: int_0^inf r^{2 mu} e^{-r^2} g(r^2) dr for mu > -1/2.
double dunkl_moment_integral(const std::function<double(double)>& g, double mu);

}  // namespace dunkl

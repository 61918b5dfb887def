#pragma once

namespace dunkl {

/// Natural log of Gamma(x) for x > 0.
double ln_gamma(double x);

/// Gamma(x) for x > 0, via exp(ln_gamma).
double gamma_fn(double x);

/// Associated Laguerre polynomial L_n^alpha(x), alpha > -1.
///
/// Forward three-term recurrence
///   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1},
/// which stays stable for the n <= ~100 used here; n <= 1 use the closed forms.
double laguerre(int n, double alpha, double x);

/// Fault-injection hook for verification harness tests: adds `delta` to the
/// (k + alpha) coefficient of the Laguerre recurrence. Zero restores the
/// correct recurrence. Process-wide.
void set_laguerre_perturbation(double delta);
double laguerre_perturbation();

/// Physicists' Hermite polynomial H_n(x) by recurrence.
double hermite(int n, double x);

/// Normalized generalized Hermite polynomial with n = 2m + p, p in {0, 1}:
///   H^mu_n(x) = (-1)^m sqrt(Gamma(m+1) / Gamma(m+p+mu+1/2)) x^p L_m^{mu-1/2+p}(x^2).
/// Requires mu > -1/2.
double generalized_hermite(int n, double mu, double x);

}  // namespace dunkl

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dunkl/dirac_dunkl.hpp"

namespace dunkl {

using complex = std::complex<double>;

/// Perelomov coherent-state parameters for a discrete-series index k.
struct CoherentParams {
    complex zeta;
    double k = 0.25;
    std::optional<complex> xi;  ///< displacement parameter, if zeta was derived from it

    /// Throws DomainError unless |zeta| < 1 and k > 0, and, when xi is set,
    /// zeta agrees with zeta_from_xi(xi).
    void validate() const;

    static CoherentParams from_xi(complex xi, double k);
};

/// Disc map zeta = (xi/|xi|) tanh|xi|, zero at xi = 0.
complex zeta_from_xi(complex xi);

/// Expansion coefficient (1-|zeta|^2)^k sqrt(Gamma(n+2k)/(n! Gamma(2k))) zeta^n.
complex coherent_coefficient(const CoherentParams& p, int n);

struct SeriesValue {
    complex value;
    int terms = 0;  ///< number of terms summed (n = 0 .. terms-1)
};

/// Truncated series sum_n c_n R_n^k(r) (half-density Sturmians). Terms are
/// added until the geometric tail bound C |zeta|^{N+1} / (1 - |zeta|), with
/// C the largest |term_m| / |zeta|^m seen so far, drops below tol. Throws
/// NumericError past max_terms.
SeriesValue coherent_series(const CoherentParams& p, double r, double tol = 1e-14, int max_terms = 20000);

/// The same series with exactly `terms` terms.
complex coherent_series_fixed(const CoherentParams& p, double r, int terms);

enum class ExponentVariant { paper, rederived };

const char* to_string(ExponentVariant v);

/// Closed form
///   [2 (1-|zeta|^2)^{2k} / Gamma(2k)]^{1/2} r^{2k-1/2} (1-zeta)^{-2k} exp(r^2 c(zeta))
/// with c = (1 + zeta) / (2 (zeta - 1)) (rederived from the Laguerre
/// generating function) or c = (1 - 3 zeta) / (2 (zeta - 1)) (as printed).
complex coherent_closed(const CoherentParams& p, double r, ExponentVariant variant = ExponentVariant::rederived);

/// Number of terms after which the squared coefficients miss less than
/// `mass_tol` of the unit total.
int series_terms_for_mass(const CoherentParams& p, double mass_tol = 1e-16);

/// int_0^inf |series|^2 dr by Gauss-Laguerre on a fixed truncation.
double coherent_series_norm(const CoherentParams& p);

/// int_0^inf |closed|^2 dr by Gauss-Laguerre scaled to the exact Gaussian
/// decay rate Re[(1+zeta)/(1-zeta)].
double coherent_closed_norm(const CoherentParams& p);

/// sum_n (1-|zeta|^2)^{2k} Gamma(n+2k)/(n! Gamma(2k)) |zeta|^{2n}, summed in
/// the log domain until the terms fall below 1e-20 of the running sum.
double binomial_identity_sum(double zeta_abs, double k);

/// Largest |<2n+2+p| a^dag^2/2 |2n+p> - sqrt((n+1)(n+2k))| over n <= n_max,
/// p = 0 (k = 1/4) and p = 1 (k = 3/4), together with the K0 diagonal
/// (a^dag a + 1/2)/2 against n + k. Zero when the Fock realization reproduces
/// the Sturmian ladder exactly.
double fock_realization_defect(int n_max);

/// Coefficients of exp(xi K+ - xi* K-) |k, 0> in the |k, n> basis, computed
/// on a basis truncated to `truncation` states with a scaled Taylor series.
std::vector<complex> displaced_lowest_state(complex xi, double k, int truncation);

/// Coherent spinor for a parity case: case A puts the k1+ (even) profile in
/// the upper component and the k2- (odd) profile in the lower one; case B
/// swaps them. Each profile is a unit-norm coherent state, weighted by the
/// two free constants (default 1/sqrt2 each, so the joint norm is 1).
struct CoherentSpinor {
    ParityCase case_id = ParityCase::A;
    double mu = 0.0;
    complex zeta;
    double upper_k = 0.0;
    double lower_k = 0.0;
    complex upper_constant;
    complex lower_constant;

    complex upper(double r) const;
    complex lower(double r) const;
};

CoherentSpinor coherent_spinor(ParityCase c, const PhysParams& params, complex zeta);
CoherentSpinor coherent_spinor(ParityCase c, const PhysParams& params, complex zeta, complex upper_constant,
                               complex lower_constant);

/// Joint norm int_0^inf (|upper|^2 + |lower|^2) dr by quadrature.
double joint_norm(const CoherentSpinor& s);

}  // namespace dunkl

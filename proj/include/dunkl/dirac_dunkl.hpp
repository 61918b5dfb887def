#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/dunkl_calculus.hpp"
#include "dunkl/su11.hpp"

namespace dunkl {

/// Sign of the energy eigenvalue.
enum class Branch { plus, minus };

/// Parity assignment of the spinor components.
///  A: Psi1 even, Psi2 odd (phase phi = 0)
///  B: Psi1 odd,  Psi2 even (phase phi = pi)
enum class ParityCase { A, B };

const char* to_string(Branch b);
const char* to_string(ParityCase c);

/// Dimensionless parameters: lengths in b = sqrt(hbar/(m omega)), energies in
/// m c^2, kappa = hbar omega / (m c^2).
struct PhysParams {
    double mu = 0.0;
    double kappa = 1.0;
    Branch branch = Branch::plus;

    /// Throws DomainError unless mu > -1/2 and kappa > 0.
    void validate() const;
    double sign() const { return branch == Branch::plus ? 1.0 : -1.0; }
};

struct ParitySector {
    ParityCase case_id = ParityCase::A;
    double phi = 0.0;  ///< phase of the parity operator e^{i phi} beta
};

ParitySector parity_sector(ParityCase c);

/// Signed energy in units of m c^2.
///  A: E^2 = 1 + 4 kappa n
///  B: E^2 = 1 + 4 kappa (n + 1/2 + mu)
double energy(ParityCase c, int n, const PhysParams& params);

/// The single-formula spectrum E^2 = 1 + 4 kappa n_mu with
/// n_mu = n + (mu/2 + 1/2)(1 - (-1)^n), as printed.
double unified_energy(int n, const PhysParams& params);

/// Interleaving consistent with both parity cases: E^2 = 1 + 2 kappa N_mu,
/// N_mu = N + mu (1 - (-1)^N). Even N = 2n is case A level n, odd N = 2n+1
/// is case B level n.
double interleaved_energy(int level, const PhysParams& params);

struct ReconciliationRow {
    int n = 0;
    double unified = 0.0;
    std::string matched_case;  ///< "A" or "B": nearest per-case level
    int matched_n = 0;
    double matched_value = 0.0;
    double delta = 0.0;  ///< unified - matched_value
    bool flagged = false;
};

/// Comparison of the single-formula spectrum for n = 0..levels-1 against the
/// union of case A and case B levels n = 0..levels-1, and of that union
/// against the interleaved formula. Discrepancies are reported, never
/// corrected.
struct ReconciliationReport {
    double mu = 0.0;
    double kappa = 0.0;
    int levels = 0;
    std::vector<ReconciliationRow> rows;
    std::vector<double> unified_values;      ///< sorted
    std::vector<double> union_values;        ///< sorted, 2*levels entries
    std::vector<double> interleaved_values;  ///< sorted, 2*levels entries
    bool unified_matches_union = false;      ///< as multisets over the first `levels` union values
    bool interleaving_matches_union = false;
    double max_unified_delta = 0.0;
    int flagged_rows = 0;
};

ReconciliationReport reconcile_unified_spectrum(const PhysParams& params, int levels);

/// One radial spinor component (weighted gauge = polynomial x Gaussian).
struct ComponentSpec {
    bool present = false;
    bool odd = false;  ///< odd components use the "-" realization with k2-
    int index = 0;     ///< Sturmian/Laguerre index
    double bargmann_k = 0.0;
};

/// Eigenspinor of the Dirac-Dunkl oscillator in a parity case.
///
/// Components are real radial profiles. The lower component carries the real
/// relative sign fixed by the coupled first-order equations with the stated
/// alpha, beta; the printed "-+ i" phase is kept as metadata only.
struct SpinorState {
    ParitySector sector;
    int n = 0;
    PhysParams params;
    double energy = 0.0;
    double upper_weight = 0.0;  ///< sqrt((E + 1) / 2E)
    double lower_weight = 0.0;  ///< sqrt((E - 1) / 2E)
    double lower_sign = 1.0;
    std::string printed_lower_phase;  ///< "-i" on the plus branch, "+i" on the minus branch
    ComponentSpec upper_spec;
    ComponentSpec lower_spec;

    double upper(double r, Gauge gauge = Gauge::half_density) const;
    double lower(double r, Gauge gauge = Gauge::half_density) const;

    /// Weighted-gauge polynomial parts p(x), component = p(x) e^{-x^2/2},
    /// including spinor weights and signs.
    PolyFunc upper_poly() const;
    PolyFunc lower_poly() const;
};

/// Case A: upper = R_n^{k1+}, lower = R_{n-1}^{k2-} (absent for n = 0).
/// Case B: upper = R_n^{k2-}, lower = R_n^{k1+}.
/// Case A with n = 0 on the minus branch has no state and throws DomainError.
SpinorState spinor(ParityCase c, int n, const PhysParams& params);

/// Unit-normalized weighted-gauge polynomial part of a Sturmian component.
PolyFunc component_polynomial(const ComponentSpec& spec, double mu);

/// Joint norm int_0^inf (Psi1^2 + Psi2^2) dr by Gauss-Laguerre.
double joint_norm(const SpinorState& s);

/// Max residuals of the second-order decoupled equations for each component,
/// using weighted-gauge samples and the su(1,1) finite differences. An absent
/// component contributes 0.
///
/// Throws PreconditionError if h > 0.01 or the tail mass of either component
/// beyond the grid exceeds 1e-6.
std::pair<double, double> decoupled_residual(ParityCase c, int n, const PhysParams& params,
                                             const HalfLineGrid& grid);

/// Relative coefficient defects of
///   (E - 1) Psi1 = sqrt(2 kappa) a_D^dag Psi2,
///   (E + 1) Psi2 = sqrt(2 kappa) a_D Psi1,
/// evaluated exactly on the polynomial parts.
std::pair<double, double> coupled_check(ParityCase c, int n, const PhysParams& params);

using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

/// alpha = [[0, -i], [i, 0]], beta = diag(1, -1).
struct DiracStructure {
    Matrix2 alpha;
    Matrix2 beta;

    DiracStructure();
    Matrix2 parity_op(double phi) const;
    /// max over |alpha beta + beta alpha|, |alpha^2 - 1|, |beta^2 - 1|
    double clifford_defect() const;
    /// |P^{-1} alpha P + alpha|
    double parity_conjugation_defect(double phi) const;
};

/// Max-norm of [H_D, P R] for the grid-discretized Dirac-Dunkl Hamiltonian
///   H_D = [[1, sqrt(kappa)(x - D)], [sqrt(kappa)(x + D), -1]]
/// with the grid Dunkl derivative and exact reflection.
double parity_commutator(const PhysParams& params, const SymmetricGrid& grid, double phi);

/// Whether a trial spinor satisfies Psi(x) = P Psi(-x) for phi = 0 or phi = pi.
struct ParityConsistency {
    double defect_phi0 = 0.0;   ///< relative max-norm of Psi - P R Psi at phi = 0
    double defect_phipi = 0.0;  ///< same at phi = pi
    bool consistent = false;
    double phi = 0.0;  ///< the matching phase when consistent
};

ParityConsistency parity_consistency(const GridFunc& psi1, const GridFunc& psi2, double tol = 1e-12);

/// mu = 0 comparison with the standard Dirac-Moshinsky oscillator.
struct MuZeroRecord {
    ParityCase case_id = ParityCase::A;
    int n = 0;
    int n_standard = 0;  ///< 2n for case A, 2n+1 for case B
    double energy_dunkl = 0.0;
    double energy_standard = 0.0;
    bool energies_equal = false;  ///< bitwise equality
    double upper_ratio = 0.0;     ///< Dunkl / Hermite-form upper component
    double lower_ratio = 0.0;
    double upper_ratio_spread = 0.0;  ///< max relative deviation of the ratio across abscissae
    double lower_ratio_spread = 0.0;
};

MuZeroRecord mu_zero_reduction(ParityCase c, int n, double kappa,
                               const std::vector<double>& abscissae = {0.3, 0.7, 1.1, 1.6, 2.2});

/// Energy E_N = sqrt(1 + 2 kappa N) of the standard oscillator (plus branch).
double standard_energy(int n_standard, double kappa);

/// Normalized full-line components of the standard eigenspinor (lambda = 1).
std::pair<double, double> standard_spinor(int n_standard, double kappa, double x);

}  // namespace dunkl

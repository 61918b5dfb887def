#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dunkl/dunkl_calculus.hpp"

namespace dunkl {

enum class RadialSector { even, odd };
enum class FullLineComponent { psi1, psi2 };

const char* to_string(RadialSector s);
const char* to_string(FullLineComponent c);

/// Real symmetric matrix, stored either as a tridiagonal (diag/offdiag) or
/// densely (row-major, dimension x dimension).
struct DiscretizedOperator {
    enum class Storage { tridiagonal, dense };

    Storage storage = Storage::tridiagonal;
    std::size_t dimension = 0;
    std::vector<double> diag;     ///< tridiagonal storage
    std::vector<double> offdiag;  ///< tridiagonal storage, dimension - 1 entries
    std::vector<double> dense;    ///< dense storage

    double h = 0.0;
    double r_max = 0.0;
    double mu = 0.0;
    std::string tag;  ///< e.g. "radial/even" or "full_line/psi1"

    double at(std::size_t i, std::size_t j) const;
    std::vector<double> apply(const std::vector<double>& v) const;
    /// max |M_ij - M_ji|; zero by construction.
    double asymmetry() const;
    std::vector<double> to_dense() const;
};

/// Minimum truncation radius for the radial oracle.
inline constexpr double kMinRadialExtent = 12.0;

/// Symmetric flux-form discretization of
///   -r^{-2m} (r^{2m} psi')' + r^2
/// on the staggered grid r_j = (j + 1/2) h, with m = mu for the even sector.
/// The odd sector operator -psi'' - (2mu/r) psi' + 2mu/r^2 psi + r^2 psi is
/// discretized through psi = r phi, which turns it into the same form with
/// m = mu + 1. Half-node weights W = r_{j+1/2}^{2m} (zero at r = 0), cell
/// weights V_j = (r_{j+1/2}^{2m+1} - r_{j-1/2}^{2m+1}) / ((2m+1) h), and the
/// symmetric form comes from the similarity transform diag(sqrt(V_j)).
/// Dirichlet at the outer edge.
///
/// Throws PreconditionError if r_max < 12.
DiscretizedOperator discretize_radial(RadialSector sector, double mu, const HalfLineGrid& grid);

/// Dense full-line operator for the decoupled component equations,
///   psi1: -D^2 + x^2 - 2mu R - 1     (eigenvalues 4n and 4n + 2 + 4mu)
///   psi2: -D^2 + x^2 + 2mu R + 1     (eigenvalues 4n + 2 + 4mu and 4n + 4)
/// in units where the eigenvalue is (E^2 - 1)/kappa. The reflection is the
/// exact index reversal J of the staggered grid; -D^2 + x^2 is assembled from
/// the even/odd radial blocks with the exact projectors (I +- J)/sqrt2, so the
/// (mu/x^2)(1 - R) coupling lives in the odd block.
DiscretizedOperator discretize_full_line(FullLineComponent component, double mu, const SymmetricGrid& grid);

/// Lowest `count` eigenvalues, ascending. Dense matrices are reduced by
/// Householder first. Throws NumericError on convergence failure.
std::vector<double> eigensolve_sym(const DiscretizedOperator& op, std::size_t count);

struct Eigenpair {
    double value = 0.0;
    std::vector<double> vector;  ///< unit 2-norm
    double residual = 0.0;       ///< ||M v - lambda v||_2
};

/// Lowest `count` eigenpairs: eigenvalues as above, vectors by inverse
/// iteration. Throws NumericError if a residual exceeds 1e-10 (relative to
/// max(1, |lambda|)).
std::vector<Eigenpair> eigenpairs(const DiscretizedOperator& op, std::size_t count);

struct ConvergenceStudy {
    std::vector<double> spacings;
    std::vector<double> values;
    std::vector<double> errors;
    double slope = 0.0;   ///< least-squares slope of log error vs log h
    bool monotone = true;  ///< errors strictly decrease under refinement
    std::string anomaly;   ///< description when not monotone
};

/// Error of eigenvalue `level` against `exact` on each grid, with the
/// log-log slope. Needs at least three grids.
ConvergenceStudy convergence_study(const std::function<DiscretizedOperator(const HalfLineGrid&)>& builder,
                                   std::size_t level, double exact, const std::vector<HalfLineGrid>& grids);

/// Radial convenience: exact value 4(level + k) with k = 1/4 + mu/2 (even)
/// or 3/4 + mu/2 (odd).
ConvergenceStudy convergence_study(RadialSector sector, double mu, std::size_t level,
                                   const std::vector<HalfLineGrid>& grids);

/// Closed-form radial eigenvalue 4(n + k).
double radial_exact_eigenvalue(RadialSector sector, double mu, int n);

/// Largest |[M, (I +- J)/2]| entry for a full-line operator.
double parity_projector_commutator(const DiscretizedOperator& op);

}  // namespace dunkl

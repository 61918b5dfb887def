#pragma once

#include <array>

#include "dunkl/dunkl_calculus.hpp"

namespace dunkl {

/// Which differential realization: "+" acts on even functions, "-" on odd ones.
enum class Sector { plus, minus };

/// Gauge of the Sturmian functions.
///  - half_density: R_n^k(r) = [2 Gamma(n+1)/Gamma(n+2k)]^{1/2} r^{2k-1/2} e^{-r^2/2} L_n^{2k-1}(r^2),
///    unit norm under dr.
///  - weighted: r^{-mu} R_n^k(r), unit norm under r^{2 mu} dr. These are the
///    pointwise eigenfunctions of the differential realizations.
enum class Gauge { half_density, weighted };

enum class Su11Op { K0, Kplus, Kminus };

const char* to_string(Sector s);
const char* to_string(Gauge g);

/// Both Bargmann roots of k(k-1) = casimir for a sector; element 0 is the
/// root kept for physics (k1+ = 1/4 + mu/2, k2- = 3/4 + mu/2).
std::array<double, 2> bargmann_roots(Sector sector, double mu);

/// (4mu^2 - 4mu - 3)/16 for plus, (4mu^2 + 4mu - 3)/16 for minus.
double casimir_value(Sector sector, double mu);

struct Su11Realization {
    Sector sector = Sector::plus;
    double mu = 0.0;
    double bargmann_k = 0.25;
    double casimir = -3.0 / 16.0;
};

/// The realization carrying the physical (positive, retained) Bargmann index.
Su11Realization physical_realization(Sector sector, double mu);

/// Result of a ladder operator on |k, n>: coefficient * |k, n_out>.
/// K- on n = 0 gives coefficient 0 and n_out = -1.
struct LadderAction {
    double coefficient = 0.0;
    int n_out = 0;
};

LadderAction sturmian_action(Su11Op op, int n, double k);

/// Sturmian function value at r > 0. The weighted gauge divides by r^mu.
double sturmian_eval(int n, double k, double r, Gauge gauge, double mu = 0.0);

/// Finite-difference application of K0, K+ or K- of the given realization to
/// weighted-gauge samples on a staggered half-line grid:
///   K0+ = (1/4)[-d^2 - (2mu/r) d + r^2]
///   K0- = (1/4)[-d^2 - (2mu/r) d + 2mu/r^2 + r^2]
///   K+- = (1/2)[+-r d - r^2 + 2 K0 +- (1/2 + mu)]
/// The ghost value at r = -h/2 comes from the sector parity. In the odd sector
/// the first-order and 1/r^2 terms are differenced together as 2mu (psi/r)',
/// which keeps the stencil second order at the first node.
HalfLineFunc apply_differential(Su11Op op, Sector sector, double mu, const HalfLineFunc& psi);

}  // namespace dunkl

namespace dunkl {

/// Max-norm of apply_differential(op) on the weighted-gauge Sturmian |k, n>
/// minus the algebraic ladder image, over all grid nodes, for the physical
/// index of the sector.
double ladder_realization_defect(Su11Op op, Sector sector, double mu, int n, const HalfLineGrid& grid);

}  // namespace dunkl

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace dunkl {

/// Spectrum of a real symmetric tridiagonal matrix.
struct TridiagonalEigen {
    std::vector<double> eigenvalues;       ///< ascending
    std::vector<double> first_components;  ///< first row of the eigenvector matrix, same order
};

/// Implicit-shift QL on the symmetric tridiagonal matrix with the given
/// diagonal and sub-diagonal (offdiag.size() == diag.size() - 1).
///
/// Only the first row of the eigenvector matrix is accumulated, which is all
/// Golub-Welsch needs and keeps the cost O(n^2). Throws NumericError once the
/// total sweep count exceeds 50 n.
TridiagonalEigen eigensolve_sym_tridiag(std::span<const double> diag, std::span<const double> offdiag,
                                        bool want_first_row = true);

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x);

/// Householder reduction of a dense symmetric n x n matrix (row-major) to
/// tridiagonal form. Returns (diag, offdiag).
std::pair<std::vector<double>, std::vector<double>> householder_tridiagonalize(std::vector<double> a,
                                                                                std::size_t n);

}  // namespace dunkl

#include "dunkl/numerical_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/tridiagonal.hpp"

namespace dunkl {

const char* to_string(RadialSector s)
{
    return s == RadialSector::even ? "even" : "odd";
}

const char* to_string(FullLineComponent c)
{
    return c == FullLineComponent::psi1 ? "psi1" : "psi2";
}

double DiscretizedOperator::at(std::size_t i, std::size_t j) const
{
    if (storage == Storage::dense) {
        return dense[i * dimension + j];
    }
    if (i == j) {
        return diag[i];
    }
    if (i + 1 == j) {
        return offdiag[i];
    }
    if (j + 1 == i) {
        return offdiag[j];
    }
    return 0.0;
}

std::vector<double> DiscretizedOperator::apply(const std::vector<double>& v) const
{
    std::vector<double> out(dimension, 0.0);
    if (storage == Storage::dense) {
        for (std::size_t i = 0; i < dimension; ++i) {
            const double* row = &dense[i * dimension];
            out[i] = std::inner_product(row, row + dimension, v.begin(), 0.0);
        }
        return out;
    }
    for (std::size_t i = 0; i < dimension; ++i) {
        out[i] = diag[i] * v[i];
        if (i > 0) {
            out[i] += offdiag[i - 1] * v[i - 1];
        }
        if (i + 1 < dimension) {
            out[i] += offdiag[i] * v[i + 1];
        }
    }
    return out;
}

double DiscretizedOperator::asymmetry() const
{
    if (storage == Storage::tridiagonal) {
        return 0.0;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t j = i + 1; j < dimension; ++j) {
            worst = std::max(worst, std::abs(dense[i * dimension + j] - dense[j * dimension + i]));
        }
    }
    return worst;
}

std::vector<double> DiscretizedOperator::to_dense() const
{
    if (storage == Storage::dense) {
        return dense;
    }
    std::vector<double> out(dimension * dimension, 0.0);
    for (std::size_t i = 0; i < dimension; ++i) {
        out[i * dimension + i] = diag[i];
        if (i + 1 < dimension) {
            out[i * dimension + i + 1] = offdiag[i];
            out[(i + 1) * dimension + i] = offdiag[i];
        }
    }
    return out;
}

double radial_exact_eigenvalue(RadialSector sector, double mu, int n)
{
    const double k = (sector == RadialSector::even) ? 0.25 + 0.5 * mu : 0.75 + 0.5 * mu;
    return 4.0 * (n + k);
}

DiscretizedOperator discretize_radial(RadialSector sector, double mu, const HalfLineGrid& grid)
{
    require_dunkl_mu(mu, "discretize_radial");
    if (grid.count < 4 || !(grid.h > 0.0)) {
        throw PreconditionError("discretize_radial: grid needs at least 4 nodes and positive spacing");
    }
    if (grid.r_max() < kMinRadialExtent) {
        std::ostringstream msg;
        msg << "discretize_radial: r_max = " << grid.r_max() << " < " << kMinRadialExtent
            << " truncates the ground state beyond 1e-8";
        throw PreconditionError(msg.str());
    }
    const double m = (sector == RadialSector::even) ? mu : mu + 1.0;
    const double h = grid.h;
    const std::size_t n = grid.size();

    // half_weight[j] = W at r_{j-1/2}; W at r = 0 is zero (natural condition).
    std::vector<double> half_weight(n + 1, 0.0);
    for (std::size_t j = 1; j <= n; ++j) {
        half_weight[j] = std::pow(j * h, 2.0 * m);
    }
    std::vector<double> volume(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double hi = std::pow((j + 1.0) * h, 2.0 * m + 1.0);
        const double lo = (j == 0) ? 0.0 : std::pow(static_cast<double>(j) * h, 2.0 * m + 1.0);
        volume[j] = (hi - lo) / ((2.0 * m + 1.0) * h);
    }

    DiscretizedOperator op;
    op.storage = DiscretizedOperator::Storage::tridiagonal;
    op.dimension = n;
    op.h = h;
    op.r_max = grid.r_max();
    op.mu = mu;
    op.tag = std::string("radial/") + to_string(sector);
    op.diag.resize(n);
    op.offdiag.resize(n - 1);
    const double h2 = h * h;
    for (std::size_t j = 0; j < n; ++j) {
        const double r = grid.point(j);
        op.diag[j] = (half_weight[j + 1] + half_weight[j]) / (h2 * volume[j]) + r * r;
        if (j + 1 < n) {
            op.offdiag[j] = -half_weight[j + 1] / (h2 * std::sqrt(volume[j] * volume[j + 1]));
        }
    }
    return op;
}

DiscretizedOperator discretize_full_line(FullLineComponent component, double mu, const SymmetricGrid& grid)
{
    require_dunkl_mu(mu, "discretize_full_line");
    const HalfLineGrid half(grid.h, grid.n_half);
    const DiscretizedOperator even = discretize_radial(RadialSector::even, mu, half);
    const DiscretizedOperator odd = discretize_radial(RadialSector::odd, mu, half);

    const std::size_t n_half = half.size();
    const std::size_t dim = grid.size();
    const double s = (component == FullLineComponent::psi1) ? -1.0 : 1.0;

    DiscretizedOperator op;
    op.storage = DiscretizedOperator::Storage::dense;
    op.dimension = dim;
    op.h = grid.h;
    op.r_max = half.r_max();
    op.mu = mu;
    op.tag = std::string("full_line/") + to_string(component);
    op.dense.assign(dim * dim, 0.0);

    // Index i on the full grid sits at half-line node a(i) on side sigma(i):
    // x_i = sigma(i) r_{a(i)}.
    const auto node = [&](std::size_t i) {
        return i >= n_half ? i - n_half : n_half - 1 - i;
    };
    const auto side = [&](std::size_t i) { return i >= n_half ? 1.0 : -1.0; };

    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t a = node(i);
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t b = node(j);
            const std::size_t lo = std::min(a, b);
            const std::size_t hi = std::max(a, b);
            if (hi - lo > 1) {
                continue;
            }
            const double te = even.at(a, b);
            const double to = odd.at(a, b);
            op.dense[i * dim + j] = 0.5 * (te + side(i) * side(j) * to);
        }
        op.dense[i * dim + i] += s;
        op.dense[i * dim + grid.reflected(i)] += s * 2.0 * mu;
    }
    return op;
}

namespace {

std::vector<double> all_eigenvalues(const DiscretizedOperator& op)
{
    if (op.storage == DiscretizedOperator::Storage::tridiagonal) {
        return eigensolve_sym_tridiag(op.diag, op.offdiag, false).eigenvalues;
    }
    const auto [d, e] = householder_tridiagonalize(op.dense, op.dimension);
    return eigensolve_sym_tridiag(d, e, false).eigenvalues;
}

// Solve (M - sigma I) x = b by Gaussian elimination with partial pivoting.
// Exactly zero pivots are replaced by a tiny multiple of the matrix scale,
// which is the standard inverse-iteration safeguard.
std::vector<double> shifted_solve(const DiscretizedOperator& op, double sigma, std::vector<double> b)
{
    const std::size_t n = op.dimension;
    std::vector<double> a = op.to_dense();
    double scale = 0.0;
    for (double v : a) {
        scale = std::max(scale, std::abs(v));
    }
    const double tiny = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] -= sigma;
    }
    // Bandwidth after pivoting stays bounded for tridiagonal input, but the
    // dense path is simple and the oracle sizes are modest.
    const std::size_t band = (op.storage == DiscretizedOperator::Storage::tridiagonal) ? 2 : n;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t last = std::min(n, k + band);
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < last; ++i) {
            if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) {
                pivot = i;
            }
        }
        if (pivot != k) {
            for (std::size_t j = k; j < std::min(n, k + 2 * band); ++j) {
                std::swap(a[k * n + j], a[pivot * n + j]);
            }
            std::swap(b[k], b[pivot]);
        }
        if (a[k * n + k] == 0.0) {
            a[k * n + k] = tiny;
        }
        for (std::size_t i = k + 1; i < last; ++i) {
            const double f = a[i * n + k] / a[k * n + k];
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = k; j < std::min(n, k + 2 * band); ++j) {
                a[i * n + j] -= f * a[k * n + j];
            }
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double sum = b[k];
        for (std::size_t j = k + 1; j < std::min(n, k + 2 * band); ++j) {
            sum -= a[k * n + j] * x[j];
        }
        x[k] = sum / a[k * n + k];
    }
    return x;
}

double normalize(std::vector<double>& v)
{
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) {
        x /= norm;
    }
    return norm;
}

}  // namespace

std::vector<double> eigensolve_sym(const DiscretizedOperator& op, std::size_t count)
{
    if (count > op.dimension) {
        throw PreconditionError("eigensolve_sym: count exceeds the dimension");
    }
    std::vector<double> values = all_eigenvalues(op);
    values.resize(count);
    return values;
}

std::vector<Eigenpair> eigenpairs(const DiscretizedOperator& op, std::size_t count)
{
    const std::vector<double> values = eigensolve_sym(op, count);
    const std::size_t n = op.dimension;
    std::vector<Eigenpair> out;
    for (std::size_t p = 0; p < count; ++p) {
        Eigenpair pair;
        pair.value = values[p];
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + static_cast<double>(p));
        }
        const double tol = 1e-10 * std::max(1.0, std::abs(pair.value));
        for (int iter = 0; iter < 8; ++iter) {
            // Deflate earlier vectors of the same cluster so degenerate
            // eigenvalues receive orthogonal vectors.
            for (const Eigenpair& prev : out) {
                if (std::abs(prev.value - pair.value) < 1e-8 * std::max(1.0, std::abs(pair.value))) {
                    const double c = std::inner_product(v.begin(), v.end(), prev.vector.begin(), 0.0);
                    for (std::size_t i = 0; i < n; ++i) {
                        v[i] -= c * prev.vector[i];
                    }
                }
            }
            normalize(v);
            v = shifted_solve(op, pair.value, v);
            normalize(v);
            const std::vector<double> mv = op.apply(v);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = mv[i] - pair.value * v[i];
                res += d * d;
            }
            pair.residual = std::sqrt(res);
            if (pair.residual <= tol && iter >= 1) {
                break;
            }
        }
        if (pair.residual > tol) {
            std::ostringstream msg;
            msg << "eigenpairs: residual " << pair.residual << " for eigenvalue " << pair.value;
            throw NumericError(msg.str());
        }
        pair.vector = std::move(v);
        out.push_back(std::move(pair));
    }
    return out;
}

ConvergenceStudy convergence_study(const std::function<DiscretizedOperator(const HalfLineGrid&)>& builder,
                                   std::size_t level, double exact, const std::vector<HalfLineGrid>& grids)
{
    if (grids.size() < 3) {
        throw PreconditionError("convergence_study: need at least three grids");
    }
    ConvergenceStudy study;
    for (const HalfLineGrid& g : grids) {
        const std::vector<double> values = eigensolve_sym(builder(g), level + 1);
        study.spacings.push_back(g.h);
        study.values.push_back(values[level]);
        study.errors.push_back(std::abs(values[level] - exact));
    }
    for (std::size_t i = 1; i < study.errors.size(); ++i) {
        if (!(study.errors[i] < study.errors[i - 1])) {
            study.monotone = false;
            std::ostringstream msg;
            msg << "error did not decrease from h = " << study.spacings[i - 1] << " to h = " << study.spacings[i];
            study.anomaly = msg.str();
            break;
        }
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < study.errors.size(); ++i) {
        if (!(study.errors[i] > 0.0)) {
            continue;
        }
        const double x = std::log(study.spacings[i]);
        const double y = std::log(study.errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    if (used >= 2) {
        const double m = static_cast<double>(used);
        study.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    } else if (study.anomaly.empty()) {
        study.anomaly = "fewer than two nonzero errors";
    }
    return study;
}

ConvergenceStudy convergence_study(RadialSector sector, double mu, std::size_t level,
                                   const std::vector<HalfLineGrid>& grids)
{
    return convergence_study([&](const HalfLineGrid& g) { return discretize_radial(sector, mu, g); }, level,
                             radial_exact_eigenvalue(sector, mu, static_cast<int>(level)), grids);
}

double parity_projector_commutator(const DiscretizedOperator& op)
{
    const std::size_t n = op.dimension;
    // [M, (I +- J)/2] = +-[M, J]/2 and (MJ)_{ij} = M_{i, n-1-j}.
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double mj = op.at(i, n - 1 - j);
            const double jm = op.at(n - 1 - i, j);
            worst = std::max(worst, 0.5 * std::abs(mj - jm));
        }
    }
    return worst;
}

}  // namespace dunkl

#include "dunkl/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

TridiagonalEigen eigensolve_sym_tridiag(std::span<const double> diag, std::span<const double> offdiag,
                                        bool want_first_row)
{
    const std::size_t n = diag.size();
    if (n == 0) {
        return {};
    }
    if (offdiag.size() + 1 != n) {
        throw std::invalid_argument("eigensolve_sym_tridiag: offdiag must have length diag.size() - 1");
    }

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(n, 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());
    std::vector<double> z;
    if (want_first_row) {
        z.assign(n, 0.0);
        z[0] = 1.0;
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t max_sweeps = 50 * n;
    std::size_t sweeps = 0;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++sweeps > max_sweeps) {
                throw NumericError("eigensolve_sym_tridiag: no convergence after " + std::to_string(sweeps - 1) +
                                   " QL sweeps (n = " + std::to_string(n) + ")");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (want_first_row) {
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    TridiagonalEigen out;
    out.eigenvalues.reserve(n);
    for (std::size_t idx : order) {
        out.eigenvalues.push_back(d[idx]);
    }
    if (want_first_row) {
        out.first_components.reserve(n);
        for (std::size_t idx : order) {
            out.first_components.push_back(z[idx]);
        }
    }
    return out;
}

std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x)
{
    const std::size_t n = diag.size();
    std::size_t count = 0;
    double q = 1.0;
    constexpr double tiny = std::numeric_limits<double>::min();
    for (std::size_t i = 0; i < n; ++i) {
        const double b2 = (i == 0) ? 0.0 : offdiag[i - 1] * offdiag[i - 1];
        q = diag[i] - x - ((i == 0) ? 0.0 : b2 / q);
        if (q == 0.0) {
            q = -tiny;
        }
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

std::pair<std::vector<double>, std::vector<double>> householder_tridiagonalize(std::vector<double> a,
                                                                                std::size_t n)
{
    if (a.size() != n * n) {
        throw std::invalid_argument("householder_tridiagonalize: matrix size mismatch");
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    std::vector<double> v(n);
    std::vector<double> w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            norm2 += at(i, k) * at(i, k);
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) {
            continue;
        }
        const double x0 = at(k + 1, k);
        const double alpha = (x0 > 0.0) ? -norm : norm;
        // v = x - alpha e1, normalized
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = at(i, k);
        }
        v[k + 1] -= alpha;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        const double vinv = 1.0 / std::sqrt(vnorm2);
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] *= vinv;
        }
        // w = A v on the trailing block
        double vw = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            double sum = 0.0;
            const double* row = &a[i * n];
            for (std::size_t j = k + 1; j < n; ++j) {
                sum += row[j] * v[j];
            }
            w[i] = sum;
            vw += v[i] * sum;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            w[i] -= vw * v[i];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double* row = &a[i * n];
            const double vi2 = 2.0 * v[i];
            const double wi2 = 2.0 * w[i];
            for (std::size_t j = k + 1; j < n; ++j) {
                row[j] -= vi2 * w[j] + wi2 * v[j];
            }
        }
        at(k + 1, k) = alpha;
        at(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) {
            at(i, k) = 0.0;
            at(k, i) = 0.0;
        }
    }

    std::vector<double> diag(n);
    std::vector<double> off(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = at(i, i);
        if (i + 1 < n) {
            off[i] = at(i + 1, i);
        }
    }
    return {std::move(diag), std::move(off)};
}

}  // namespace dunkl

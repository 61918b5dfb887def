#include "dunkl/su11.hpp"

#include <cmath>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

const char* to_string(Sector s)
{
    return s == Sector::plus ? "plus" : "minus";
}

const char* to_string(Gauge g)
{
    return g == Gauge::half_density ? "half_density" : "weighted";
}

std::array<double, 2> bargmann_roots(Sector sector, double mu)
{
    require_dunkl_mu(mu, "bargmann_roots");
    if (sector == Sector::plus) {
        return {0.25 + 0.5 * mu, 0.75 - 0.5 * mu};
    }
    return {0.75 + 0.5 * mu, 0.25 - 0.5 * mu};
}

double casimir_value(Sector sector, double mu)
{
    require_dunkl_mu(mu, "casimir_value");
    const double linear = (sector == Sector::plus) ? -4.0 * mu : 4.0 * mu;
    return (4.0 * mu * mu + linear - 3.0) / 16.0;
}

Su11Realization physical_realization(Sector sector, double mu)
{
    return {sector, mu, bargmann_roots(sector, mu)[0], casimir_value(sector, mu)};
}

LadderAction sturmian_action(Su11Op op, int n, double k)
{
    if (n < 0) {
        throw DomainError("sturmian_action: n must be non-negative");
    }
    if (!(k > 0.0)) {
        throw DomainError("sturmian_action: Bargmann index must be positive");
    }
    switch (op) {
    case Su11Op::K0:
        return {k + n, n};
    case Su11Op::Kplus:
        return {std::sqrt((n + 1.0) * (2.0 * k + n)), n + 1};
    case Su11Op::Kminus:
        if (n == 0) {
            return {0.0, -1};
        }
        return {std::sqrt(n * (2.0 * k + n - 1.0)), n - 1};
    }
    return {};
}

double sturmian_eval(int n, double k, double r, Gauge gauge, double mu)
{
    if (n < 0 || !(k > 0.0)) {
        throw DomainError("sturmian_eval: need n >= 0 and k > 0");
    }
    if (!(r > 0.0)) {
        throw DomainError("sturmian_eval: r must be positive");
    }
    const double log_norm = 0.5 * (std::log(2.0) + ln_gamma(n + 1.0) - ln_gamma(n + 2.0 * k));
    double power = 2.0 * k - 0.5;
    if (gauge == Gauge::weighted) {
        require_dunkl_mu(mu, "sturmian_eval");
        power -= mu;
    }
    const double t = r * r;
    return std::exp(log_norm - 0.5 * t) * std::pow(r, power) * laguerre(n, 2.0 * k - 1.0, t);
}

namespace {

// Second-order one-sided stencils at the outer edge j = M-1.
double outer_first(const std::vector<double>& f, double h)
{
    const std::size_t n = f.size();
    return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
}

double outer_second(const std::vector<double>& f, double h)
{
    const std::size_t n = f.size();
    return (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (h * h);
}

// First and second derivative of f on the staggered half-line grid; f is
// extended across r = 0 with the given parity.
void differentiate(const std::vector<double>& f, double h, double parity, std::vector<double>& d1,
                   std::vector<double>& d2)
{
    const std::size_t n = f.size();
    d1.assign(n, 0.0);
    d2.assign(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double left = (j == 0) ? parity * f[0] : f[j - 1];
        d1[j] = (f[j + 1] - left) / (2.0 * h);
        d2[j] = (f[j + 1] - 2.0 * f[j] + left) / (h * h);
    }
    d1[n - 1] = outer_first(f, h);
    d2[n - 1] = outer_second(f, h);
}

}  // namespace

HalfLineFunc apply_differential(Su11Op op, Sector sector, double mu, const HalfLineFunc& psi)
{
    require_dunkl_mu(mu, "apply_differential");
    const HalfLineGrid& grid = psi.grid;
    const std::size_t n = psi.values.size();
    const double h = grid.h;

    std::vector<double> d1;
    std::vector<double> d2;
    const double parity = (sector == Sector::plus) ? 1.0 : -1.0;
    differentiate(psi.values, h, parity, d1, d2);

    // Combined first-order term: (2mu/r) psi' for plus, 2mu (psi/r)' for minus.
    std::vector<double> drift(n);
    if (sector == Sector::plus) {
        for (std::size_t j = 0; j < n; ++j) {
            drift[j] = 2.0 * mu / grid.point(j) * d1[j];
        }
    } else {
        std::vector<double> reduced(n);
        for (std::size_t j = 0; j < n; ++j) {
            reduced[j] = psi.values[j] / grid.point(j);
        }
        std::vector<double> rd1;
        std::vector<double> rd2;
        differentiate(reduced, h, 1.0, rd1, rd2);
        for (std::size_t j = 0; j < n; ++j) {
            drift[j] = 2.0 * mu * rd1[j];
        }
    }

    std::vector<double> k0(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = grid.point(j);
        k0[j] = 0.25 * (-d2[j] - drift[j] + r * r * psi.values[j]);
    }
    if (op == Su11Op::K0) {
        return HalfLineFunc(grid, std::move(k0));
    }

    const double s = (op == Su11Op::Kplus) ? 1.0 : -1.0;
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = grid.point(j);
        out[j] = 0.5 * (s * r * d1[j] - r * r * psi.values[j] + 2.0 * k0[j] + s * (0.5 + mu) * psi.values[j]);
    }
    return HalfLineFunc(grid, std::move(out));
}

double ladder_realization_defect(Su11Op op, Sector sector, double mu, int n, const HalfLineGrid& grid)
{
    const double k = physical_realization(sector, mu).bargmann_k;
    const auto sturmian = [&](int m) {
        return HalfLineFunc::sample(grid, [&](double r) { return sturmian_eval(m, k, r, Gauge::weighted, mu); });
    };
    const HalfLineFunc applied = apply_differential(op, sector, mu, sturmian(n));
    const LadderAction action = sturmian_action(op, n, k);
    double worst = 0.0;
    if (action.n_out < 0) {
        for (double v : applied.values) {
            worst = std::max(worst, std::abs(v));
        }
        return worst;
    }
    const HalfLineFunc target = sturmian(action.n_out);
    for (std::size_t j = 0; j < applied.values.size(); ++j) {
        worst = std::max(worst, std::abs(applied.values[j] - action.coefficient * target.values[j]));
    }
    return worst;
}

}  // namespace dunkl

#include "dunkl/special_functions.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

double ln_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: argument must be positive and finite, got " + std::to_string(x));
    }
    return std::lgamma(x);
}

double gamma_fn(double x)
{
    return std::exp(ln_gamma(x));
}

namespace {

std::atomic<double> g_laguerre_perturbation{0.0};

}  // namespace

void set_laguerre_perturbation(double delta)
{
    g_laguerre_perturbation.store(delta, std::memory_order_relaxed);
}

double laguerre_perturbation()
{
    return g_laguerre_perturbation.load(std::memory_order_relaxed);
}

double laguerre(int n, double alpha, double x)
{
    if (n < 0) {
        throw DomainError("laguerre: degree must be non-negative");
    }
    if (!(alpha > -1.0)) {
        throw DomainError("laguerre: alpha must exceed -1, got " + std::to_string(alpha));
    }
    if (n == 0) {
        return 1.0;
    }
    const double perturbation = g_laguerre_perturbation.load(std::memory_order_relaxed);
    double prev = 1.0;
    double curr = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next =
            ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha + perturbation) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

double hermite(int n, double x)
{
    if (n < 0) {
        throw DomainError("hermite: degree must be non-negative");
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * curr - 2.0 * k * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

double generalized_hermite(int n, double mu, double x)
{
    if (n < 0) {
        throw DomainError("generalized_hermite: degree must be non-negative");
    }
    require_dunkl_mu(mu, "generalized_hermite");
    const int m = n / 2;
    const int p = n % 2;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double norm = std::exp(0.5 * (ln_gamma(m + 1.0) - ln_gamma(m + p + mu + 0.5)));
    const double xp = (p == 1) ? x : 1.0;
    return sign * norm * xp * laguerre(m, mu - 0.5 + p, x * x);
}

}  // namespace dunkl

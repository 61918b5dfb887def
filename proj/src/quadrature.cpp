#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/tridiagonal.hpp"

namespace dunkl {

namespace {

constexpr int kStartOrder = 8;
constexpr int kMaxOrder = 512;
constexpr double kConvergenceTol = 1e-12;

QuadratureRule build_gauss_laguerre(int order, double alpha)
{
    std::vector<double> diag(static_cast<std::size_t>(order));
    std::vector<double> off(static_cast<std::size_t>(order - 1));
    for (int i = 0; i < order; ++i) {
        diag[static_cast<std::size_t>(i)] = 2.0 * i + alpha + 1.0;
    }
    for (int i = 1; i < order; ++i) {
        off[static_cast<std::size_t>(i - 1)] = std::sqrt(i * (i + alpha));
    }
    const TridiagonalEigen eig = eigensolve_sym_tridiag(diag, off, true);
    const double mass = gamma_fn(alpha + 1.0);

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.order = order;
    rule.nodes = eig.eigenvalues;
    rule.weights.resize(eig.first_components.size());
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
        rule.weights[i] = mass * eig.first_components[i] * eig.first_components[i];
    }
    return rule;
}

// Rules are immutable once built; the cache only avoids repeating the
// O(n^2) eigensolve for the handful of (order, alpha) pairs in use.
const QuadratureRule& cached_rule(int order, double alpha)
{
    static std::mutex mutex;
    static std::map<std::pair<int, double>, QuadratureRule> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(order, alpha);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_gauss_laguerre(order, alpha)).first;
    }
    return it->second;
}

}  // namespace

double QuadratureRule::apply(const std::function<double(double)>& f) const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (weights[i] != 0.0) {
            sum += weights[i] * f(nodes[i]);
        }
    }
    return sum;
}

QuadratureRule gauss_laguerre(int order, double alpha)
{
    if (order < 1) {
        throw DomainError("gauss_laguerre: order must be >= 1");
    }
    if (!(alpha > -1.0)) {
        throw DomainError("gauss_laguerre: alpha must exceed -1");
    }
    return build_gauss_laguerre(order, alpha);
}

IntegralEstimate half_line_gaussian_integral(const std::function<double(double)>& g, double p, double a)
{
    if (!(p > -0.5)) {
        throw DomainError("half_line_gaussian_integral: power p must exceed -1/2");
    }
    if (!(a > 0.0)) {
        throw DomainError("half_line_gaussian_integral: Gaussian scale must be positive");
    }
    const double alpha = p - 0.5;
    const double prefactor = 0.5 * std::pow(a, -p - 0.5);
    auto estimate = [&](int order) {
        const QuadratureRule& rule = cached_rule(order, alpha);
        return prefactor * rule.apply([&](double t) { return g(t / a); });
    };

    double previous = estimate(kStartOrder);
    for (int order = 2 * kStartOrder; order <= kMaxOrder; order *= 2) {
        const double current = estimate(order);
        if (std::abs(current - previous) < kConvergenceTol * std::max(1.0, std::abs(current))) {
            return {current, order};
        }
        if (order == kMaxOrder) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "half_line_gaussian_integral: no convergence by order " << kMaxOrder << " (last estimates "
                << previous << ", " << current << ")";
            throw NumericError(msg.str());
        }
        previous = current;
    }
    return {previous, kMaxOrder};
}

double dunkl_moment_integral(const std::function<double(double)>& g, double mu)
{
    require_dunkl_mu(mu, "dunkl_moment_integral");
    return half_line_gaussian_integral(g, mu, 1.0).value;
}

}  // namespace dunkl

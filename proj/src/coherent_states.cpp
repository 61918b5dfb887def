#include "dunkl/coherent_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

void require_disc(complex zeta, const char* where)
{
    if (!(std::abs(zeta) < 1.0)) {
        throw DomainError(std::string(where) + ": coherent-state parameter needs |zeta| < 1, got |zeta| = " +
                          std::to_string(std::abs(zeta)));
    }
}

// log of sqrt(Gamma(n+2k) / (n! Gamma(2k)))
double log_binomial_root(int n, double k)
{
    return 0.5 * (ln_gamma(n + 2.0 * k) - ln_gamma(n + 1.0) - ln_gamma(2.0 * k));
}

// Sturmian normalization sqrt(2 n! / Gamma(n+2k)) in the log domain.
double log_sturmian_norm(int n, double k)
{
    return 0.5 * (std::log(2.0) + ln_gamma(n + 1.0) - ln_gamma(n + 2.0 * k));
}

}  // namespace

void CoherentParams::validate() const
{
    require_disc(zeta, "CoherentParams");
    if (!(k > 0.0)) {
        throw DomainError("CoherentParams: Bargmann index k must be positive");
    }
    if (xi) {
        const complex expected = zeta_from_xi(*xi);
        if (std::abs(expected - zeta) > 1e-14 * std::max(1.0, std::abs(expected))) {
            throw DomainError("CoherentParams: zeta is not the disc image of xi");
        }
    }
}

CoherentParams CoherentParams::from_xi(complex xi, double k)
{
    CoherentParams p{zeta_from_xi(xi), k, xi};
    p.validate();
    return p;
}

complex zeta_from_xi(complex xi)
{
    const double m = std::abs(xi);
    if (m == 0.0) {
        return {0.0, 0.0};
    }
    return xi / m * std::tanh(m);
}

complex coherent_coefficient(const CoherentParams& p, int n)
{
    p.validate();
    if (n < 0) {
        throw DomainError("coherent_coefficient: n must be non-negative");
    }
    const double z2 = std::norm(p.zeta);
    const double mag = std::exp(p.k * std::log1p(-z2) + log_binomial_root(n, p.k));
    return mag * std::pow(p.zeta, n);
}

SeriesValue coherent_series(const CoherentParams& p, double r, double tol, int max_terms)
{
    p.validate();
    if (!(r > 0.0)) {
        throw DomainError("coherent_series: r must be positive");
    }
    const double z = std::abs(p.zeta);
    SeriesValue out;
    if (z == 0.0) {
        out.value = sturmian_eval(0, p.k, r, Gauge::half_density);
        out.terms = 1;
        return out;
    }
    double envelope = 0.0;
    for (int n = 0; n < max_terms; ++n) {
        const complex term = coherent_coefficient(p, n) * sturmian_eval(n, p.k, r, Gauge::half_density);
        out.value += term;
        out.terms = n + 1;
        envelope = std::max(envelope, std::abs(term) / std::pow(z, n));
        // A few terms before trusting the envelope: early Sturmian values can
        // vanish near a node and understate C.
        if (n >= 8 && envelope * std::pow(z, n + 1) / (1.0 - z) < tol) {
            return out;
        }
    }
    throw NumericError("coherent_series: tail bound above " + std::to_string(tol) + " after " +
                       std::to_string(max_terms) + " terms");
}

complex coherent_series_fixed(const CoherentParams& p, double r, int terms)
{
    p.validate();
    if (!(r > 0.0)) {
        throw DomainError("coherent_series_fixed: r must be positive");
    }
    complex sum;
    for (int n = 0; n < terms; ++n) {
        sum += coherent_coefficient(p, n) * sturmian_eval(n, p.k, r, Gauge::half_density);
    }
    return sum;
}

const char* to_string(ExponentVariant v)
{
    return v == ExponentVariant::paper ? "paper" : "rederived";
}

complex coherent_closed(const CoherentParams& p, double r, ExponentVariant variant)
{
    p.validate();
    if (!(r > 0.0)) {
        throw DomainError("coherent_closed: r must be positive");
    }
    const double k = p.k;
    const complex zeta = p.zeta;
    const double prefactor =
        std::exp(0.5 * (std::log(2.0) + 2.0 * k * std::log1p(-std::norm(zeta)) - ln_gamma(2.0 * k)));
    const complex numerator = (variant == ExponentVariant::rederived) ? 1.0 + zeta : 1.0 - 3.0 * zeta;
    const complex exponent = r * r * numerator / (2.0 * (zeta - 1.0));
    return prefactor * std::pow(r, 2.0 * k - 0.5) * std::exp(exponent - 2.0 * k * std::log(1.0 - zeta));
}

int series_terms_for_mass(const CoherentParams& p, double mass_tol)
{
    p.validate();
    const double z2 = std::norm(p.zeta);
    if (z2 == 0.0) {
        return 1;
    }
    // Missing mass is bounded by the next term over (1 - ratio) once the term
    // ratio (n+2k)/(n+1) |zeta|^2 has fallen below 1.
    double log_term = 2.0 * p.k * std::log1p(-z2);
    for (int n = 0; n < 100000; ++n) {
        const double ratio = (n + 2.0 * p.k) / (n + 1.0) * z2;
        const double next = std::exp(log_term) * ratio;
        if (ratio < 1.0 && next / (1.0 - ratio) < mass_tol) {
            return n + 1;
        }
        log_term += std::log(ratio);
    }
    throw NumericError("series_terms_for_mass: no truncation found");
}

double coherent_series_norm(const CoherentParams& p)
{
    const int terms = series_terms_for_mass(p, 1e-16);
    std::vector<complex> coeff(static_cast<std::size_t>(terms));
    for (int n = 0; n < terms; ++n) {
        coeff[static_cast<std::size_t>(n)] = coherent_coefficient(p, n) * std::exp(log_sturmian_norm(n, p.k));
    }
    // |series|^2 = r^{4k-1} e^{-r^2} |sum_n coeff_n L_n^{2k-1}(r^2)|^2
    const auto polynomial_part = [&](double t) {
        complex sum;
        for (int n = 0; n < terms; ++n) {
            sum += coeff[static_cast<std::size_t>(n)] * laguerre(n, 2.0 * p.k - 1.0, t);
        }
        return std::norm(sum);
    };
    return half_line_gaussian_integral(polynomial_part, 2.0 * p.k - 0.5).value;
}

double coherent_closed_norm(const CoherentParams& p)
{
    p.validate();
    const complex zeta = p.zeta;
    const double a = (1.0 - std::norm(zeta)) / std::norm(1.0 - zeta);
    const auto remainder = [&](double t) {
        const double r = std::sqrt(t);
        const double v = std::norm(coherent_closed(p, r));
        return v / (std::pow(r, 4.0 * p.k - 1.0) * std::exp(-a * t));
    };
    return half_line_gaussian_integral(remainder, 2.0 * p.k - 0.5, a).value;
}

double binomial_identity_sum(double zeta_abs, double k)
{
    if (!(zeta_abs >= 0.0 && zeta_abs < 1.0) || !(k > 0.0)) {
        throw DomainError("binomial_identity_sum: need 0 <= |zeta| < 1 and k > 0");
    }
    if (zeta_abs == 0.0) {
        return 1.0;
    }
    const double z2 = zeta_abs * zeta_abs;
    const double log_base = 2.0 * k * std::log1p(-z2);
    double sum = 0.0;
    double compensation = 0.0;
    for (int n = 0; n < 1000000; ++n) {
        const double term =
            std::exp(log_base + ln_gamma(n + 2.0 * k) - ln_gamma(n + 1.0) - ln_gamma(2.0 * k) + n * std::log(z2));
        const double y = term - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
        const double ratio = (n + 2.0 * k) / (n + 1.0) * z2;
        if (ratio < 1.0 && term < 1e-20 * sum) {
            return sum;
        }
    }
    throw NumericError("binomial_identity_sum: series did not settle");
}

double fock_realization_defect(int n_max)
{
    double worst = 0.0;
    for (int parity = 0; parity <= 1; ++parity) {
        const double k = parity == 0 ? 0.25 : 0.75;
        for (int n = 0; n <= n_max; ++n) {
            const double fock_n = 2.0 * n + parity;
            // a^dag^2 |m> = sqrt((m+1)(m+2)) |m+2>
            const double raise = std::sqrt((fock_n + 1.0) * (fock_n + 2.0)) / 2.0;
            const double ladder = sturmian_action(Su11Op::Kplus, n, k).coefficient;
            const double k0 = (fock_n + 0.5) / 2.0;
            const double k0_ladder = sturmian_action(Su11Op::K0, n, k).coefficient;
            worst = std::max({worst, std::abs(raise - ladder), std::abs(k0 - k0_ladder)});
            if (n > 0) {
                // a^2 |m> = sqrt(m(m-1)) |m-2>
                const double lower = std::sqrt(fock_n * (fock_n - 1.0)) / 2.0;
                worst = std::max(worst, std::abs(lower - sturmian_action(Su11Op::Kminus, n, k).coefficient));
            }
        }
    }
    return worst;
}

std::vector<complex> displaced_lowest_state(complex xi, double k, int truncation)
{
    if (truncation < 2 || !(k > 0.0)) {
        throw DomainError("displaced_lowest_state: need truncation >= 2 and k > 0");
    }
    const auto dim = static_cast<std::size_t>(truncation);
    // up[n] = <n+1|K+|n> = <n|K-|n+1>
    std::vector<double> up(dim - 1);
    double norm_bound = 0.0;
    for (std::size_t n = 0; n + 1 < dim; ++n) {
        up[n] = std::sqrt((n + 1.0) * (n + 2.0 * k));
        norm_bound = std::max(norm_bound, up[n]);
    }
    norm_bound *= 2.0 * std::abs(xi);

    const auto apply = [&](const std::vector<complex>& v) {
        std::vector<complex> out(dim);
        for (std::size_t n = 0; n < dim; ++n) {
            if (n > 0) {
                out[n] += xi * up[n - 1] * v[n - 1];
            }
            if (n + 1 < dim) {
                out[n] -= std::conj(xi) * up[n] * v[n + 1];
            }
        }
        return out;
    };

    const int steps = std::max(1, static_cast<int>(std::ceil(norm_bound / 0.5)));
    const double dt = 1.0 / steps;
    std::vector<complex> state(dim);
    state[0] = 1.0;
    for (int s = 0; s < steps; ++s) {
        std::vector<complex> term = state;
        std::vector<complex> next = state;
        for (int j = 1; j <= 60; ++j) {
            term = apply(term);
            double mag = 0.0;
            for (std::size_t n = 0; n < dim; ++n) {
                term[n] *= dt / j;
                next[n] += term[n];
                mag = std::max(mag, std::abs(term[n]));
            }
            if (mag < 1e-18) {
                break;
            }
        }
        state = std::move(next);
    }
    return state;
}

complex CoherentSpinor::upper(double r) const
{
    return upper_constant * coherent_closed(CoherentParams{zeta, upper_k, {}}, r);
}

complex CoherentSpinor::lower(double r) const
{
    return lower_constant * coherent_closed(CoherentParams{zeta, lower_k, {}}, r);
}

CoherentSpinor coherent_spinor(ParityCase c, const PhysParams& params, complex zeta)
{
    const double w = 1.0 / std::numbers::sqrt2;
    return coherent_spinor(c, params, zeta, w, w);
}

CoherentSpinor coherent_spinor(ParityCase c, const PhysParams& params, complex zeta, complex upper_constant,
                               complex lower_constant)
{
    params.validate();
    require_disc(zeta, "coherent_spinor");
    const double k_even = 0.25 + 0.5 * params.mu;
    const double k_odd = 0.75 + 0.5 * params.mu;
    CoherentSpinor s;
    s.case_id = c;
    s.mu = params.mu;
    s.zeta = zeta;
    s.upper_k = (c == ParityCase::A) ? k_even : k_odd;
    s.lower_k = (c == ParityCase::A) ? k_odd : k_even;
    s.upper_constant = upper_constant;
    s.lower_constant = lower_constant;
    return s;
}

double joint_norm(const CoherentSpinor& s)
{
    // Each component is |constant|^2 times a coherent density with its own
    // power r^{4k-1}; integrate each against its exact Gaussian rate.
    const double a = (1.0 - std::norm(s.zeta)) / std::norm(1.0 - s.zeta);
    const auto component = [&](double k, complex constant, bool upper) {
        const auto remainder = [&](double t) {
            const double r = std::sqrt(t);
            const double v = std::norm(upper ? s.upper(r) : s.lower(r));
            return v / (std::pow(r, 4.0 * k - 1.0) * std::exp(-a * t));
        };
        if (constant == complex(0.0)) {
            return 0.0;
        }
        return half_line_gaussian_integral(remainder, 2.0 * k - 0.5, a).value;
    };
    return component(s.upper_k, s.upper_constant, true) + component(s.lower_k, s.lower_constant, false);
}

}  // namespace dunkl

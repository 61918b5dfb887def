#include "dunkl/dunkl_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

PolyFunc::PolyFunc(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

PolyFunc PolyFunc::monomial(int degree, double coefficient)
{
    if (degree < 0) {
        return {};
    }
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coefficient;
    return PolyFunc(std::move(c));
}

void PolyFunc::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

double PolyFunc::coeff(int j) const
{
    if (j < 0 || j > degree()) {
        return 0.0;
    }
    return coeffs_[static_cast<std::size_t>(j)];
}

double PolyFunc::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

PolyFunc PolyFunc::even_part() const
{
    std::vector<double> c = coeffs_;
    for (std::size_t j = 1; j < c.size(); j += 2) {
        c[j] = 0.0;
    }
    return PolyFunc(std::move(c));
}

PolyFunc PolyFunc::odd_part() const
{
    std::vector<double> c = coeffs_;
    for (std::size_t j = 0; j < c.size(); j += 2) {
        c[j] = 0.0;
    }
    return PolyFunc(std::move(c));
}

PolyFunc PolyFunc::times_x() const
{
    if (is_zero()) {
        return {};
    }
    std::vector<double> c(coeffs_.size() + 1, 0.0);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
    return PolyFunc(std::move(c));
}

PolyFunc PolyFunc::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<double> c(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        c[j - 1] = static_cast<double>(j) * coeffs_[j];
    }
    return PolyFunc(std::move(c));
}

double PolyFunc::max_abs_coeff() const
{
    double m = 0.0;
    for (double c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

PolyFunc& PolyFunc::operator+=(const PolyFunc& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), 0.0);
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        coeffs_[j] += other.coeffs_[j];
    }
    trim();
    return *this;
}

PolyFunc& PolyFunc::operator-=(const PolyFunc& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), 0.0);
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        coeffs_[j] -= other.coeffs_[j];
    }
    trim();
    return *this;
}

PolyFunc& PolyFunc::operator*=(double s)
{
    for (double& c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

double max_coeff_defect(const PolyFunc& a, const PolyFunc& b)
{
    return (a - b).max_abs_coeff();
}

PolyFunc reflect(const PolyFunc& p)
{
    std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t j = 1; j < c.size(); j += 2) {
        c[j] = -c[j];
    }
    return PolyFunc(std::move(c));
}

double dunkl_gamma(int n, double mu)
{
    return (n % 2 == 0) ? static_cast<double>(n) : n + 2.0 * mu;
}

PolyFunc dunkl_derivative(const PolyFunc& p, double mu)
{
    require_dunkl_mu(mu, "dunkl_derivative");
    if (p.degree() <= 0) {
        return {};
    }
    std::vector<double> c(static_cast<std::size_t>(p.degree()), 0.0);
    for (int n = 1; n <= p.degree(); ++n) {
        c[static_cast<std::size_t>(n - 1)] = dunkl_gamma(n, mu) * p.coeff(n);
    }
    return PolyFunc(std::move(c));
}

SymmetricGrid::SymmetricGrid(double spacing, int half_count) : h(spacing), n_half(half_count)
{
    if (!(spacing > 0.0) || half_count < 1) {
        throw std::invalid_argument("SymmetricGrid: need h > 0 and N >= 1");
    }
}

GridFunc::GridFunc(SymmetricGrid g, std::vector<double> v) : grid(g), values(std::move(v))
{
    if (values.size() != grid.size()) {
        throw std::invalid_argument("GridFunc: value count " + std::to_string(values.size()) +
                                    " does not match grid size " + std::to_string(grid.size()));
    }
}

GridFunc GridFunc::sample(const SymmetricGrid& g, const std::function<double(double)>& f)
{
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f(g.point(i));
    }
    return GridFunc(g, std::move(v));
}

GridFunc reflect(const GridFunc& f)
{
    std::vector<double> v(f.values.rbegin(), f.values.rend());
    return GridFunc(f.grid, std::move(v));
}

GridFunc dunkl_derivative_grid(const GridFunc& f, double mu)
{
    require_dunkl_mu(mu, "dunkl_derivative_grid");
    const std::size_t n = f.values.size();
    if (n < 3) {
        throw std::invalid_argument("dunkl_derivative_grid: need at least 3 points");
    }
    const double h = f.grid.h;
    const auto& v = f.values;
    std::vector<double> out(n);
    out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    out[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] += mu / f.grid.point(i) * (v[i] - v[f.grid.reflected(i)]);
    }
    return GridFunc(f.grid, std::move(out));
}

HalfLineGrid::HalfLineGrid(double spacing, int n) : h(spacing), count(n)
{
    if (!(spacing > 0.0) || n < 4) {
        throw std::invalid_argument("HalfLineGrid: need h > 0 and at least 4 points");
    }
}

HalfLineFunc::HalfLineFunc(HalfLineGrid g, std::vector<double> v) : grid(g), values(std::move(v))
{
    if (values.size() != grid.size()) {
        throw std::invalid_argument("HalfLineFunc: value count does not match grid size");
    }
}

HalfLineFunc HalfLineFunc::sample(const HalfLineGrid& g, const std::function<double(double)>& f)
{
    std::vector<double> v(g.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = f(g.point(j));
    }
    return HalfLineFunc(g, std::move(v));
}

PolyFunc LadderOps::annihilate(const PolyFunc& p) const
{
    return dunkl_derivative(p, mu) * (1.0 / std::sqrt(2.0));
}

PolyFunc LadderOps::create(const PolyFunc& p) const
{
    return (2.0 * p.times_x() - dunkl_derivative(p, mu)) * (1.0 / std::sqrt(2.0));
}

LadderOps ladder_ops(double mu)
{
    require_dunkl_mu(mu, "ladder_ops");
    return LadderOps{mu};
}

NumberProducts number_products(double mu)
{
    return NumberProducts{ladder_ops(mu)};
}

namespace {

// Polynomial with possibly negative exponents; used only to let the 1/x and
// 1/x^2 pieces of the differential form cancel before converting back.
class LaurentAccumulator {
public:
    void add(const PolyFunc& p, int shift, double scale)
    {
        for (int j = 0; j <= p.degree(); ++j) {
            if (p.coeff(j) != 0.0) {
                terms_[j + shift] += scale * p.coeff(j);
            }
        }
    }

    PolyFunc to_polynomial(double tolerance) const
    {
        std::vector<double> c;
        for (const auto& [exponent, value] : terms_) {
            if (exponent < 0) {
                if (std::abs(value) > tolerance) {
                    throw NumericError("closed_form_number_operator: singular term x^" + std::to_string(exponent) +
                                       " does not cancel");
                }
                continue;
            }
            if (c.size() <= static_cast<std::size_t>(exponent)) {
                c.resize(static_cast<std::size_t>(exponent) + 1, 0.0);
            }
            c[static_cast<std::size_t>(exponent)] += value;
        }
        return PolyFunc(std::move(c));
    }

private:
    std::map<int, double> terms_;
};

}  // namespace

PolyFunc closed_form_number_operator(const PolyFunc& p, double mu, int sign)
{
    require_dunkl_mu(mu, "closed_form_number_operator");
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("closed_form_number_operator: sign must be +1 or -1");
    }
    const double s = sign;
    // F = p g with g = exp(-x^2/2):
    //   F'  = (p' - x p) g
    //   F'' = (p'' - 2x p' - p + x^2 p) g
    const PolyFunc dp = p.derivative();
    const PolyFunc first = dp - p.times_x();
    const PolyFunc second = dp.derivative() - 2.0 * dp.times_x() - p + p.times_x().times_x();
    const PolyFunc antisym = p - reflect(p);

    LaurentAccumulator acc;
    acc.add(p, 2, 0.5);
    acc.add(p, 0, 0.5 * s);
    acc.add(reflect(p), 0, s * mu);
    acc.add(second, 0, -0.5);
    acc.add(first, -1, -mu);
    acc.add(antisym, -2, 0.5 * mu);
    return acc.to_polynomial(1e-12 * std::max(1.0, p.max_abs_coeff()));
}

PolyFunc laguerre_in_x_squared(int n, double alpha)
{
    if (n < 0) {
        throw DomainError("laguerre_in_x_squared: degree must be non-negative");
    }
    if (!(alpha > -1.0)) {
        throw DomainError("laguerre_in_x_squared: alpha must exceed -1");
    }
    // L_n^a(t) = sum_i (-1)^i Gamma(n+a+1) / (Gamma(n-i+1) Gamma(a+i+1) i!) t^i
    std::vector<double> c(2 * static_cast<std::size_t>(n) + 1, 0.0);
    const double top = ln_gamma(n + alpha + 1.0);
    for (int i = 0; i <= n; ++i) {
        const double magnitude =
            std::exp(top - ln_gamma(n - i + 1.0) - ln_gamma(alpha + i + 1.0) - ln_gamma(i + 1.0));
        c[2 * static_cast<std::size_t>(i)] = (i % 2 == 0) ? magnitude : -magnitude;
    }
    return PolyFunc(std::move(c));
}

}  // namespace dunkl

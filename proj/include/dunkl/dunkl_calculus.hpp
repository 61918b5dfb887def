#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dunkl {

/// Real polynomial sum_j c_j x^j, stored with trailing zeros trimmed.
/// The zero polynomial has degree -1 and no coefficients.
class PolyFunc {
public:
    PolyFunc() = default;
    explicit PolyFunc(std::vector<double> coeffs);

    static PolyFunc monomial(int degree, double coefficient = 1.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    double coeff(int j) const;
    std::span<const double> coeffs() const { return coeffs_; }

    double operator()(double x) const;

    PolyFunc even_part() const;
    PolyFunc odd_part() const;
    PolyFunc times_x() const;
    PolyFunc derivative() const;
    double max_abs_coeff() const;

    PolyFunc& operator+=(const PolyFunc& other);
    PolyFunc& operator-=(const PolyFunc& other);
    PolyFunc& operator*=(double s);

    friend PolyFunc operator+(PolyFunc a, const PolyFunc& b) { return a += b; }
    friend PolyFunc operator-(PolyFunc a, const PolyFunc& b) { return a -= b; }
    friend PolyFunc operator*(double s, PolyFunc a) { return a *= s; }
    friend PolyFunc operator*(PolyFunc a, double s) { return a *= s; }

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Largest |coefficient| of a - b.
double max_coeff_defect(const PolyFunc& a, const PolyFunc& b);

/// (R p)(x) = p(-x): odd coefficients change sign.
PolyFunc reflect(const PolyFunc& p);

/// gamma_n with D x^n = gamma_n x^{n-1}: n for even n, n + 2 mu for odd n.
double dunkl_gamma(int n, double mu);

/// D_x^mu p = p' + (mu/x)(p - Rp), exact on coefficients.
PolyFunc dunkl_derivative(const PolyFunc& p, double mu);

/// Staggered symmetric grid x_j = (j + 1/2) h, j = -N .. N-1. Storage index
/// i = j + N; reflection j -> -j-1 is i -> 2N-1-i, so no node sits at x = 0.
struct SymmetricGrid {
    double h = 0.0;
    int n_half = 0;

    SymmetricGrid() = default;
    SymmetricGrid(double spacing, int half_count);

    std::size_t size() const { return 2 * static_cast<std::size_t>(n_half); }
    double point(std::size_t i) const { return (static_cast<double>(i) - n_half + 0.5) * h; }
    std::size_t reflected(std::size_t i) const { return size() - 1 - i; }
};

/// Samples on a SymmetricGrid.
struct GridFunc {
    SymmetricGrid grid;
    std::vector<double> values;

    GridFunc() = default;
    GridFunc(SymmetricGrid g, std::vector<double> v);

    static GridFunc sample(const SymmetricGrid& g, const std::function<double(double)>& f);
};

GridFunc reflect(const GridFunc& f);

/// Central differences for d/dx (second-order one-sided at the two ends) plus
/// the exact reflection term mu/x_j (f_j - f_{reflect(j)}).
GridFunc dunkl_derivative_grid(const GridFunc& f, double mu);

/// Staggered half-line grid r_j = (j + 1/2) h, j = 0 .. count-1.
struct HalfLineGrid {
    double h = 0.0;
    int count = 0;

    HalfLineGrid() = default;
    HalfLineGrid(double spacing, int n);

    /// Grid of `n` cells covering (0, r_max].
    static HalfLineGrid covering(double r_max, int n) { return HalfLineGrid(r_max / n, n); }

    std::size_t size() const { return static_cast<std::size_t>(count); }
    double point(std::size_t j) const { return (static_cast<double>(j) + 0.5) * h; }
    double r_max() const { return count * h; }
};

/// Samples on a HalfLineGrid.
struct HalfLineFunc {
    HalfLineGrid grid;
    std::vector<double> values;

    HalfLineFunc() = default;
    HalfLineFunc(HalfLineGrid g, std::vector<double> v);

    static HalfLineFunc sample(const HalfLineGrid& g, const std::function<double(double)>& f);
};

/// Deformed ladder operators a_D = (x + D)/sqrt2, a_D^dag = (x - D)/sqrt2
/// acting on p(x) e^{-x^2/2} through the polynomial part p:
///   a_D     : p -> (D p) / sqrt2
///   a_D^dag : p -> (2 x p - D p) / sqrt2
struct LadderOps {
    double mu = 0.0;

    PolyFunc annihilate(const PolyFunc& p) const;
    PolyFunc create(const PolyFunc& p) const;
};

LadderOps ladder_ops(double mu);

/// Products a_D a_D^dag and a_D^dag a_D, composed from LadderOps.
struct NumberProducts {
    LadderOps ladder;

    PolyFunc lower_raise(const PolyFunc& p) const { return ladder.annihilate(ladder.create(p)); }
    PolyFunc raise_lower(const PolyFunc& p) const { return ladder.create(ladder.annihilate(p)); }
};

NumberProducts number_products(double mu);

/// The second-order Dunkl operator in differential form,
///   (1/2)[x^2 + s(2 mu R + 1) - d^2/dx^2 - (2 mu/x) d/dx + (mu/x^2)(1 - R)],
/// applied to p e^{-x^2/2} by term-by-term differentiation; s = +1 gives
/// a_D a_D^dag, s = -1 gives a_D^dag a_D. Intermediate negative powers of x
/// must cancel; NumericError otherwise.
PolyFunc closed_form_number_operator(const PolyFunc& p, double mu, int sign);

/// Coefficients in x of L_n^alpha(x^2) (even polynomial of degree 2n), built
/// from the explicit hypergeometric sum.
PolyFunc laguerre_in_x_squared(int n, double alpha);

}  // namespace dunkl

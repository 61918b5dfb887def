#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <numbers>

#include "dunkl/coherent_states.hpp"
#include "dunkl/errors.hpp"

using namespace dunkl;

TEST(ZetaFromXi, DiscMap)
{
    EXPECT_EQ(zeta_from_xi({0.0, 0.0}), complex(0.0, 0.0));
    EXPECT_NEAR(zeta_from_xi({1.0, 0.0}).real(), 0.7615941559557649, 1e-15);
    for (double m : {0.1, 1.0, 5.0, 15.0}) {
        EXPECT_LT(std::abs(zeta_from_xi(std::polar(m, 1.2))), 1.0 + 1e-16);
        EXPECT_NEAR(std::arg(zeta_from_xi(std::polar(m, 1.2))), 1.2, 1e-14);
    }
}

TEST(CoherentParams, Validation)
{
    EXPECT_THROW((CoherentParams{{1.0, 0.0}, 0.5, {}}.validate()), DomainError);
    EXPECT_THROW((CoherentParams{{0.6, 0.8}, 0.5, {}}.validate()), DomainError);
    EXPECT_THROW((CoherentParams{{0.1, 0.0}, 0.0, {}}.validate()), DomainError);
    EXPECT_THROW((CoherentParams{{0.1, 0.0}, 0.5, complex(1.0, 0.0)}.validate()), DomainError);
    EXPECT_NO_THROW(CoherentParams::from_xi({0.4, -0.3}, 0.75).validate());
    EXPECT_THROW(coherent_series({{1.2, 0.0}, 0.5, {}}, 1.0), DomainError);
    EXPECT_THROW(coherent_closed({{0.0, -1.0}, 0.5, {}}, 1.0), DomainError);
}

TEST(CoherentSeries, ZetaZeroIsGroundSturmian)
{
    for (double k : {0.25, 0.75, 1.3}) {
        for (double r : {0.2, 1.0, 2.5}) {
            const double ground = std::sqrt(2.0 / std::tgamma(2.0 * k)) * std::pow(r, 2.0 * k - 0.5) * std::exp(-0.5 * r * r);
            EXPECT_NEAR(coherent_series({{0.0, 0.0}, k, {}}, r).value.real(), ground, 1e-15);
            EXPECT_NEAR(coherent_closed({{0.0, 0.0}, k, {}}, r, ExponentVariant::paper).real(), ground, 1e-15);
            EXPECT_NEAR(coherent_closed({{0.0, 0.0}, k, {}}, r, ExponentVariant::rederived).real(), ground, 1e-15);
        }
    }
}

TEST(CoherentSeries, FrozenValuesAndDoubling)
{
    const CoherentParams p{{0.3, 0.0}, 0.75, {}};
    const SeriesValue v = coherent_series(p, 1.0);
    EXPECT_NEAR(v.value.real(), 0.9442849418816121, 1e-13);
    EXPECT_NEAR(v.value.imag(), 0.0, 1e-16);
    EXPECT_LT(std::abs(coherent_series_fixed(p, 1.0, 2 * v.terms) - v.value), 1e-12);

    const SeriesValue w = coherent_series({{0.4, 0.2}, 0.5, {}}, 1.7);
    EXPECT_NEAR(w.value.real(), 0.06271707897004426, 1e-13);
    EXPECT_NEAR(w.value.imag(), -0.13065157014546464, 1e-13);
}

TEST(CoherentSeries, UnitNorm)
{
    for (double k : {0.25, 0.75, 0.5, 1.0}) {
        for (complex z : {complex(0.4, 0.2), complex(0.6, 0.0), complex(-0.3, -0.5), complex(0.0, 0.6)}) {
            EXPECT_NEAR(coherent_series_norm({z, k, {}}), 1.0, 1e-10) << k << " " << z;
        }
    }
}

TEST(CoherentClosed, RederivedMatchesSeries)
{
    for (double k : {0.25, 0.75, 0.5, 1.0}) {
        for (double re = -0.6; re <= 0.6; re += 0.3) {
            for (double im = -0.6; im <= 0.6; im += 0.3) {
                const complex z(re, im);
                if (std::abs(z) > 0.6) {
                    continue;
                }
                const CoherentParams p{z, k, {}};
                for (double r = 0.1; r <= 6.0; r += 0.35) {
                    EXPECT_LT(std::abs(coherent_closed(p, r) - coherent_series(p, r).value), 1e-10)
                        << "k=" << k << " z=" << z << " r=" << r;
                }
                EXPECT_NEAR(coherent_closed_norm(p), 1.0, 1e-10);
            }
        }
    }
}

TEST(CoherentClosed, PrintedExponentDeviates)
{
    const CoherentParams p{{0.3, 0.0}, 0.75, {}};
    const double dev = std::abs(coherent_closed(p, 1.0, ExponentVariant::paper) - coherent_series(p, 1.0).value);
    EXPECT_GT(dev, 1e-6);
    // The printed exponent exceeds the rederived one by 2 r^2 zeta / (1 - zeta).
    const complex ratio = coherent_closed(p, 1.0, ExponentVariant::paper) / coherent_closed(p, 1.0);
    EXPECT_NEAR(std::log(ratio.real()), 0.6 / 0.7, 1e-13);
}

TEST(BinomialIdentity, SumsToOne)
{
    for (double k : {0.25, 0.75, 0.5, 1.0, 3.0}) {
        for (double z : {0.0, 0.2, 0.6, 0.95}) {
            EXPECT_NEAR(binomial_identity_sum(z, k), 1.0, 1e-12) << k << " " << z;
        }
    }
}

TEST(FockRealization, ReproducesLadderCoefficientsExactly)
{
    EXPECT_EQ(fock_realization_defect(20), 0.0);
}

TEST(DisplacedState, MatchesDenseMatrixExponential)
{
    const int dim = 60;
    for (double k : {0.25, 0.75}) {
        for (complex xi : {complex(0.5, 0.0), complex(-0.2, 0.4)}) {
            Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
            for (int n = 0; n + 1 < dim; ++n) {
                const double up = std::sqrt((n + 1.0) * (n + 2.0 * k));
                a(n + 1, n) = xi * up;
                a(n, n + 1) = -std::conj(xi) * up;
            }
            const Eigen::MatrixXcd u = a.exp();
            const std::vector<complex> state = displaced_lowest_state(xi, k, dim);
            for (int n = 0; n < dim; ++n) {
                EXPECT_LT(std::abs(state[n] - u(n, 0)), 1e-12);
            }
        }
    }
}

TEST(DisplacedState, CoefficientsFollowTheDiscMap)
{
    for (double k : {0.25, 0.75}) {
        const std::vector<complex> state = displaced_lowest_state({1.0, 0.0}, k, 200);
        const CoherentParams p = CoherentParams::from_xi({1.0, 0.0}, k);
        for (int n = 0; n < 40; ++n) {
            EXPECT_LT(std::abs(state[n] - coherent_coefficient(p, n)), 1e-10);
        }
    }
}

TEST(CoherentSpinor, DefaultNormAndSectorSwap)
{
    const CoherentSpinor a = coherent_spinor(ParityCase::A, {0.5, 1.0}, {0.3, 0.0});
    EXPECT_NEAR(joint_norm(a), 1.0, 1e-10);
    const CoherentSpinor b = coherent_spinor(ParityCase::B, {0.5, 1.0}, {0.3, 0.0});
    EXPECT_EQ(a.upper_k, b.lower_k);
    EXPECT_EQ(a.lower_k, b.upper_k);
    // The k2- profile carries an extra r / (1 - zeta) relative to k1+.
    const double r = 1.4;
    const complex ratio = a.lower(r) / a.upper(r);
    const complex expected = r / (1.0 - a.zeta) * std::sqrt(std::tgamma(2.0 * a.upper_k) / std::tgamma(2.0 * a.lower_k)) *
                             std::sqrt(1.0 - std::norm(a.zeta));
    EXPECT_LT(std::abs(ratio - expected), 1e-13);
}

TEST(CoherentSpinor, MuZeroGroundSturmians)
{
    const CoherentSpinor s = coherent_spinor(ParityCase::A, {0.0, 1.0}, {0.0, 0.0});
    EXPECT_EQ(s.upper_k, 0.25);
    EXPECT_EQ(s.lower_k, 0.75);
    for (double r : {0.5, 1.5}) {
        EXPECT_NEAR(s.upper(r).real(), sturmian_eval(0, 0.25, r, Gauge::half_density) / std::numbers::sqrt2, 1e-15);
        EXPECT_NEAR(s.lower(r).real(), sturmian_eval(0, 0.75, r, Gauge::half_density) / std::numbers::sqrt2, 1e-15);
    }
    const CoherentSpinor custom = coherent_spinor(ParityCase::B, {0.2, 1.0}, {0.1, 0.1}, 0.6, complex(0.0, 0.8));
    EXPECT_NEAR(joint_norm(custom), 1.0, 1e-10);
}

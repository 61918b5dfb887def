#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dunkl/dirac_dunkl.hpp"
#include "dunkl/errors.hpp"

using namespace dunkl;

TEST(Energy, PerCaseValues)
{
    EXPECT_DOUBLE_EQ(energy(ParityCase::A, 0, {0.3, 0.7}), 1.0);
    EXPECT_NEAR(energy(ParityCase::A, 2, {0.0, 0.5}), std::sqrt(5.0), 1e-15);
    EXPECT_NEAR(energy(ParityCase::B, 1, {0.25, 0.5}), std::sqrt(4.5), 1e-15);
    EXPECT_NEAR(energy(ParityCase::B, 1, {0.25, 0.5, Branch::minus}), -std::sqrt(4.5), 1e-15);
    EXPECT_THROW(energy(ParityCase::A, 0, {-0.6, 0.5}), DomainError);
    EXPECT_THROW(energy(ParityCase::A, 0, {0.0, 0.0}), DomainError);
}

TEST(Energy, CaseAIsMuIndependentAndSpectraIncrease)
{
    for (int n = 0; n < 30; ++n) {
        EXPECT_EQ(energy(ParityCase::A, n, {0.0, 0.5}), energy(ParityCase::A, n, {0.83, 0.5}));
        for (double mu : {-0.4, 0.0, 0.5, 2.0}) {
            for (ParityCase c : {ParityCase::A, ParityCase::B}) {
                EXPECT_GT(energy(c, n, {mu, 0.3}), 0.0);
                EXPECT_GT(energy(c, n + 1, {mu, 0.3}), energy(c, n, {mu, 0.3}));
            }
        }
    }
}

TEST(UnifiedSpectrum, PrintedFormulaValues)
{
    EXPECT_DOUBLE_EQ(unified_energy(0, {0.4, 0.9}), 1.0);
    EXPECT_NEAR(unified_energy(1, {0.5, 0.5}), std::sqrt(6.0), 1e-15);
}

TEST(UnifiedSpectrum, ReconciliationFlagsOddLevels)
{
    const ReconciliationReport rep = reconcile_unified_spectrum({0.5, 0.5}, 4);
    ASSERT_EQ(rep.rows.size(), 4u);
    for (const ReconciliationRow& r : rep.rows) {
        EXPECT_EQ(r.flagged, r.n % 2 == 1) << r.n;
    }
    EXPECT_EQ(rep.rows[2].matched_case, "A");
    EXPECT_EQ(rep.rows[2].matched_n, 2);
    EXPECT_FALSE(rep.unified_matches_union);
    EXPECT_TRUE(rep.interleaving_matches_union);
    // Case B ground level 2.0 is absent from the unified values.
    const auto& u = rep.unified_values;
    EXPECT_EQ(std::count_if(u.begin(), u.end(), [](double e) { return std::abs(e - 2.0) < 1e-12; }), 0);
}

TEST(UnifiedSpectrum, MuZeroStillDiffersFromUnion)
{
    const ReconciliationReport rep = reconcile_unified_spectrum({0.0, 0.5}, 10);
    EXPECT_FALSE(rep.unified_matches_union);
    EXPECT_TRUE(rep.interleaving_matches_union);
}

TEST(UnifiedSpectrum, InterleavingReproducesUnionExactly)
{
    for (double mu : {0.0, 0.25, 0.5, 1.3}) {
        for (double kappa : {0.1, 0.5, 2.0}) {
            const PhysParams p{mu, kappa};
            for (int n = 0; n < 20; ++n) {
                EXPECT_NEAR(interleaved_energy(2 * n, p), energy(ParityCase::A, n, p), 1e-14);
                EXPECT_NEAR(interleaved_energy(2 * n + 1, p), energy(ParityCase::B, n, p), 1e-14);
            }
        }
    }
}

TEST(Spinor, GroundStateValues)
{
    const SpinorState s = spinor(ParityCase::A, 0, {0.0, 0.5});
    EXPECT_NEAR(s.upper(1e-300), 1.0622519320271969, 1e-15);
    EXPECT_EQ(s.lower(0.7), 0.0);
    EXPECT_FALSE(s.lower_spec.present);
    EXPECT_THROW(spinor(ParityCase::A, 0, {0.0, 0.5, Branch::minus}), DomainError);
}

TEST(Spinor, WeightsAndMetadata)
{
    for (int n = 0; n < 6; ++n) {
        const SpinorState s = spinor(ParityCase::B, n, {0.3, 0.8, Branch::minus});
        EXPECT_NEAR(s.upper_weight * s.upper_weight + s.lower_weight * s.lower_weight, 1.0, 1e-15);
        EXPECT_EQ(s.printed_lower_phase, "+i");
        EXPECT_EQ(s.sector.phi, std::numbers::pi);
    }
    EXPECT_EQ(spinor(ParityCase::A, 1, {0.3, 0.8}).printed_lower_phase, "-i");
}

TEST(Spinor, JointNormIsOne)
{
    for (double mu : {0.0, 0.25, 0.5, 1.0}) {
        for (double kappa : {0.1, 0.5, 2.0}) {
            for (ParityCase c : {ParityCase::A, ParityCase::B}) {
                for (int n = 0; n <= 10; ++n) {
                    EXPECT_NEAR(joint_norm(spinor(c, n, {mu, kappa})), 1.0, 1e-10);
                }
            }
        }
    }
}

TEST(Spinor, GaugesDifferByRToTheMu)
{
    const SpinorState s = spinor(ParityCase::B, 2, {0.35, 0.5});
    for (double r : {0.1, 0.8, 2.5}) {
        EXPECT_NEAR(s.upper(r, Gauge::half_density), std::pow(r, 0.35) * s.upper(r, Gauge::weighted), 1e-15);
        EXPECT_NEAR(s.lower(r, Gauge::half_density), std::pow(r, 0.35) * s.lower(r, Gauge::weighted), 1e-15);
        EXPECT_NEAR(s.upper(r, Gauge::weighted), s.upper_poly()(r) * std::exp(-0.5 * r * r), 1e-14);
    }
}

TEST(CoupledEquations, HoldOnPolynomialParts)
{
    for (double mu : {0.0, 0.25, 0.5, 1.0}) {
        for (ParityCase c : {ParityCase::A, ParityCase::B}) {
            for (Branch b : {Branch::plus, Branch::minus}) {
                for (int n = 0; n <= 10; ++n) {
                    if (c == ParityCase::A && n == 0 && b == Branch::minus) {
                        continue;
                    }
                    const auto [d1, d2] = coupled_check(c, n, {mu, 0.5, b});
                    EXPECT_LE(d1, 1e-10);
                    EXPECT_LE(d2, 1e-10);
                }
            }
        }
    }
}

TEST(CoupledEquations, WrongRelativeSignIsDetected)
{
    // Flipping the lower sign must break the coupled equations.
    SpinorState s = spinor(ParityCase::A, 2, {0.5, 0.5});
    s.lower_sign = -s.lower_sign;
    const LadderOps a = ladder_ops(0.5);
    const PolyFunc lhs = (s.energy + 1.0) * s.lower_poly();
    const PolyFunc rhs = std::sqrt(2.0 * 0.5) * a.annihilate(s.upper_poly());
    EXPECT_GT(max_coeff_defect(lhs, rhs), 0.1);
}

TEST(DecoupledResidual, SecondOrderConvergence)
{
    for (auto [c, n, mu] : {std::tuple{ParityCase::A, 0, 0.5}, std::tuple{ParityCase::B, 2, 0.25},
                            std::tuple{ParityCase::A, 3, 0.0}}) {
        std::vector<double> err;
        for (int m : {1200, 2400, 4800}) {
            const auto [r1, r2] = decoupled_residual(c, n, {mu, 0.5}, HalfLineGrid::covering(12.0, m));
            err.push_back(std::max(r1, r2));
        }
        EXPECT_NEAR(std::log2(err[0] / err[1]), 2.0, 0.1);
        EXPECT_NEAR(std::log2(err[1] / err[2]), 2.0, 0.1);
    }
}

TEST(DecoupledResidual, MagnitudeAtFineGrid)
{
    // h = 0.005: truncation constant of the three-point stencils.
    const auto [r1, r2] = decoupled_residual(ParityCase::B, 2, {0.25, 0.5}, HalfLineGrid::covering(12.0, 2400));
    EXPECT_LT(r1, 5e-4);
    EXPECT_LT(r2, 5e-4);
    const auto [a1, a2] = decoupled_residual(ParityCase::A, 0, {0.5, 0.5}, HalfLineGrid::covering(12.0, 2400));
    EXPECT_LT(a1, 5e-5);
    EXPECT_EQ(a2, 0.0);
}

TEST(DecoupledResidual, Preconditions)
{
    EXPECT_THROW(decoupled_residual(ParityCase::A, 1, {0.5, 0.5}, HalfLineGrid::covering(12.0, 600)),
                 PreconditionError);
    EXPECT_THROW(decoupled_residual(ParityCase::A, 6, {0.5, 0.5}, HalfLineGrid::covering(3.0, 600)),
                 PreconditionError);
}

TEST(DiracStructure, CliffordAndParity)
{
    const DiracStructure d;
    EXPECT_EQ(d.clifford_defect(), 0.0);
    EXPECT_LT(d.parity_conjugation_defect(0.0), 1e-15);
    EXPECT_LT(d.parity_conjugation_defect(std::numbers::pi), 1e-15);
    EXPECT_LT(d.parity_conjugation_defect(0.37), 1e-15);
}

TEST(ParityCommutator, VanishesOnStaggeredGrid)
{
    for (double mu : {0.0, 0.7}) {
        for (double phi : {0.0, std::numbers::pi}) {
            EXPECT_LE(parity_commutator({mu, 0.5}, SymmetricGrid(0.1, 60), phi), 1e-12);
        }
    }
}

TEST(ParityConsistency, EigenspinorsSelectTheirPhase)
{
    const SymmetricGrid grid(0.05, 100);
    for (ParityCase c : {ParityCase::A, ParityCase::B}) {
        const SpinorState s = spinor(c, 3, {0.4, 0.5});
        const auto p1 = GridFunc::sample(grid, [&](double x) { return s.upper_poly()(x) * std::exp(-0.5 * x * x); });
        const auto p2 = GridFunc::sample(grid, [&](double x) { return s.lower_poly()(x) * std::exp(-0.5 * x * x); });
        const ParityConsistency pc = parity_consistency(p1, p2);
        EXPECT_TRUE(pc.consistent);
        EXPECT_EQ(pc.phi, parity_sector(c).phi);
    }
}

TEST(ParityConsistency, MixedParityRejected)
{
    const SymmetricGrid grid(0.05, 100);
    const auto even = GridFunc::sample(grid, [](double x) { return std::exp(-0.5 * x * x); });
    const ParityConsistency pc = parity_consistency(even, even);
    EXPECT_FALSE(pc.consistent);
    EXPECT_GT(pc.defect_phi0, 0.5);
    EXPECT_GT(pc.defect_phipi, 0.5);
}

namespace {

// Standard full-line eigenspinor built from the explicit Hermite sum.
std::pair<double, double> reference_standard(int n, double kappa, double x)
{
    const auto h = [](int m, double y) {
        double sum = 0.0;
        for (int j = 0; 2 * j <= m; ++j) {
            sum += ((j % 2) ? -1.0 : 1.0) * std::pow(2.0 * y, m - 2 * j) / (std::tgamma(j + 1.0) * std::tgamma(m - 2 * j + 1.0));
        }
        return std::tgamma(m + 1.0) * sum;
    };
    const double e = std::sqrt(1.0 + 2.0 * kappa * n);
    const double g = std::exp(-0.5 * x * x);
    const double up = std::sqrt((e + 1.0) / (2.0 * e)) * h(n, x) * g /
                      std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi));
    if (n == 0) {
        return {up, 0.0};
    }
    const double lo = std::sqrt((e - 1.0) / (2.0 * e)) * h(n - 1, x) * g /
                      std::sqrt(std::pow(2.0, n - 1) * std::tgamma(n) * std::sqrt(std::numbers::pi));
    return {up, lo};
}

}  // namespace

TEST(MuZeroReduction, EnergiesAgreeExactly)
{
    for (double kappa : {0.5, 0.1, 3.0}) {
        for (int n = 0; n <= 12; ++n) {
            EXPECT_TRUE(mu_zero_reduction(ParityCase::A, n, kappa).energies_equal);
            EXPECT_TRUE(mu_zero_reduction(ParityCase::B, n, kappa).energies_equal);
        }
    }
    EXPECT_NEAR(energy(ParityCase::A, 1, {0.0, 0.5}), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(energy(ParityCase::B, 0, {0.0, 0.5}), std::sqrt(2.0), 1e-15);
}

TEST(MuZeroReduction, ProfilesAreRootTwoTimesStandard)
{
    for (ParityCase c : {ParityCase::A, ParityCase::B}) {
        for (int n = 0; n <= 8; ++n) {
            const MuZeroRecord rec = mu_zero_reduction(c, n, 0.5);
            EXPECT_LE(rec.upper_ratio_spread, 1e-10);
            EXPECT_LE(rec.lower_ratio_spread, 1e-10);
            EXPECT_NEAR(std::abs(rec.upper_ratio), std::numbers::sqrt2, 1e-12);
            const SpinorState s = spinor(c, n, {0.0, 0.5});
            for (double x : {0.3, 1.1, 2.2}) {
                const auto [u, l] = reference_standard(rec.n_standard, 0.5, x);
                EXPECT_NEAR(s.upper(x), rec.upper_ratio * u, 1e-12);
                if (rec.n_standard > 0 && s.lower_spec.present) {
                    EXPECT_NEAR(std::abs(rec.lower_ratio), std::numbers::sqrt2, 1e-12);
                    EXPECT_NEAR(s.lower(x), rec.lower_ratio * l, 1e-12);
                }
            }
        }
    }
}

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/numerical_oracle.hpp"

using namespace dunkl;

namespace {

DiscretizedOperator dense_from(const std::vector<double>& m, std::size_t n)
{
    DiscretizedOperator op;
    op.storage = DiscretizedOperator::Storage::dense;
    op.dimension = n;
    op.dense = m;
    return op;
}

}  // namespace

TEST(EigensolveSym, TrivialMatrices)
{
    std::vector<double> eye(16, 0.0);
    for (int i = 0; i < 4; ++i) {
        eye[i * 4 + i] = 1.0;
    }
    const std::vector<double> ones = eigensolve_sym(dense_from(eye, 4), 3);
    for (double v : ones) {
        EXPECT_NEAR(v, 1.0, 1e-15);
    }
    DiscretizedOperator diag;
    diag.dimension = 5;
    diag.diag = {5.0, 3.0, 1.0, 4.0, 2.0};
    diag.offdiag = {0.0, 0.0, 0.0, 0.0};
    const std::vector<double> low = eigensolve_sym(diag, 2);
    EXPECT_DOUBLE_EQ(low[0], 1.0);
    EXPECT_DOUBLE_EQ(low[1], 2.0);
    EXPECT_THROW(eigensolve_sym(diag, 6), PreconditionError);
}

TEST(RadialOperator, SymmetricAndValidated)
{
    const DiscretizedOperator op = discretize_radial(RadialSector::even, 0.5, HalfLineGrid::covering(14.0, 200));
    EXPECT_EQ(op.asymmetry(), 0.0);
    for (double d : op.diag) {
        EXPECT_TRUE(std::isfinite(d));
    }
    EXPECT_THROW(discretize_radial(RadialSector::even, 0.5, HalfLineGrid::covering(8.0, 200)), PreconditionError);
    EXPECT_THROW(discretize_radial(RadialSector::odd, -0.5, HalfLineGrid::covering(14.0, 200)), DomainError);
}

TEST(RadialOperator, MuZeroEvenSectorIsHarmonicOscillator)
{
    const std::vector<double> ev = eigensolve_sym(discretize_radial(RadialSector::even, 0.0, HalfLineGrid::covering(14.0, 2000)), 4);
    for (int n = 0; n < 4; ++n) {
        EXPECT_NEAR(ev[n], 4.0 * n + 1.0, 1e-4 * (4.0 * n + 1.0));
    }
}

class RadialSpectrum : public ::testing::TestWithParam<std::tuple<RadialSector, double>> {};

TEST_P(RadialSpectrum, MatchesClosedForm)
{
    const auto [sector, mu] = GetParam();
    const std::vector<double> ev = eigensolve_sym(discretize_radial(sector, mu, HalfLineGrid::covering(14.0, 2000)), 8);
    for (int n = 0; n < 8; ++n) {
        const double exact = radial_exact_eigenvalue(sector, mu, n);
        EXPECT_LE(std::abs(ev[n] - exact) / exact, 1e-4) << "n=" << n;
    }
}

INSTANTIATE_TEST_SUITE_P(Sectors, RadialSpectrum,
                         ::testing::Combine(::testing::Values(RadialSector::even, RadialSector::odd),
                                            ::testing::Values(-0.4, 0.0, 0.25, 0.5, 1.0)));

TEST(RadialOperator, KnownLowLevelsAtHalfMu)
{
    const HalfLineGrid g = HalfLineGrid::covering(14.0, 2000);
    const std::vector<double> even = eigensolve_sym(discretize_radial(RadialSector::even, 0.5, g), 5);
    const double expected[] = {2.0, 6.0, 10.0, 14.0, 18.0};
    for (int n = 0; n < 5; ++n) {
        EXPECT_NEAR(even[n], expected[n], 1e-4 * expected[n]);
    }
    EXPECT_NEAR(eigensolve_sym(discretize_radial(RadialSector::odd, 0.5, g), 1)[0], 4.0, 4e-4);
}

TEST(Eigenpairs, ResidualsBelowTolerance)
{
    const DiscretizedOperator op = discretize_radial(RadialSector::odd, 0.3, HalfLineGrid::covering(14.0, 1500));
    const std::vector<Eigenpair> pairs = eigenpairs(op, 5);
    for (const Eigenpair& p : pairs) {
        EXPECT_LE(p.residual, 1e-10 * std::max(1.0, std::abs(p.value)));
        double norm = 0.0;
        for (double v : p.vector) {
            norm += v * v;
        }
        EXPECT_NEAR(norm, 1.0, 1e-12);
    }
}

TEST(Eigenpairs, DegenerateEigenvaluesGetOrthogonalVectors)
{
    // psi2 at mu = 0.5 has 4n + 4 twice (even and odd sectors).
    const DiscretizedOperator op = discretize_full_line(FullLineComponent::psi2, 0.5, SymmetricGrid(14.0 / 120, 120));
    const std::vector<Eigenpair> pairs = eigenpairs(op, 4);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_LE(pairs[i].residual, 1e-10 * std::max(1.0, std::abs(pairs[i].value)));
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t q = 0; q < op.dimension; ++q) {
                dot += pairs[i].vector[q] * pairs[j].vector[q];
            }
            EXPECT_LT(std::abs(dot), 1e-8);
        }
    }
}

TEST(FullLine, MatchesEigenAndProjectedRadialSpectra)
{
    const double mu = 0.7;
    const SymmetricGrid grid(14.0 / 160, 160);
    const DiscretizedOperator op = discretize_full_line(FullLineComponent::psi1, mu, grid);
    EXPECT_EQ(op.asymmetry(), 0.0);
    EXPECT_LT(parity_projector_commutator(op), 1e-13);

    Eigen::MatrixXd m(op.dimension, op.dimension);
    for (std::size_t i = 0; i < op.dimension; ++i) {
        for (std::size_t j = 0; j < op.dimension; ++j) {
            m(i, j) = op.at(i, j);
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m, Eigen::EigenvaluesOnly);
    const std::vector<double> ours = eigensolve_sym(op, 10);
    for (int i = 0; i < 10; ++i) {
        EXPECT_NEAR(ours[i], ref.eigenvalues()(i), 1e-10 * std::max(1.0, std::abs(ours[i])));
    }

    const HalfLineGrid half(grid.h, grid.n_half);
    std::vector<double> projected;
    for (double v : eigensolve_sym(discretize_radial(RadialSector::even, mu, half), 10)) {
        projected.push_back(v - 1.0 - 2.0 * mu);
    }
    for (double v : eigensolve_sym(discretize_radial(RadialSector::odd, mu, half), 10)) {
        projected.push_back(v - 1.0 + 2.0 * mu);
    }
    std::sort(projected.begin(), projected.end());
    for (int i = 0; i < 10; ++i) {
        EXPECT_NEAR(ours[i], projected[i], 1e-10 * std::max(1.0, std::abs(projected[i])));
    }
}

TEST(FullLine, ClosedFormSpectra)
{
    const SymmetricGrid grid(14.0 / 400, 400);
    const double mu = 0.7;
    std::vector<double> psi1;
    std::vector<double> psi2;
    for (int n = 0; n < 4; ++n) {
        psi1.insert(psi1.end(), {4.0 * n, 4.0 * n + 2.0 + 4.0 * mu});
        psi2.insert(psi2.end(), {4.0 * n + 2.0 + 4.0 * mu, 4.0 * n + 4.0});
    }
    std::sort(psi1.begin(), psi1.end());
    std::sort(psi2.begin(), psi2.end());
    const std::vector<double> e1 = eigensolve_sym(discretize_full_line(FullLineComponent::psi1, mu, grid), 6);
    const std::vector<double> e2 = eigensolve_sym(discretize_full_line(FullLineComponent::psi2, mu, grid), 6);
    for (int i = 0; i < 6; ++i) {
        EXPECT_NEAR(e1[i], psi1[i], 1e-3 * std::max(1.0, psi1[i]));
        EXPECT_NEAR(e2[i], psi2[i], 1e-3 * psi2[i]);
    }
}

TEST(FullLine, MuZeroIsDoubledNumberOperator)
{
    const std::vector<double> ev =
        eigensolve_sym(discretize_full_line(FullLineComponent::psi1, 0.0, SymmetricGrid(14.0 / 400, 400)), 6);
    for (int n = 0; n < 6; ++n) {
        EXPECT_NEAR(ev[n], 2.0 * n, 1e-3 * std::max(1.0, 2.0 * n));
    }
}

TEST(ConvergenceStudy, SecondOrderSlopes)
{
    std::vector<HalfLineGrid> grids;
    for (int m : {250, 500, 1000}) {
        grids.push_back(HalfLineGrid::covering(14.0, m));
    }
    for (auto [sector, mu, level] : {std::tuple{RadialSector::even, 0.0, 0}, std::tuple{RadialSector::even, 0.75, 0},
                                     std::tuple{RadialSector::odd, 0.25, 1}}) {
        const ConvergenceStudy st = convergence_study(sector, mu, static_cast<std::size_t>(level), grids);
        EXPECT_TRUE(st.monotone) << st.anomaly;
        EXPECT_GE(st.slope, 1.8);
        EXPECT_LE(st.slope, 2.2);
    }
}

TEST(ConvergenceStudy, ReportsAnomalyWithoutThrowing)
{
    std::vector<HalfLineGrid> grids;
    for (int m : {250, 500, 1000}) {
        grids.push_back(HalfLineGrid::covering(14.0, m));
    }
    // The eigenvalue approaches 1 from below, so a reference just under it makes
    // the errors grow under refinement.
    const ConvergenceStudy st = convergence_study(
        [](const HalfLineGrid& g) { return discretize_radial(RadialSector::even, 0.0, g); }, 0, 0.99, grids);
    EXPECT_FALSE(st.monotone);
    EXPECT_FALSE(st.anomaly.empty());
    EXPECT_THROW(convergence_study(RadialSector::even, 0.0, 0, {grids[0], grids[1]}), PreconditionError);
}

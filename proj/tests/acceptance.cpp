#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "dunkl/coherent_states.hpp"
#include "dunkl/dirac_dunkl.hpp"
#include "dunkl/dunkl_calculus.hpp"
#include "dunkl/numerical_oracle.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/su11.hpp"

using namespace dunkl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Outcome ladder_commutator()
{
    double worst = 0.0;
    for (double mu : {0.0, 0.25, 0.5, 1.0}) {
        const NumberProducts prod = number_products(mu);
        for (int d = 0; d <= 50; ++d) {
            const PolyFunc p = PolyFunc::monomial(d);
            const PolyFunc comm = prod.lower_raise(p) - prod.raise_lower(p);
            worst = std::max(worst, max_coeff_defect(comm, p + (2.0 * mu) * reflect(p)));
        }
    }
    return {worst <= 1e-12, "max coefficient defect " + sci(worst) + " (tol 1e-12)"};
}

Outcome su11_relations()
{
    double comm = 0.0;
    double casimir = 0.0;
    for (double mu : {0.0, 0.5}) {
        for (Sector s : {Sector::plus, Sector::minus}) {
            const double k = physical_realization(s, mu).bargmann_k;
            for (int n = 0; n <= 30; ++n) {
                const LadderAction up = sturmian_action(Su11Op::Kplus, n, k);
                const LadderAction down = sturmian_action(Su11Op::Kminus, n, k);
                const double k0 = sturmian_action(Su11Op::K0, n, k).coefficient;
                const double k0_up = sturmian_action(Su11Op::K0, up.n_out, k).coefficient;
                const double kmkp = sturmian_action(Su11Op::Kminus, up.n_out, k).coefficient * up.coefficient;
                const double kpkm =
                    down.n_out < 0 ? 0.0 : sturmian_action(Su11Op::Kplus, down.n_out, k).coefficient * down.coefficient;
                // [K-, K+] = 2 K0 and [K0, K+] = K+ on |k, n>
                comm = std::max(comm, std::abs(kmkp - kpkm - 2.0 * k0) / k0);
                comm = std::max(comm, std::abs((k0_up - k0) * up.coefficient - up.coefficient) / up.coefficient);
                casimir = std::max(casimir, std::abs(k0 * k0 - k0 - kpkm - k * (k - 1.0)) / std::max(1.0, k0 * k0));
            }
        }
    }
    const bool ok = comm <= 1e-12 && casimir <= 1e-12;
    return {ok, "commutator defect " + sci(comm) + ", Casimir defect " + sci(casimir) + " (tol 1e-12)"};
}

Outcome realization_convergence()
{
    double lo = 1e300;
    double hi = -1e300;
    for (Sector s : {Sector::plus, Sector::minus}) {
        for (Su11Op op : {Su11Op::K0, Su11Op::Kplus, Su11Op::Kminus}) {
            for (double mu : {0.0, 0.5}) {
                std::vector<double> logh;
                std::vector<double> loge;
                for (int m : {600, 1200, 2400}) {
                    const HalfLineGrid g = HalfLineGrid::covering(12.0, m);
                    logh.push_back(std::log(g.h));
                    loge.push_back(std::log(ladder_realization_defect(op, s, mu, 3, g)));
                }
                double mx = 0.0;
                double my = 0.0;
                for (std::size_t i = 0; i < 3; ++i) {
                    mx += logh[i] / 3.0;
                    my += loge[i] / 3.0;
                }
                double sxy = 0.0;
                double sxx = 0.0;
                for (std::size_t i = 0; i < 3; ++i) {
                    sxy += (logh[i] - mx) * (loge[i] - my);
                    sxx += (logh[i] - mx) * (logh[i] - mx);
                }
                const double slope = sxy / sxx;
                lo = std::min(lo, slope);
                hi = std::max(hi, slope);
            }
        }
    }
    const bool ok = lo >= 1.9 && hi <= 2.1;
    return {ok, "slopes in [" + sci(lo) + ", " + sci(hi) + "] (need [1.9, 2.1])"};
}

Outcome radial_spectrum()
{
    const HalfLineGrid grid = HalfLineGrid::covering(14.0, 2000);
    double worst = 0.0;
    for (double mu : {0.0, 0.25, 0.5, 1.0}) {
        for (RadialSector s : {RadialSector::even, RadialSector::odd}) {
            const std::vector<double> ev = eigensolve_sym(discretize_radial(s, mu, grid), 8);
            for (int n = 0; n <= 7; ++n) {
                const double exact = radial_exact_eigenvalue(s, mu, n);
                worst = std::max(worst, std::abs(ev[n] - exact) / exact);
            }
        }
    }
    return {worst <= 1e-4, "max relative error " + sci(worst) + " (tol 1e-4)"};
}

Outcome spinor_contracts()
{
    double norm = 0.0;
    double defect = 0.0;
    for (double mu : {0.0, 0.25, 0.5, 1.0}) {
        for (Branch b : {Branch::plus, Branch::minus}) {
            const PhysParams p{mu, 0.5, b};
            for (ParityCase c : {ParityCase::A, ParityCase::B}) {
                for (int n = 0; n <= 10; ++n) {
                    if (c == ParityCase::A && n == 0 && b == Branch::minus) {
                        continue;
                    }
                    norm = std::max(norm, std::abs(joint_norm(spinor(c, n, p)) - 1.0));
                    const auto [d1, d2] = coupled_check(c, n, p);
                    defect = std::max({defect, d1, d2});
                }
            }
        }
    }
    const bool ok = norm <= 1e-10 && defect <= 1e-10;
    return {ok, "norm deviation " + sci(norm) + ", coupled defect " + sci(defect) + " (tol 1e-10)"};
}

Outcome parity_invariance()
{
    double worst = 0.0;
    for (double mu : {0.0, 0.7}) {
        for (double phi : {0.0, std::numbers::pi}) {
            worst = std::max(worst, parity_commutator({mu, 0.5}, SymmetricGrid(0.05, 200), phi));
        }
    }
    return {worst <= 1e-12, "max |[H_D, PR]| " + sci(worst) + " (tol 1e-12)"};
}

Outcome mu_zero()
{
    bool energies = true;
    double spread = 0.0;
    for (double kappa : {0.3, 0.5, 1.7}) {
        for (ParityCase c : {ParityCase::A, ParityCase::B}) {
            for (int n = 0; n <= 10; ++n) {
                const MuZeroRecord rec = mu_zero_reduction(c, n, kappa);
                const int expected = c == ParityCase::A ? 2 * n : 2 * n + 1;
                energies = energies && rec.energies_equal && rec.n_standard == expected;
                spread = std::max({spread, rec.upper_ratio_spread, rec.lower_ratio_spread});
            }
        }
    }
    const bool ok = energies && spread <= 1e-10;
    return {ok, std::string("energies ") + (energies ? "identical" : "differ") + ", ratio spread " + sci(spread) +
                    " (tol 1e-10)"};
}

Outcome coherent()
{
    double norm = 0.0;
    double closed = 0.0;
    double paper = 0.0;
    for (double k : {0.25, 0.5, 0.75, 1.25}) {
        for (complex z : {complex(0.0, 0.0), complex(0.3, 0.0), complex(0.4, 0.2), complex(-0.3, -0.5),
                          complex(0.0, 0.6), complex(0.6, 0.0)}) {
            const CoherentParams p{z, k, {}};
            norm = std::max(norm, std::abs(coherent_series_norm(p) - 1.0));
            for (int i = 1; i <= 40; ++i) {
                const double r = 0.1 * i;
                const complex s = coherent_series(p, r).value;
                closed = std::max(closed, std::abs(coherent_closed(p, r, ExponentVariant::rederived) - s));
                paper = std::max(paper, std::abs(coherent_closed(p, r, ExponentVariant::paper) - s));
            }
        }
    }
    const bool flagged = paper > 1e-6;
    const bool ok = norm <= 1e-10 && closed <= 1e-10 && flagged;
    return {ok, "norm deviation " + sci(norm) + ", rederived deviation " + sci(closed) +
                    ", printed exponent FLAGGED deviation " + sci(paper)};
}

Outcome unified_reconciliation()
{
    int flagged = 0;
    bool interleave = true;
    for (double mu : {0.25, 0.5}) {
        const ReconciliationReport rep = reconcile_unified_spectrum({mu, 0.5}, 10);
        flagged += rep.flagged_rows;
        interleave = interleave && rep.interleaving_matches_union;
    }
    const ReconciliationReport zero = reconcile_unified_spectrum({0.0, 0.5}, 10);
    const bool coincide = zero.unified_matches_union && zero.interleaving_matches_union;
    // Sorted single-formula values against the lowest union values.
    double gap = 0.0;
    for (std::size_t i = 0; i < zero.unified_values.size(); ++i) {
        gap = std::max(gap, std::abs(zero.unified_values[i] - zero.union_values[i]));
    }
    const bool ok = coincide && interleave && flagged > 0;
    return {ok, "mu>0 flagged rows " + std::to_string(flagged) + ", interleaving " +
                    (interleave ? "matches" : "differs") + "; mu=0 unified vs union " +
                    (zero.unified_matches_union ? "coincide" : "differ") + " (max sorted gap " + sci(gap) + ")"};
}

Outcome substrate()
{
    double orth = 0.0;
    for (double alpha : {0.0, 0.3, 1.5}) {
        const QuadratureRule rule = gauss_laguerre(30, alpha);
        for (int n = 0; n <= 12; ++n) {
            const double hn = std::exp(std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0));
            for (int m = 0; m <= n; ++m) {
                const double v = rule.apply([&](double t) { return laguerre(n, alpha, t) * laguerre(m, alpha, t); });
                orth = std::max(orth, std::abs(v - (n == m ? hn : 0.0)) / hn);
            }
        }
    }
    double exact = 0.0;
    for (double alpha : {0.0, 0.5, 1.25}) {
        const QuadratureRule rule = gauss_laguerre(16, alpha);
        for (int j = 0; j < 32; ++j) {
            const double ref = std::exp(std::lgamma(j + alpha + 1.0));
            exact = std::max(exact, std::abs(rule.apply([&](double t) { return std::pow(t, j); }) - ref) / ref);
        }
    }
    double hermite_ratio = 0.0;
    for (int n = 0; n <= 16; ++n) {
        const double ratio = generalized_hermite(n, 0.0, 0.4) / hermite(n, 0.4);
        for (double x : {0.2, 0.7, 1.3, 2.1}) {
            hermite_ratio = std::max(hermite_ratio, std::abs(generalized_hermite(n, 0.0, x) / hermite(n, x) - ratio) /
                                                        std::abs(ratio));
        }
    }
    const bool ok = orth <= 1e-10 && exact <= 1e-10 && hermite_ratio <= 1e-10;
    return {ok, "orthogonality " + sci(orth) + ", exactness " + sci(exact) + ", Hermite ratio " +
                    sci(hermite_ratio) + " (tol 1e-10)"};
}

struct Criterion {
    int id;
    double budget_seconds;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {1, 1.0, ladder_commutator},   {2, 1.0, su11_relations}, {3, 10.0, realization_convergence},
        {4, 60.0, radial_spectrum},    {5, 5.0, spinor_contracts}, {6, 5.0, parity_invariance},
        {7, 2.0, mu_zero},             {8, 10.0, coherent},       {9, 1.0, unified_reconciliation},
        {10, 5.0, substrate},
    };
    return all;
}

bool run_one(const Criterion& c)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < c.budget_seconds;
    const bool pass = o.pass && in_budget;
    std::printf("criterion %d: %s %s; runtime %.3f s (budget %.0f s%s)\n", c.id, pass ? "PASS" : "FAIL",
                o.detail.c_str(), elapsed, c.budget_seconds, in_budget ? "" : ", exceeded");
    return pass;
}

}  // namespace

int main(int argc, char** argv)
{
    int selected = 0;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        selected = std::atoi(argv[2]);
        if (selected < 1 || selected > 10) {
            std::fprintf(stderr, "criterion must be in 1..10\n");
            return 2;
        }
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
        return 2;
    }
    bool all_pass = true;
    for (const Criterion& c : criteria()) {
        if (selected == 0 || c.id == selected) {
            all_pass = run_one(c) && all_pass;
        }
    }
    return all_pass ? 0 : 1;
}

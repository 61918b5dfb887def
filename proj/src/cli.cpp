#include "dunkl/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dunkl/coherent_states.hpp"
#include "dunkl/dirac_dunkl.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/number_format.hpp"
#include "dunkl/verification.hpp"

namespace dunkl::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { csv, json };

struct SpectrumArgs {
    double mu = 0.0;
    double kappa = 1.0;
    std::string case_name = "A";
    int levels = 5;
    std::string branch = "+";
    Format format = Format::csv;
};

struct WavefunctionArgs {
    std::string case_name = "A";
    int n = 0;
    double mu = 0.0;
    double kappa = 1.0;
    std::string branch = "+";
    double rmax = 6.0;
    int samples = 61;
    Gauge gauge = Gauge::half_density;
    Format format = Format::csv;
};

struct CoherentArgs {
    std::optional<double> k;
    std::optional<double> mu;
    std::string sector = "plus";
    double zeta_re = 0.0;
    double zeta_im = 0.0;
    std::string variant = "rederived";
    double rmax = 6.0;
    int samples = 60;
    Format format = Format::csv;
};

struct VerifyArgs {
    bool full = false;
    std::vector<double> mu_list{0.0, 0.25, 0.5, 1.0};
    bool timing = false;
    bool serial = false;
    bool inject_laguerre_fault = false;
};

// JSON number: rounded to the output precision; non-finite becomes null.
ordered_json jnum(double v, int digits)
{
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return round_significant(v, digits);
}

std::vector<Branch> parse_branches(const std::string& b)
{
    if (b == "+") {
        return {Branch::plus};
    }
    if (b == "-") {
        return {Branch::minus};
    }
    return {Branch::plus, Branch::minus};
}

Branch parse_branch(const std::string& b)
{
    return b == "-" ? Branch::minus : Branch::plus;
}

ParityCase parse_case(const std::string& c)
{
    return c == "B" ? ParityCase::B : ParityCase::A;
}

// ---------------------------------------------------------------------------

void cmd_spectrum(const SpectrumArgs& a, int digits, std::ostream& out)
{
    const bool unified = a.case_name == "unified";
    std::vector<std::string> columns{"case", "branch", "n", "n_eff", "E_over_mc2"};
    if (unified) {
        columns.insert(columns.end(), {"matched_case", "matched_n", "delta", "flagged"});
    }
    std::vector<std::vector<std::string>> rows;
    ordered_json jrows = ordered_json::array();

    for (Branch b : parse_branches(a.branch)) {
        const PhysParams params{a.mu, a.kappa, b};
        params.validate();
        if (unified) {
            const ReconciliationReport rep = reconcile_unified_spectrum(params, a.levels);
            for (const ReconciliationRow& r : rep.rows) {
                const double n_eff = r.n + ((r.n % 2 == 0) ? 0.0 : a.mu + 1.0);
                rows.push_back({"unified", to_string(b), std::to_string(r.n), format_number(n_eff, digits),
                                format_number(r.unified, digits), r.matched_case, std::to_string(r.matched_n),
                                format_number(r.delta, digits), r.flagged ? "true" : "false"});
                jrows.push_back({{"case", "unified"},
                                 {"branch", to_string(b)},
                                 {"n", r.n},
                                 {"n_eff", jnum(n_eff, digits)},
                                 {"E_over_mc2", jnum(r.unified, digits)},
                                 {"matched_case", r.matched_case},
                                 {"matched_n", r.matched_n},
                                 {"delta", jnum(r.delta, digits)},
                                 {"flagged", r.flagged}});
            }
            continue;
        }
        const ParityCase c = parse_case(a.case_name);
        for (int n = 0; n < a.levels; ++n) {
            if (c == ParityCase::A && n == 0 && b == Branch::minus) {
                continue;  // no negative-energy partner of the case A ground state
            }
            const double n_eff = (c == ParityCase::A) ? n : n + 0.5 + a.mu;
            const double e = energy(c, n, params);
            rows.push_back({to_string(c), to_string(b), std::to_string(n), format_number(n_eff, digits),
                            format_number(e, digits)});
            jrows.push_back({{"case", to_string(c)},
                             {"branch", to_string(b)},
                             {"n", n},
                             {"n_eff", jnum(n_eff, digits)},
                             {"E_over_mc2", jnum(e, digits)}});
        }
    }

    if (a.format == Format::json) {
        ordered_json j;
        j["mu"] = jnum(a.mu, digits);
        j["kappa"] = jnum(a.kappa, digits);
        j["case"] = a.case_name;
        j["rows"] = jrows;
        out << j.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << row[i];
        }
        out << '\n';
    }
}

void cmd_wavefunction(const WavefunctionArgs& a, int digits, std::ostream& out)
{
    const PhysParams params{a.mu, a.kappa, parse_branch(a.branch)};
    const SpinorState s = spinor(parse_case(a.case_name), a.n, params);
    const double norm = joint_norm(s);
    const PolyFunc p1 = s.upper_poly();
    const PolyFunc p2 = s.lower_poly();

    // Polynomial parts times the Gaussian give the weighted gauge; the half
    // density gauge multiplies by r^mu (exact at r = 0 as well).
    const auto value = [&](const PolyFunc& p, double r) {
        const double w = p(r) * std::exp(-0.5 * r * r);
        if (a.gauge == Gauge::weighted) {
            return w;
        }
        return std::pow(r, a.mu) * w;
    };

    std::vector<std::array<double, 3>> samples;
    for (int i = 0; i < a.samples; ++i) {
        const double r = (a.samples == 1) ? 0.0 : a.rmax * i / (a.samples - 1);
        samples.push_back({r, value(p1, r), value(p2, r)});
    }

    if (a.format == Format::json) {
        ordered_json j;
        j["case"] = a.case_name;
        j["n"] = a.n;
        j["mu"] = jnum(a.mu, digits);
        j["kappa"] = jnum(a.kappa, digits);
        j["branch"] = to_string(params.branch);
        j["gauge"] = to_string(a.gauge);
        j["energy"] = jnum(s.energy, digits);
        j["joint_norm"] = jnum(norm, digits);
        j["lower_phase"] = s.printed_lower_phase;
        ordered_json rows = ordered_json::array();
        for (const auto& [r, v1, v2] : samples) {
            rows.push_back({{"r", jnum(r, digits)}, {"psi1", jnum(v1, digits)}, {"psi2", jnum(v2, digits)}});
        }
        j["samples"] = rows;
        out << j.dump(2) << '\n';
        return;
    }
    out << "# case=" << a.case_name << " n=" << a.n << " mu=" << format_number(a.mu, digits)
        << " kappa=" << format_number(a.kappa, digits) << " branch=" << to_string(params.branch)
        << " gauge=" << to_string(a.gauge) << '\n';
    out << "# energy=" << format_number(s.energy, digits) << '\n';
    out << "# joint_norm=" << format_number(norm, digits) << '\n';
    out << "r,psi1,psi2\n";
    for (const auto& [r, v1, v2] : samples) {
        out << format_number(r, digits) << ',' << format_number(v1, digits) << ',' << format_number(v2, digits)
            << '\n';
    }
}

int cmd_coherent(const CoherentArgs& a, int digits, std::ostream& out)
{
    double k = 0.0;
    if (a.k) {
        k = *a.k;
    } else {
        const double mu = a.mu.value_or(0.0);
        require_dunkl_mu(mu, "coherent");
        k = physical_realization(a.sector == "minus" ? Sector::minus : Sector::plus, mu).bargmann_k;
    }
    const CoherentParams p{{a.zeta_re, a.zeta_im}, k, {}};
    p.validate();

    std::vector<double> radii;
    for (int i = 1; i <= a.samples; ++i) {
        radii.push_back(a.rmax * i / a.samples);
    }
    std::vector<complex> values;
    double deviation = 0.0;  // max |variant - series|, or |rederived - series| for the series itself
    for (double r : radii) {
        const complex series = coherent_series(p, r).value;
        complex v;
        if (a.variant == "series") {
            v = series;
            deviation = std::max(deviation, std::abs(coherent_closed(p, r) - series));
        } else {
            v = coherent_closed(p, r, a.variant == "paper" ? ExponentVariant::paper : ExponentVariant::rederived);
            deviation = std::max(deviation, std::abs(v - series));
        }
        values.push_back(v);
    }
    const bool flagged = a.variant == "paper" && deviation > 1e-6;

    if (a.format == Format::json) {
        ordered_json j;
        j["k"] = jnum(k, digits);
        j["zeta_re"] = jnum(a.zeta_re, digits);
        j["zeta_im"] = jnum(a.zeta_im, digits);
        j["variant"] = a.variant;
        j["max_deviation_vs_series"] = jnum(deviation, digits);
        j["flagged"] = flagged;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < radii.size(); ++i) {
            rows.push_back({{"r", jnum(radii[i], digits)},
                            {"re", jnum(values[i].real(), digits)},
                            {"im", jnum(values[i].imag(), digits)}});
        }
        j["samples"] = rows;
        out << j.dump(2) << '\n';
    } else {
        out << "# k=" << format_number(k, digits) << " zeta=" << format_number(a.zeta_re, digits) << ','
            << format_number(a.zeta_im, digits) << " variant=" << a.variant << '\n';
        out << "# max_deviation_vs_series=" << format_number(deviation, digits) << '\n';
        out << "# flagged=" << (flagged ? "true" : "false") << '\n';
        out << "r,re,im\n";
        for (std::size_t i = 0; i < radii.size(); ++i) {
            out << format_number(radii[i], digits) << ',' << format_number(values[i].real(), digits) << ','
                << format_number(values[i].imag(), digits) << '\n';
        }
    }
    return exit_ok;
}

int cmd_verify(const VerifyArgs& a, int digits, std::ostream& out, std::ostream& err)
{
    VerifyOptions opt;
    opt.quick = !a.full;
    opt.mu_list = a.mu_list;
    opt.timing = a.timing;
    opt.concurrent = !a.serial;
    opt.inject_laguerre_fault = a.inject_laguerre_fault;
    const VerificationReport report = run_verification(opt);
    out << report.to_json(digits).dump(2) << '\n';
    const int fails = report.count(CheckStatus::fail);
    err << "verify: " << report.count(CheckStatus::pass) << " pass, " << fails << " fail, "
        << report.count(CheckStatus::flagged) << " flagged\n";
    return report.passed() ? exit_ok : exit_verification_failed;
}

const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, Gauge> kGauges{{"half_density", Gauge::half_density}, {"weighted", Gauge::weighted}};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirac-Dunkl oscillator: spectra, eigenspinors, coherent states and verification"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the artifact to this file instead of stdout");

    SpectrumArgs sp;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Energy levels per parity case or the single-formula spectrum");
    spectrum->add_option("--mu", sp.mu, "Dunkl parameter (mu > -1/2)");
    spectrum->add_option("--kappa", sp.kappa, "hbar omega / m c^2 (> 0)");
    spectrum->add_option("--case", sp.case_name, "A, B or unified")->check(CLI::IsMember({"A", "B", "unified"}));
    spectrum->add_option("--levels", sp.levels, "Number of levels")->check(CLI::Range(1, 100000));
    spectrum->add_option("--branch", sp.branch, "+, - or both")->check(CLI::IsMember({"+", "-", "both"}));
    spectrum->add_option("--format", sp.format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));

    WavefunctionArgs wf;
    CLI::App* wave = app.add_subcommand("wavefunction", "Sampled eigenspinor components");
    wave->add_option("--case", wf.case_name, "A or B")->check(CLI::IsMember({"A", "B"}));
    wave->add_option("--n", wf.n, "Level index")->check(CLI::Range(0, 200));
    wave->add_option("--mu", wf.mu, "Dunkl parameter (mu > -1/2)");
    wave->add_option("--kappa", wf.kappa, "hbar omega / m c^2 (> 0)");
    wave->add_option("--branch", wf.branch, "+ or -")->check(CLI::IsMember({"+", "-"}));
    wave->add_option("--rmax", wf.rmax, "Largest sampled r")->check(CLI::PositiveNumber);
    wave->add_option("--samples", wf.samples, "Number of samples including r = 0")->check(CLI::Range(1, 1000000));
    wave->add_option("--gauge", wf.gauge, "half_density or weighted")->transform(CLI::CheckedTransformer(kGauges));
    wave->add_option("--format", wf.format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));

    CoherentArgs co;
    CLI::App* coherent = app.add_subcommand("coherent", "Sampled SU(1,1) coherent-state profile");
    auto* k_opt = coherent->add_option("--k", co.k, "Bargmann index (> 0)");
    auto* mu_opt = coherent->add_option("--mu", co.mu, "Dunkl parameter; selects k from --sector");
    k_opt->excludes(mu_opt);
    coherent->add_option("--sector", co.sector, "plus (k = 1/4 + mu/2) or minus (k = 3/4 + mu/2)")
        ->check(CLI::IsMember({"plus", "minus"}));
    coherent->add_option("--zeta-re", co.zeta_re, "Re zeta");
    coherent->add_option("--zeta-im", co.zeta_im, "Im zeta");
    coherent->add_option("--variant", co.variant, "rederived, paper or series")
        ->check(CLI::IsMember({"rederived", "paper", "series"}));
    coherent->add_option("--rmax", co.rmax, "Largest sampled r")->check(CLI::PositiveNumber);
    coherent->add_option("--samples", co.samples, "Number of samples in (0, rmax]")->check(CLI::Range(1, 1000000));
    coherent->add_option("--format", co.format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));

    VerifyArgs vf;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites and print a JSON report");
    auto* quick = verify->add_flag("--quick", "Reduced grids and parameter sets (default)");
    auto* full = verify->add_flag("--full", vf.full, "Full grids and parameter sets");
    quick->excludes(full);
    verify->add_option("--mu-list", vf.mu_list, "Comma-separated Dunkl parameters")->delimiter(',');
    verify->add_flag("--timing", vf.timing, "Add per-suite timing metadata");
    verify->add_flag("--serial", vf.serial, "Run suite families one after another");
    verify->add_flag("--inject-laguerre-fault", vf.inject_laguerre_fault,
                     "Perturb the Laguerre recurrence (harness self-test; must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        const int digits = precision_from_environment();
        std::ofstream file;
        std::ostream* sink = &out;
        if (!output_path.empty()) {
            file.open(output_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << output_path << " for writing\n";
                return exit_usage;
            }
            sink = &file;
        }
        int code = exit_ok;
        if (spectrum->parsed()) {
            cmd_spectrum(sp, digits, *sink);
        } else if (wave->parsed()) {
            cmd_wavefunction(wf, digits, *sink);
        } else if (coherent->parsed()) {
            code = cmd_coherent(co, digits, *sink);
        } else if (verify->parsed()) {
            code = cmd_verify(vf, digits, *sink, err);
        }
        sink->flush();
        return code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: computation failed: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

}  // namespace dunkl::cli

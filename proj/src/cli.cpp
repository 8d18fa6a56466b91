#include "multifluid/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multifluid/error.hpp"
#include "multifluid/io.hpp"
#include "multifluid/mms.hpp"
#include "multifluid/run.hpp"

namespace multifluid::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config;
    std::vector<std::string> overrides;
    bool strict = false;
    bool skip_audit = false;
    std::string out;
    // compare
    std::string against;
    double perturb = 0.0;
    // plot-data
    std::string input;
    std::string column;
};

fs::path output_dir(const Options& o, const RunConfig* cfg) {
    if (!o.out.empty()) return o.out;
    if (cfg && !cfg->output.dir.empty()) return cfg->output.dir;
    if (const char* env = std::getenv("MULTIFLUID_OUTPUT_DIR"); env && *env) return env;
    return "multifluid-out";
}

fs::path prepare(const fs::path& dir) {
    fs::create_directories(dir);
    return dir;
}

Provenance provenance(const std::string& sub, const RunConfig& cfg, const Options& o) {
    return Provenance{sub, hex64(fnv1a64(cfg.canonical)), o.overrides, {}};
}

RunConfig load(const Options& o) {
    if (o.config.empty()) throw ParseError("--config", -1, "a config file is required");
    RunConfig cfg = load_config(o.config, o.overrides);
    if (o.skip_audit) cfg.skip_audit = true;
    return cfg;
}

void write_audit(const fs::path& dir, const AdmissibilityReport& rep, const Provenance& prov) {
    std::ofstream f(prepare(dir) / "audit.txt");
    write_provenance(f, prov);
    f << rep.to_key_value();
}

int check_law(const Options& o, std::ostream& out) {
    const RunConfig cfg = load(o);
    const AdmissibilityReport rep = audit_law(cfg.law, cfg.window, cfg.psi, cfg.audit);
    const fs::path dir = output_dir(o, &cfg);
    write_audit(dir, rep, provenance("check-law", cfg, o));
    out << (rep.pass() ? "PASS" : "FAIL") << " admissibility audit (" << (dir / "audit.txt").string() << ")\n";
    for (const auto& f : rep.failures) out << f << '\n';
    return rep.pass() ? kOk : kAdmissibility;
}

std::string snapshot_name(std::size_t idx) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%04zu.csv", idx);
    return buf;
}

int run_cmd(const Options& o, std::ostream& out) {
    const RunConfig cfg = load(o);
    const fs::path dir = prepare(output_dir(o, &cfg));
    Provenance prov = provenance("run", cfg, o);
    if (cfg.skip_audit) prov.extra.push_back("audit_bypassed=true");

    std::ofstream diag(dir / "diagnostics.csv");
    write_provenance(diag, prov);
    write_diagnostics_header(diag);
    RunObserver obs;
    obs.on_record = [&](const State&, const DiagnosticsRecord& r) {
        write_diagnostics_row(diag, r);
        diag.flush();
    };
    obs.on_snapshot = [&](const State& s, std::size_t idx) {
        std::ofstream f(dir / snapshot_name(idx));
        write_snapshot_csv(f, s, cfg.grid, cfg.law, cfg.psi, prov);
    };

    RunResult res;
    try {
        res = run(cfg, obs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::AdmissibilityFailure) {
            write_audit(dir, audit_law(cfg.law, cfg.window, cfg.psi, cfg.audit), prov);
        }
        throw;
    }

    const double floor = 1e-10 * cfg.law.reference().rho;
    const DensityBoundsReport dens = density_bounds_check(res.records, floor);
    std::ofstream v(dir / "verdicts.txt");
    write_provenance(v, prov);
    v << "steps = " << res.steps << '\n';
    v << "mugrad_constant = " << format_double(res.mugrad_constant) << '\n';
    v << "density.lo = " << format_double(dens.rho_lo) << '\n';
    v << "density.hi = " << format_double(dens.rho_hi) << '\n';
    v << "density.verdict = " << to_string(dens.verdict) << '\n';
    bool failed = dens.verdict == Verdict::Fail;
    if (res.records.size() >= 2) {
        const BudgetReport b = entropy_budget_check(res.records, res.record_dt);
        const TransportReport tr = transport_invariant_check(res.records);
        v << "budget.max_r1 = " << format_double(b.max_r1) << '\n';
        v << "budget.tol1 = " << format_double(b.tol1) << '\n';
        v << "budget.max_abs_r2 = " << format_double(b.max_abs_r2) << '\n';
        v << "budget.verdict = " << to_string(b.classical) << '\n';
        v << "transport.drift = " << format_double(tr.drift) << '\n';
        v << "transport.relative_drift = " << format_double(tr.relative_drift) << '\n';
        v << "transport.verdict = " << to_string(tr.verdict) << '\n';
        out << b.verdict_line << '\n';
        out << to_string(tr.verdict) << " transport drift = " << tr.relative_drift << " (relative)\n";
        failed = failed || b.classical == Verdict::Fail || tr.verdict == Verdict::Fail;
    }
    out << to_string(dens.verdict) << " density bounds [" << dens.rho_lo << ", " << dens.rho_hi << "]\n";
    out << "completed " << res.steps << " steps to t = " << res.final_state.t << '\n';
    return o.strict && failed ? kVerdict : kOk;
}

int mms_cmd(const Options& o, std::ostream& out) {
    const RunConfig cfg = load(o);
    TravelingWave w;
    w.length = cfg.grid.length();
    w.speed = cfg.mms.speed;
    w.rho0 = cfg.mms.rho0;
    w.rho_amp = cfg.mms.rho_amp;
    w.u_amp = cfg.mms.u_amp;
    w.mu0 = cfg.mms.mu0;
    w.mu_amp = cfg.mms.mu_amp;
    const MmsResult r =
        mms_study(traveling_wave(w), cfg.law, cfg.psi, cfg.mms.sizes, cfg.mms.t_end, cfg.time.cfl, cfg.time.limiter);
    const fs::path dir = prepare(output_dir(o, &cfg));
    std::ofstream f(dir / "mms.csv");
    write_provenance(f, provenance("mms", cfg, o));
    f << "N,err_rho,err_mom,err_spc,order_rho,order_mom,order_spc\n";
    for (std::size_t k = 0; k < r.sizes.size(); ++k) {
        auto ord = [&](const std::vector<double>& v) { return k == 0 ? std::string("nan") : format_double(v[k - 1]); };
        f << r.sizes[k] << ',' << format_double(r.err_rho[k]) << ',' << format_double(r.err_mom[k]) << ','
          << format_double(r.err_spc[k]) << ',' << ord(r.order_rho) << ',' << ord(r.order_mom) << ','
          << ord(r.order_spc) << '\n';
        out << "N=" << r.sizes[k] << " err_rho=" << r.err_rho[k] << " err_mom=" << r.err_mom[k]
            << " err_spc=" << r.err_spc[k];
        if (k > 0) out << " order_rho=" << r.order_rho[k - 1];
        out << '\n';
    }
    return kOk;
}

int compare_cmd(const Options& o, std::ostream& out) {
    const RunConfig a = load(o);
    RunConfig b = a;
    if (!o.against.empty()) {
        b = load_config(o.against, o.overrides);
        if (o.skip_audit) b.skip_audit = true;
    }
    if (o.perturb != 0.0) b.init.perturb_amplitude += o.perturb;
    if (o.against.empty() && o.perturb == 0.0) {
        out << "note: comparing the configuration with itself\n";
    }
    if (a.grid.size() != b.grid.size() || a.grid.length() != b.grid.length()) {
        throw Error(ErrorKind::InvalidInput, "compared runs use different grids");
    }
    std::vector<State> sa, sb;
    RunObserver oa, ob;
    oa.on_record = [&](const State& s, const DiagnosticsRecord&) { sa.push_back(s); };
    ob.on_record = [&](const State& s, const DiagnosticsRecord&) { sb.push_back(s); };
    run(a, oa);
    run(b, ob);
    const StabilityReport rep = stability_compare(sa, sb, a.grid);

    const fs::path dir = prepare(output_dir(o, &a));
    Provenance prov = provenance("compare", a, o);
    prov.extra.push_back("against_hash=" + hex64(fnv1a64(b.canonical)));
    prov.extra.push_back("perturb=" + format_double(o.perturb));
    std::ofstream f(dir / "stability.csv");
    write_provenance(f, prov);
    f << "t,X,tau2,rho_zeta2,chi2\n";
    for (const auto& r : rep.series) {
        f << format_double(r.t) << ',' << format_double(r.X) << ',' << format_double(r.tau2) << ','
          << format_double(r.rho_zeta2) << ',' << format_double(r.chi2) << '\n';
    }
    std::ofstream v(dir / "stability_verdict.txt");
    write_provenance(v, prov);
    v << "verdict = " << to_string(rep.verdict) << '\n';
    v << "rate_defined = " << (rep.rate_defined ? "true" : "false") << '\n';
    v << "rate = " << format_double(rep.rate) << '\n';
    v << "max_excursion = " << format_double(rep.max_excursion) << '\n';
    out << to_string(rep.verdict) << " stability: rate = " << rep.rate << ", max excursion = " << rep.max_excursion
        << '\n';
    return o.strict && rep.verdict == Verdict::Fail ? kVerdict : kOk;
}

int plot_data(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.input);
    if (!in) {
        err << "error: cannot open " << o.input << '\n';
        return kUsage;
    }
    std::stringstream raw;
    raw << in.rdbuf();
    const std::string content = raw.str();
    std::istringstream is(content);
    const CsvTable t = read_csv(is);
    const int col = t.column(o.column);
    if (col < 0) {
        err << "error: unknown column '" << o.column << "'; available:";
        for (const auto& c : t.columns) err << ' ' << c;
        err << '\n';
        return kUsage;
    }
    std::ostringstream body;
    Provenance prov{"plot-data", hex64(fnv1a64(content)), o.overrides, {"input=" + o.input, "column=" + o.column}};
    write_provenance(body, prov);
    body << t.columns[0] << ' ' << o.column << '\n';
    for (const auto& row : t.rows) body << format_double(row[0]) << ' ' << format_double(row[col]) << '\n';
    if (o.out.empty()) {
        out << body.str();
    } else {
        const fs::path dir = prepare(o.out);
        const fs::path file = dir / (fs::path(o.input).stem().string() + "_" + o.column + ".dat");
        std::ofstream(file) << body.str();
        out << file.string() << '\n';
    }
    return kOk;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulator and verification harness for 1D barotropic multicomponent Navier-Stokes flow",
                 "multifluid"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "Run-config file")->check(CLI::ExistingFile);
        sub->add_option("--set", o.overrides, "Override section.key=value (repeatable)");
        sub->add_flag("--strict", o.strict, "Exit 4 when a verdict fails");
        sub->add_flag("--skip-audit", o.skip_audit, "Run even if the law fails the audit");
        sub->add_option("--out", o.out, "Output directory");
    };
    auto* check = app.add_subcommand("check-law", "Audit the pressure law against the hypotheses");
    auto* runc = app.add_subcommand("run", "Integrate a configuration to t_end");
    auto* mms = app.add_subcommand("mms", "Manufactured-solution convergence study");
    auto* cmp = app.add_subcommand("compare", "Distance functional between two nearby runs");
    auto* plot = app.add_subcommand("plot-data", "Extract a two-column series from a CSV output");
    for (auto* s : {check, runc, mms, cmp}) {
        common(s);
        s->get_option("--config")->required();
    }
    cmp->add_option("--against", o.against, "Second config file")->check(CLI::ExistingFile);
    cmp->add_option("--perturb", o.perturb, "Extra density bump added to the second run");
    plot->add_option("--input", o.input, "Diagnostics or snapshot CSV")->required();
    plot->add_option("--column", o.column, "Column to extract")->required();
    plot->add_option("--out", o.out, "Output directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        }
        return kUsage;
    }

    try {
        if (check->parsed()) return check_law(o, out);
        if (runc->parsed()) return run_cmd(o, out);
        if (mms->parsed()) return mms_cmd(o, out);
        if (cmp->parsed()) return compare_cmd(o, out);
        if (plot->parsed()) return plot_data(o, out, err);
    } catch (const DivergedError& e) {
        err << e.what() << '\n';
        return kDiverged;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::AdmissibilityFailure:
            case ErrorKind::WindowInadmissible:
            case ErrorKind::InadmissibleAlpha: return kAdmissibility;
            case ErrorKind::SimulationDiverged: return kDiverged;
            case ErrorKind::VerificationFailure: return kVerdict;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace multifluid::cli

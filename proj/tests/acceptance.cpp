// Acceptance suite: one PASS/FAIL line per criterion, measured values inline.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "multifluid/audit.hpp"
#include "multifluid/config.hpp"
#include "multifluid/error.hpp"
#include "multifluid/mms.hpp"
#include "multifluid/run.hpp"
#include "multifluid/thermo.hpp"

using namespace multifluid;

namespace {

constexpr double kPi = std::numbers::pi;

std::string cfg_path(const char* name) { return std::string(MULTIFLUID_CONFIG_DIR) + "/" + name; }

int failures = 0;

void report(int id, bool pass, const std::string& what, double seconds) {
    std::printf("[%s] %2d %s (%.1fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Runs one criterion, turning library errors into a FAIL line.
void criterion(int id, const char* name, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("error: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, pass, std::string(name) + ": " + detail, s);
}

// Density range seen by every benchmark run, compared with its initial range.
struct Envelope {
    std::string name;
    double rho0_min, rho0_max, lo, hi;
};
std::vector<Envelope> envelopes;

void track(const std::string& name, const std::vector<DiagnosticsRecord>& recs) {
    Envelope e{name, recs.front().rho_min, recs.front().rho_max, recs.front().rho_min, recs.front().rho_max};
    for (const auto& r : recs) {
        e.lo = std::min(e.lo, r.rho_min);
        e.hi = std::max(e.hi, r.rho_max);
    }
    envelopes.push_back(e);
}

RunResult tracked_run(const std::string& name, const RunConfig& cfg) {
    RunResult r = run(cfg);
    track(name, r.records);
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double lsq_order(const std::vector<std::size_t>& n, const std::vector<double>& err) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
        const double x = std::log2(static_cast<double>(n[k]));
        const double y = std::log2(err[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return -(m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

int main() {
    criterion(1, "admissibility reproduction", [](std::string& d) {
        const bool good = gamma_window_valid(1.3, 1.4);
        const bool bad = gamma_window_valid(1.3, 2.0);
        const AlphaWindow w = alpha_window(1.3, 1.4);
        const double e1 = std::abs(w.lower.lo - 0.9 / 1.3), e2 = std::abs(w.lower.hi - 1.8 / 1.4);
        const double e3 = std::abs(w.upper.lo - (1.9 / 1.3 - 1.0)), e4 = std::abs(w.upper.hi - 0.8 / 1.4);
        const double err = std::max({e1, e2, e3, e4});
        const bool shape = w.lower.lo_open && !w.lower.hi_open && !w.upper.lo_open && w.upper.hi_open &&
                           !w.lower.empty() && !w.upper.empty();
        d = fmt("(1.3,1.4) valid=%d, (1.3,2.0) valid=%d, lower (%.16f, %.16f], upper [%.16f, %.16f), max endpoint err %.1e",
                good, bad, w.lower.lo, w.lower.hi, w.upper.lo, w.upper.hi, err);
        return good && !bad && shape && err <= 1e-12;
    });

    criterion(2, "exponent positivity", [](std::string& d) {
        const XiExponents x = xi_exponents(1.3, 1.4, 1.0, 0.5);
        d = fmt("eta = %.15f, sigma = %.15f", x.eta, x.sigma);
        return std::abs(x.eta - 0.4) <= 1e-12 && std::abs(x.sigma - 0.1) <= 1e-12 && x.eta > 0 && x.sigma > 0;
    });

    criterion(3, "internal energy closed form", [](std::string& d) {
        const PressureLaw law = PressureLaw::power(ParamCurve::constant(1.0), ParamCurve::constant(2.0));
        EnergyQuadrature q;
        q.closed_form = false;
        double worst = 0.0;
        for (double rho : {0.5, 2.0, 3.0}) {
            const double exact = (rho - 1) * (rho - 1);
            worst = std::max(worst, rel(internal_energy(law, rho, 0.0, q), exact));
        }
        const double at_ref = internal_energy(law, 1.0, 0.0, q);
        const double at_ref_cf = internal_energy(law, 1.0, 0.0);
        d = fmt("max rel err (quadrature) %.2e, E(ref) = %g / %g", worst, at_ref, at_ref_cf);
        return worst <= 1e-9 && at_ref == 0.0 && at_ref_cf == 0.0;
    });

    criterion(4, "energy identity", [](std::string& d) {
        const RunConfig pw = load_config(cfg_path("tanh.cfg"));
        const RunConfig nu = load_config(cfg_path("nuclear.cfg"));
        double worst = 0.0;
        for (const PressureLaw* law : {&pw.law, &nu.law}) {
            for (int i = 0; i < 20; ++i) {
                const double rho = 0.1 * std::pow(100.0, i / 19.0);
                for (int j = 0; j < 20; ++j) {
                    const double mu = j / 19.0;
                    const double r = std::abs(energy_identity_residual(*law, rho, mu));
                    worst = std::max(worst, r / std::max(1.0, std::abs(law->pressure(rho, mu))));
                }
            }
        }
        d = fmt("max |residual| / max(1,p) = %.2e over 2 x 20 x 20 samples, rho in [0.1, 10]", worst);
        return worst <= 1e-8;
    });

    // Smoke benchmark at N and 2N, shared by criteria 5 and 6.
    RunResult smoke, smoke2;
    bool smoke_ok = true;
    try {
        smoke = tracked_run("smoke N=256", load_config(cfg_path("smoke.cfg")));
        smoke2 = tracked_run("smoke N=512", load_config(cfg_path("smoke.cfg"), {"grid.n=512"}));
    } catch (const std::exception& e) {
        smoke_ok = false;
        std::printf("smoke benchmark failed: %s\n", e.what());
    }

    criterion(5, "conservation", [&](std::string& d) {
        if (!smoke_ok) return false;
        const auto& r0 = smoke.records.front();
        double dm = 0, dq = 0, ds = 0;
        for (const auto& r : smoke.records) {
            dm = std::max(dm, rel(r.mass, r0.mass));
            dq = std::max(dq, rel(r.momentum, r0.momentum));
            ds = std::max(ds, rel(r.species, r0.species));
        }
        d = fmt("N=256, %zu steps: mass %.1e, momentum %.1e, species %.1e (relative)", smoke.steps, dm, dq, ds);
        return dm <= 1e-12 && ds <= 1e-12 && dq <= 1e-10;
    });

    criterion(6, "classical entropy inequality", [&](std::string& d) {
        if (!smoke_ok) return false;
        const BudgetReport a = entropy_budget_check(smoke.records, smoke.record_dt);
        const BudgetReport b = entropy_budget_check(smoke2.records, smoke2.record_dt);
        const double factor = a.max_abs_r1 / b.max_abs_r1;
        d = fmt("N=256 max r1 = %.2e <= tol %.1e; max|r1| %.3e -> %.3e at N=512 (factor %.2f, dt steps %zu -> %zu)",
                a.max_r1, a.tol1, a.max_abs_r1, b.max_abs_r1, factor, smoke.steps, smoke2.steps);
        return a.classical == Verdict::Pass && factor >= 1.7;
    });

    criterion(7, "BD identity", [](std::string& d) {
        std::vector<double> r2;
        for (const char* n : {"128", "256", "512"}) {
            const RunResult r = tracked_run(std::string("bd N=") + n, load_config(cfg_path("bd.cfg"), {std::string("grid.n=") + n}));
            r2.push_back(entropy_budget_check(r.records, r.record_dt).max_abs_r2);
        }
        const double f1 = r2[0] / r2[1], f2 = r2[1] / r2[2];
        d = fmt("max|r2| %.3e, %.3e, %.3e at N=128,256,512 (factors %.2f, %.2f)", r2[0], r2[1], r2[2], f1, f2);
        return f1 >= 1.7 && f2 >= 1.7;
    });

    // Transport runs also feed the density envelope.
    TransportReport tr1, tr2;
    bool tanh_ok = true;
    try {
        const RunResult a = tracked_run("tanh N=1024", load_config(cfg_path("tanh.cfg")));
        const RunResult b = tracked_run("tanh N=2048", load_config(cfg_path("tanh.cfg"), {"grid.n=2048"}));
        tr1 = transport_invariant_check(a.records);
        tr2 = transport_invariant_check(b.records);
    } catch (const std::exception& e) {
        tanh_ok = false;
        std::printf("tanh benchmark failed: %s\n", e.what());
    }

    // Acoustic: a single Fourier mode of density at rest, timed by the zero
    // crossings of its projection.
    double speed = 0.0;
    std::size_t crossings = 0;
    std::string acoustic_error;
    try {
        const RunConfig cfg = load_config(cfg_path("acoustic.cfg"));
        const Grid& g = cfg.grid;
        const double k = 2 * kPi / g.length();
        const double amp = 1e-3;
        State s(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = g.center(i);
            // exact cell average of sin
            const double avg = (std::cos(k * (x - g.dx() / 2)) - std::cos(k * (x + g.dx() / 2))) / (k * g.dx());
            s.rho[i] = 1.0 + amp * avg;
            s.spc[i] = s.rho[i] * cfg.law.reference().mu;
        }
        Stepper st(g, cfg.law, cfg.psi, SolverOptions{cfg.time.limiter});
        auto proj = [&] {
            double a = 0;
            for (std::size_t i = 0; i < g.size(); ++i) a += (s.rho[i] - 1.0) * std::sin(k * g.center(i));
            return a;
        };
        std::vector<DiagnosticsRecord> recs{record(s, g, cfg.law, cfg.psi)};
        std::vector<double> zeros;
        double prev = proj(), t_prev = 0.0, next_record = 1.0;
        while (s.t < cfg.time.t_end) {
            st.step(s, std::min(st.stable_dt(s, cfg.time.cfl), cfg.time.t_end - s.t));
            const double a = proj();
            if ((a > 0) != (prev > 0)) zeros.push_back(t_prev + (s.t - t_prev) * prev / (prev - a));
            prev = a;
            t_prev = s.t;
            if (s.t >= next_record) {
                recs.push_back(record(s, g, cfg.law, cfg.psi));
                next_record += 1.0;
            }
        }
        track("acoustic N=1024", recs);
        crossings = zeros.size();
        if (crossings >= 2) {
            const double omega = kPi * static_cast<double>(crossings - 1) / (zeros.back() - zeros.front());
            speed = omega / k;
        }
    } catch (const std::exception& e) {
        acoustic_error = e.what();
    }

    criterion(8, "density bounds", [](std::string& d) {
        bool pass = !envelopes.empty();
        double worst_lo = 1e300, worst_hi = 0;
        for (const auto& e : envelopes) {
            worst_lo = std::min(worst_lo, e.lo / e.rho0_min);
            worst_hi = std::max(worst_hi, e.hi / e.rho0_max);
            pass = pass && e.lo >= 0.5 * e.rho0_min && e.hi <= 2.0 * e.rho0_max;
        }
        d = fmt("%zu runs, no divergence; min rho / min rho0 >= %.4f, max rho / max rho0 <= %.4f", envelopes.size(),
                worst_lo, worst_hi);
        return pass && envelopes.size() == 8;
    });

    criterion(9, "transport invariant", [&](std::string& d) {
        if (!tanh_ok) return false;
        d = fmt("sup|mu_x/rho| = %.4f, drift %.3e (%.3f%%) at N=1024, %.3e at N=2048 (factor %.2f)", tr1.initial,
                tr1.drift, 100 * tr1.relative_drift, tr2.drift, tr1.drift / tr2.drift);
        return tr1.relative_drift <= 0.05 && tr2.drift <= 0.5 * tr1.drift;
    });

    criterion(10, "acoustic consistency", [&](std::string& d) {
        if (!acoustic_error.empty()) {
            d = acoustic_error;
            return false;
        }
        const double e = speed / std::sqrt(2.0) - 1.0;
        d = fmt("speed %.6f vs sqrt(2) = %.6f (rel %.2e, %zu zero crossings, N=1024)", speed, std::sqrt(2.0), e, crossings);
        return crossings >= 3 && std::abs(e) <= 0.02;
    });

    criterion(11, "manufactured solution", [](std::string& d) {
        const RunConfig cfg = load_config(cfg_path("mms.cfg"));
        TravelingWave w;
        w.length = cfg.grid.length();
        w.speed = cfg.mms.speed;
        w.rho0 = cfg.mms.rho0;
        w.rho_amp = cfg.mms.rho_amp;
        w.u_amp = cfg.mms.u_amp;
        w.mu0 = cfg.mms.mu0;
        w.mu_amp = cfg.mms.mu_amp;
        const MmsResult r = mms_study(traveling_wave(w), cfg.law, cfg.psi, cfg.mms.sizes, cfg.mms.t_end,
                                      cfg.time.cfl, cfg.time.limiter);
        const double orho = lsq_order(r.sizes, r.err_rho);
        const double omom = lsq_order(r.sizes, r.err_mom);
        const double ospc = lsq_order(r.sizes, r.err_spc);
        std::string pairs;
        for (std::size_t k = 0; k < r.order_rho.size(); ++k) {
            pairs += fmt(" %.2f/%.2f/%.2f", r.order_rho[k], r.order_mom[k], r.order_spc[k]);
        }
        d = fmt("fitted order over N=64..512: rho %.3f, mom %.3f, spc %.3f; pairwise rho/mom/spc:%s", orho, omom,
                ospc, pairs.c_str());
        auto ok = [](double o) { return std::abs(o - 2.0) <= 0.3; };
        return r.monotone && ok(orho) && ok(omom) && ok(ospc);
    });

    criterion(12, "stability", [](std::string& d) {
        const double eps = 1e-2;
        auto trajectory = [](const RunConfig& c) {
            std::vector<State> v;
            RunObserver o;
            o.on_record = [&v](const State& s, const DiagnosticsRecord&) { v.push_back(s); };
            run(c, o);
            return v;
        };
        auto sup = [](const StabilityReport& r) {
            double m = 0;
            for (const auto& x : r.series) m = std::max(m, x.X);
            return m;
        };
        RunConfig base = load_config(cfg_path("smoke.cfg"), {"output.interval=0.01"});
        const auto a = trajectory(base);
        const StabilityReport same = stability_compare(a, trajectory(base), base.grid);

        RunConfig p1 = base, p2 = base;
        p1.init.perturb_amplitude = eps;
        p2.init.perturb_amplitude = eps / 2;
        const StabilityReport r1 = stability_compare(a, trajectory(p1), base.grid);
        const StabilityReport r2 = stability_compare(a, trajectory(p2), base.grid);
        const double ratio = sup(r1) / sup(r2);

        RunConfig fine = base;
        fine.output.interval = 0.005;
        RunConfig f1 = fine;
        f1.init.perturb_amplitude = eps;
        const StabilityReport rf = stability_compare(trajectory(fine), trajectory(f1), fine.grid);
        const double shift = std::abs(rf.rate - r1.rate) / std::abs(r1.rate);

        d = fmt("identical: %s; sup X ratio (eps vs eps/2) %.4f; K = %.4f (interval 0.01), %.4f (0.005), change %.1f%%; "
                "excursion %.3f",
                std::string(to_string(same.verdict)).c_str(), ratio, r1.rate, rf.rate, 100 * shift, r1.max_excursion);
        return same.verdict == Verdict::Identical && std::abs(ratio - 4.0) <= 0.8 && r1.rate_defined &&
               rf.rate_defined && r1.verdict == Verdict::Pass && shift <= 0.25;
    });

    std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}

#include "multifluid/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "multifluid/error.hpp"

namespace multifluid {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

}  // namespace

const std::vector<std::string>& diagnostics_columns() {
    static const std::vector<std::string> cols{"t",  "mass", "momentum", "species", "H1", "D1",
                                               "H2", "D2",   "rho_min",  "rho_max", "mugrad_sup",
                                               "n1", "n2",   "n3",       "n4",      "n5"};
    return cols;
}

std::vector<double> as_row(const DiagnosticsRecord& r) {
    return {r.t,  r.mass, r.momentum, r.species, r.H1, r.D1, r.H2, r.D2,
            r.rho_min, r.rho_max, r.mugrad_sup, r.n1, r.n2, r.n3, r.n4, r.n5};
}

DiagnosticsRecord from_row(std::span<const double> v) {
    if (v.size() != diagnostics_columns().size()) {
        throw Error(ErrorKind::InvalidInput, "diagnostics row has the wrong number of columns");
    }
    return DiagnosticsRecord{v[0], v[1], v[2],  v[3],  v[4],  v[5],  v[6],  v[7],
                             v[8], v[9], v[10], v[11], v[12], v[13], v[14], v[15]};
}

double mugrad_sup(const State& s, const Grid& grid, const ReferenceState& ref) {
    const std::size_t n = s.size();
    std::vector<double> mu(n);
    for (std::size_t i = 0; i < n; ++i) mu[i] = s.mass_fraction(i);
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double g = (grid.neighbor(mu, i, 1, ref.mu) - grid.neighbor(mu, i, -1, ref.mu)) / (2.0 * grid.dx());
        sup = std::max(sup, std::abs(g) / s.rho[i]);
    }
    return sup;
}

DiagnosticsRecord record(const State& s, const Grid& grid, const PressureLaw& law,
                         const PsiSpec& psi, const EnergyQuadrature& quad) {
    const std::size_t n = s.size();
    const double dx = grid.dx();
    DiagnosticsRecord r;
    r.t = s.t;
    r.rho_min = std::numeric_limits<double>::infinity();
    r.rho_max = 0.0;
    double kin = 0.0, e1 = 0.0, g2 = 0.0;
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = s.rho[i];
        if (!(rho > 0.0)) throw Error(ErrorKind::VacuumInput, "vacuum cell in diagnostics");
        r.mass += rho * dx;
        r.momentum += s.mom[i] * dx;
        r.species += s.spc[i] * dx;
        r.rho_min = std::min(r.rho_min, rho);
        r.rho_max = std::max(r.rho_max, rho);
        kin += s.mom[i] * s.mom[i] / rho * dx;
        e1 += std::abs(internal_energy(law, rho, s.mass_fraction(i), quad)) * dx;
        phi[i] = psi.value(law.pressure(rho, s.mass_fraction(i)));
    }
    const double phi_far = psi.value(law.reference_pressure());
    for (std::size_t i = 0; i < n; ++i) {
        const double d = (grid.neighbor(phi, i, 1, phi_far) - grid.neighbor(phi, i, -1, phi_far)) / (2.0 * dx);
        g2 += d * d / s.rho[i] * dx;
    }
    const EntropyBudget b1 = classical_entropy(s, grid, law, psi, quad);
    const EntropyBudget b2 = bd_entropy(s, grid, law, psi, quad);
    r.H1 = b1.value;
    r.D1 = b1.dissipation;
    r.H2 = b2.value;
    r.D2 = b2.dissipation;
    r.mugrad_sup = mugrad_sup(s, grid, law.reference());
    r.n1 = std::sqrt(r.D1);
    r.n2 = std::sqrt(kin);
    r.n3 = e1;
    r.n4 = std::sqrt(g2);
    r.n5 = std::sqrt(r.D2);
    return r;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Identical: return "IDENTICAL";
    }
    return "UNKNOWN";
}

BudgetReport entropy_budget_check(std::span<const DiagnosticsRecord> records,
                                  std::span<const double> dt_history, double tol_scale) {
    if (records.size() < 2) throw Error(ErrorKind::InvalidInput, "entropy budget needs >= 2 records");
    if (dt_history.size() != records.size() - 1) {
        throw Error(ErrorKind::InvalidInput, "dt history must have one entry per record interval");
    }
    for (std::size_t k = 0; k + 1 < records.size(); ++k) {
        if (!same_time(records[k].t + dt_history[k], records[k + 1].t)) {
            std::ostringstream os;
            os << "dt history entry " << k << " does not match the record times";
            throw Error(ErrorKind::InvalidInput, os.str());
        }
    }
    BudgetReport rep;
    rep.tol1 = tol_scale * std::max(1.0, records[0].H1);
    double int1 = 0.0, int2 = 0.0;
    for (std::size_t k = 0; k < records.size(); ++k) {
        if (k > 0) {
            const double dt = dt_history[k - 1];
            int1 += 0.5 * dt * (records[k - 1].D1 + records[k].D1);
            int2 += 0.5 * dt * (records[k - 1].D2 + records[k].D2);
        }
        const double r1 = records[k].H1 - records[0].H1 + int1;
        const double r2 = records[k].H2 - records[0].H2 + int2;
        rep.t.push_back(records[k].t);
        rep.r1.push_back(r1);
        rep.r2.push_back(r2);
        rep.max_r1 = k == 0 ? r1 : std::max(rep.max_r1, r1);
        rep.max_abs_r1 = std::max(rep.max_abs_r1, std::abs(r1));
        rep.max_abs_r2 = std::max(rep.max_abs_r2, std::abs(r2));
    }
    rep.classical = rep.max_r1 <= rep.tol1 ? Verdict::Pass : Verdict::Fail;
    rep.verdict_line = std::string(to_string(rep.classical)) + " classical max r1 = " + num(rep.max_r1) +
                       " (tol " + num(rep.tol1) + "), bd max |r2| = " + num(rep.max_abs_r2);
    return rep;
}

std::vector<double> refinement_slopes(std::span<const double> errors) {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) out.push_back(std::log2(errors[k] / errors[k + 1]));
    return out;
}

TransportReport transport_invariant_check(std::span<const DiagnosticsRecord> records, double rel_limit,
                                          double abs_eps) {
    if (records.size() < 2) throw Error(ErrorKind::InvalidInput, "transport check needs >= 2 records");
    TransportReport rep;
    rep.initial = records[0].mugrad_sup;
    rep.max_value = rep.min_value = rep.initial;
    for (const auto& r : records) {
        rep.max_value = std::max(rep.max_value, r.mugrad_sup);
        rep.min_value = std::min(rep.min_value, r.mugrad_sup);
        rep.drift = std::max(rep.drift, std::abs(r.mugrad_sup - rep.initial));
    }
    rep.relative_drift = rep.initial > 0.0 ? rep.drift / rep.initial : 0.0;
    rep.verdict = rep.drift <= rel_limit * rep.initial + abs_eps ? Verdict::Pass : Verdict::Fail;
    return rep;
}

DensityBoundsReport density_bounds_check(std::span<const DiagnosticsRecord> records, double rho_floor) {
    if (records.empty()) throw Error(ErrorKind::InvalidInput, "density check needs >= 1 record");
    DensityBoundsReport rep;
    rep.rho_lo = records[0].rho_min;
    rep.rho_hi = records[0].rho_max;
    for (const auto& r : records) {
        rep.rho_lo = std::min(rep.rho_lo, r.rho_min);
        rep.rho_hi = std::max(rep.rho_hi, r.rho_max);
        if (!(r.rho_min > rho_floor) && rep.first_violation_time < 0.0) {
            rep.first_violation_time = r.t;
            rep.verdict = Verdict::Fail;
        }
    }
    return rep;
}

StabilityRecord stability_functional(const State& a, const State& b, const Grid& grid) {
    if (a.size() != grid.size() || b.size() != grid.size()) {
        throw Error(ErrorKind::InvalidInput, "trajectories are on different grids");
    }
    StabilityRecord r;
    r.t = a.t;
    const double dx = grid.dx();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double tau = a.rho[i] - b.rho[i];
        const double zeta = a.velocity(i) - b.velocity(i);
        const double chi = a.mass_fraction(i) - b.mass_fraction(i);
        r.tau2 += tau * tau * dx;
        r.rho_zeta2 += a.rho[i] * zeta * zeta * dx;
        r.chi2 += chi * chi * dx;
    }
    r.X = r.tau2 + r.rho_zeta2 + r.chi2;
    return r;
}

StabilityReport stability_compare(std::span<const State> a, std::span<const State> b, const Grid& grid,
                                  std::size_t skip, double excursion_limit) {
    if (a.size() != b.size() || a.empty()) {
        throw Error(ErrorKind::InvalidInput, "trajectories need the same, nonzero number of samples");
    }
    StabilityReport rep;
    bool all_zero = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!same_time(a[k].t, b[k].t)) {
            std::ostringstream os;
            os << "sample " << k << " is at different times (" << a[k].t << " vs " << b[k].t << ")";
            throw Error(ErrorKind::InvalidInput, os.str());
        }
        rep.series.push_back(stability_functional(a[k], b[k], grid));
        if (rep.series.back().X != 0.0) all_zero = false;
    }
    if (all_zero) {
        rep.verdict = Verdict::Identical;
        return rep;
    }
    const double x0 = rep.series.front().X;
    const double t0 = rep.series.front().t;
    rep.verdict = Verdict::Fail;
    if (!(x0 > 0.0)) return rep;

    // Least-squares slope of ln X against t, past the start-up samples.
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::size_t m = 0;
    for (std::size_t k = skip; k < rep.series.size(); ++k) {
        const auto& r = rep.series[k];
        if (!(r.X > 0.0)) continue;
        const double y = std::log(r.X);
        const double t = r.t - t0;
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        ++m;
    }
    if (m < 2) return rep;
    const double den = static_cast<double>(m) * stt - st * st;
    if (!(den > 0.0)) return rep;
    rep.rate = (static_cast<double>(m) * sty - st * sy) / den;
    rep.rate_defined = std::isfinite(rep.rate);
    if (!rep.rate_defined) return rep;

    for (const auto& r : rep.series) {
        rep.max_excursion = std::max(rep.max_excursion, r.X / (x0 * std::exp(rep.rate * (r.t - t0))));
    }
    rep.verdict = rep.max_excursion <= 1.0 + excursion_limit ? Verdict::Pass : Verdict::Fail;
    return rep;
}

}  // namespace multifluid

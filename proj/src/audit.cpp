#include "multifluid/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "multifluid/error.hpp"

namespace multifluid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGrowthTol = 1e-6;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Sample {
    double rho, mu;
    PressureValue pv;
    double energy;
};

// Ratio that C must dominate at one sample. Returns +inf when no finite
// constant can work (e.g. a lower envelope against a non-positive value).
using RatioFn = std::function<double(const Sample&)>;

EnvelopeCheck fit(const std::string& name, const std::vector<const Sample*>& side, bool high_side,
                  double rho_far, const RatioFn& ratio) {
    EnvelopeCheck c;
    c.name = name;
    if (side.empty()) {
        c.reason = "no samples on this side of rho = 1";
        return c;
    }
    // The nested box pulls the far end in to the geometric midpoint of the
    // side's density range.
    const double cut = std::sqrt(rho_far);
    double full = 1.0, nested = 1.0;
    for (const Sample* s : side) {
        double r = ratio(*s);
        if (std::isnan(r)) r = kInf;
        full = std::max(full, r);
        const bool inner = high_side ? s->rho <= cut : s->rho >= cut;
        if (inner) nested = std::max(nested, r);
    }
    c.constant = full;
    c.nested_constant = nested;
    if (!std::isfinite(full)) {
        c.pass = false;
        c.reason = name + ": no finite constant fits the samples";
    } else if (full > nested * (1.0 + kGrowthTol)) {
        c.pass = false;
        c.reason = name + ": fitted constant grows with the box (" + num(nested) + " -> " + num(full) + ")";
    }
    return c;
}

}  // namespace

const EnvelopeCheck* AdmissibilityReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::string AdmissibilityReport::to_key_value() const {
    std::ostringstream os;
    os << "pass = " << (pass() ? "true" : "false") << '\n';
    os << "gamma_lo = " << num(gamma_lo) << '\n';
    os << "gamma_hi = " << num(gamma_hi) << '\n';
    os << "window_valid = " << (window_valid ? "true" : "false") << '\n';
    os << "alpha_valid = " << (alpha_valid ? "true" : "false") << '\n';
    os << "eta = " << num(eta) << '\n';
    os << "sigma = " << num(sigma) << '\n';
    os << "nu_min = " << num(nu_min) << '\n';
    os << "nu_max = " << num(nu_max) << '\n';
    os << "min_dp_drho = " << num(min_dp_drho) << '\n';
    os << "negative_energy_samples = " << negative_energy_samples << '\n';
    for (const auto& c : checks) {
        os << "check." << c.name << ".constant = " << num(c.constant) << '\n';
        os << "check." << c.name << ".nested_constant = " << num(c.nested_constant) << '\n';
        os << "check." << c.name << ".pass = " << (c.pass ? "true" : "false") << '\n';
    }
    for (std::size_t i = 0; i < failures.size(); ++i) {
        os << "failure." << i << " = " << failures[i] << '\n';
    }
    return os.str();
}

AdmissibilityReport audit_law(const PressureLaw& law, const GammaWindow& window, const PsiSpec& psi,
                              const AuditBox& box, const EnergyQuadrature& quad) {
    if (!(box.rho_min > 0.0) || !std::isfinite(box.rho_max) || !(box.rho_max >= box.rho_min)) {
        throw Error(ErrorKind::InvalidParameter, "audit box needs 0 < rho_min <= rho_max");
    }
    if (box.samples < 2) throw Error(ErrorKind::InvalidParameter, "audit box needs >= 2 samples per axis");
    if (!(box.mu_min <= box.mu_max) || box.mu_min < law.mu_range().lo || box.mu_max > law.mu_range().hi) {
        throw Error(ErrorKind::InvalidParameter, "audit mass-fraction range must lie inside the law's range");
    }

    AdmissibilityReport rep;
    const double glo = window.lo();
    const double ghi = window.hi();
    rep.gamma_lo = glo;
    rep.gamma_hi = ghi;
    rep.window_valid = window.valid();
    if (!rep.window_valid) {
        rep.failures.push_back("gamma-window: (" + num(glo) + ", " + num(ghi) +
                               ") violates the window inequalities");
    } else {
        try {
            const XiExponents x = xi_exponents(glo, ghi, psi.alpha().lower, psi.alpha().upper);
            rep.alpha_valid = true;
            rep.eta = x.eta;
            rep.sigma = x.sigma;
        } catch (const Error& e) {
            rep.failures.push_back(std::string("alpha: ") + e.what());
        }
    }

    // Sample grid: log-spaced densities with rho = 1 inserted, linear mu.
    const int n = box.samples;
    std::vector<double> rhos;
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        rhos.push_back(box.rho_min * std::pow(box.rho_max / box.rho_min, f));
    }
    if (box.rho_min <= 1.0 && box.rho_max >= 1.0) rhos.push_back(1.0);
    std::sort(rhos.begin(), rhos.end());
    rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());
    std::vector<double> mus;
    for (int i = 0; i < n; ++i) {
        mus.push_back(box.mu_min + (box.mu_max - box.mu_min) * static_cast<double>(i) / (n - 1));
    }

    std::vector<Sample> samples;
    samples.reserve(rhos.size() * mus.size());
    rep.nu_min = kInf;
    rep.nu_max = 0.0;
    rep.min_dp_drho = kInf;
    bool pressure_failed = false;
    for (double mu : mus) {
        for (double rho : rhos) {
            Sample s{rho, mu, law.eval(rho, mu), internal_energy(law, rho, mu, quad)};
            if (s.energy < 0.0) ++rep.negative_energy_samples;
            rep.min_dp_drho = std::min(rep.min_dp_drho, s.pv.dp_drho);
            if (s.pv.p > 0.0) {
                const double nu = rho * s.pv.dp_drho * psi.prime(s.pv.p);
                rep.nu_min = std::min(rep.nu_min, nu);
                rep.nu_max = std::max(rep.nu_max, nu);
            } else if (!pressure_failed) {
                pressure_failed = true;
                rep.failures.push_back("pressure: p = " + num(s.pv.p) + " <= 0 at rho = " + num(rho) +
                                       ", mu = " + num(mu));
            }
            samples.push_back(s);
        }
    }
    if (rep.min_dp_drho < 0.0) {
        rep.failures.push_back("monotone: dp/drho reaches " + num(rep.min_dp_drho) + " < 0");
    }
    if (!(rep.nu_min > 0.0)) {
        rep.failures.push_back("viscosity: nu_min = " + num(rep.nu_min) + " is not positive");
    }

    if (law.kind() != LawKind::Nuclear) {
        const ParamCurve& g = law.terms().front().exponent;
        for (double mu : mus) {
            const double gm = g.value(mu);
            if (!(gm > glo && gm < ghi)) {
                rep.failures.push_back("gamma-range: gamma(" + num(mu) + ") = " + num(gm) +
                                       " is not inside (" + num(glo) + ", " + num(ghi) + ")");
                break;
            }
        }
    }

    // Both sides contain rho = 1 when it is sampled.
    std::vector<const Sample*> high, low;
    for (const Sample& s : samples) {
        if (s.rho >= 1.0) high.push_back(&s);
        if (s.rho <= 1.0) low.push_back(&s);
    }
    const double far_hi = box.rho_max;
    const double far_lo = box.rho_min;
    auto lower = [](double bound, double value) { return value > 0.0 ? bound / value : kInf; };
    auto upper = [](double bound, double value) { return value / bound; };

    rep.checks.push_back(fit("p-lower-high", high, true, far_hi,
                             [&](const Sample& s) { return lower(std::pow(s.rho, glo), s.pv.p); }));
    rep.checks.push_back(fit("p-upper-high", high, true, far_hi,
                             [&](const Sample& s) { return upper(std::pow(s.rho, ghi), s.pv.p); }));
    rep.checks.push_back(fit("p-lower-low", low, false, far_lo,
                             [&](const Sample& s) { return lower(std::pow(s.rho, ghi), s.pv.p); }));
    rep.checks.push_back(fit("p-upper-low", low, false, far_lo,
                             [&](const Sample& s) { return upper(std::pow(s.rho, glo), s.pv.p); }));
    rep.checks.push_back(fit("dp-lower-high", high, true, far_hi, [&](const Sample& s) {
        return lower(std::pow(s.rho, glo - 1.0), s.pv.dp_drho);
    }));
    rep.checks.push_back(fit("dp-upper-high", high, true, far_hi, [&](const Sample& s) {
        return upper(std::pow(s.rho, ghi - 1.0), s.pv.dp_drho);
    }));
    rep.checks.push_back(fit("dp-lower-low", low, false, far_lo, [&](const Sample& s) {
        return lower(std::pow(s.rho, ghi - 1.0), s.pv.dp_drho);
    }));
    rep.checks.push_back(fit("dp-upper-low", low, false, far_lo, [&](const Sample& s) {
        return upper(std::pow(s.rho, glo - 1.0), s.pv.dp_drho);
    }));
    rep.checks.push_back(fit("dmu-upper-high", high, true, far_hi,
                             [&](const Sample& s) { return upper(std::pow(s.rho, ghi), s.pv.dp_dmu); }));
    rep.checks.push_back(fit("dmu-upper-low", low, false, far_lo,
                             [&](const Sample& s) { return upper(std::pow(s.rho, glo), s.pv.dp_dmu); }));

    // rho^ghi + C rho <= C + 1 for rho <= 1; the smallest such C.
    rep.checks.push_back(fit("power-bound-low", low, false, far_lo, [&](const Sample& s) {
        if (s.rho == 1.0) return 1.0;
        return (std::pow(s.rho, ghi) - 1.0) / (1.0 - s.rho);
    }));
    // rho^glo + rho / C <= C (1 + E) for rho >= 1: positive root of the quadratic in C.
    rep.checks.push_back(fit("power-bound-high", high, true, far_hi, [&](const Sample& s) {
        const double a = 1.0 + s.energy;
        if (!(a > 0.0)) return kInf;
        const double b = std::pow(s.rho, glo);
        return (b + std::sqrt(b * b + 4.0 * a * s.rho)) / (2.0 * a);
    }));

    for (const auto& c : rep.checks) {
        if (!c.pass) rep.failures.push_back(c.reason);
    }
    return rep;
}

}  // namespace multifluid

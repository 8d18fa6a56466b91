#include "multifluid/constitutive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "multifluid/error.hpp"

namespace multifluid {

namespace {

void require_exponent(double g, const char* name) {
    if (!std::isfinite(g) || !(g > 1.0)) {
        std::ostringstream os;
        os << name << " must be finite and > 1 (got " << g << ")";
        throw Error(ErrorKind::InvalidParameter, os.str());
    }
}

}  // namespace

bool Interval::contains(double x) const {
    const bool above = lo_open ? x > lo : x >= lo;
    const bool below = hi_open ? x < hi : x <= hi;
    return above && below;
}

bool Interval::empty() const {
    if (lo_open || hi_open) return !(lo < hi);
    return !(lo <= hi);
}

bool gamma_window_valid(double gamma_lo, double gamma_hi) {
    require_exponent(gamma_lo, "gamma_lo");
    require_exponent(gamma_hi, "gamma_hi");
    const bool first = (gamma_hi - 0.5) / gamma_lo < (gamma_lo + 0.5) / gamma_hi;
    const bool second = (gamma_lo - 0.5) / gamma_hi > (gamma_hi + 0.5) / gamma_lo - 1.0;
    return first && second;
}

GammaWindow::GammaWindow(double gamma_lo, double gamma_hi) : lo_(gamma_lo), hi_(gamma_hi) {
    require_exponent(gamma_lo, "gamma_lo");
    require_exponent(gamma_hi, "gamma_hi");
    if (gamma_lo > gamma_hi) {
        throw Error(ErrorKind::InvalidParameter, "gamma window needs gamma_lo <= gamma_hi");
    }
}

AlphaWindow alpha_window(double gamma_lo, double gamma_hi) {
    if (!gamma_window_valid(gamma_lo, gamma_hi)) {
        std::ostringstream os;
        os << "no admissible alpha for window (" << gamma_lo << ", " << gamma_hi << ")";
        throw Error(ErrorKind::WindowInadmissible, os.str());
    }
    AlphaWindow w;
    w.lower = Interval{(gamma_hi - 0.5) / gamma_lo, (gamma_lo + 0.5) / gamma_hi, true, false};
    w.upper = Interval{(gamma_hi + 0.5) / gamma_lo - 1.0, (gamma_lo - 0.5) / gamma_hi, false, true};
    if (w.lower.empty() || w.upper.empty()) {
        throw Error(ErrorKind::WindowInadmissible, "empty alpha interval");
    }
    return w;
}

AlphaChoice default_alpha(double gamma_lo, double gamma_hi) {
    const AlphaWindow w = alpha_window(gamma_lo, gamma_hi);
    return AlphaChoice{w.lower.midpoint(), w.upper.midpoint()};
}

XiExponents xi_exponents(double gamma_lo, double gamma_hi, double alpha_lo, double alpha_hi) {
    require_exponent(gamma_lo, "gamma_lo");
    require_exponent(gamma_hi, "gamma_hi");
    if (!gamma_window_valid(gamma_lo, gamma_hi)) {
        throw Error(ErrorKind::InadmissibleAlpha, "gamma window admits no alpha");
    }
    const AlphaWindow w = alpha_window(gamma_lo, gamma_hi);
    XiExponents x;
    x.eta = alpha_lo * gamma_lo - gamma_hi + 0.5;
    x.sigma = gamma_lo - alpha_hi * gamma_hi - 0.5;
    std::ostringstream os;
    if (!w.lower.contains(alpha_lo)) {
        os << "alpha_lo=" << alpha_lo << " outside (" << w.lower.lo << ", " << w.lower.hi << "]";
        throw Error(ErrorKind::InadmissibleAlpha, os.str());
    }
    if (!w.upper.contains(alpha_hi)) {
        os << "alpha_hi=" << alpha_hi << " outside [" << w.upper.lo << ", " << w.upper.hi << ")";
        throw Error(ErrorKind::InadmissibleAlpha, os.str());
    }
    if (!(x.eta > 0.0) || !(x.sigma > 0.0)) {
        os << "eta=" << x.eta << " sigma=" << x.sigma << " must both be > 0";
        throw Error(ErrorKind::InadmissibleAlpha, os.str());
    }
    return x;
}

// ---------------------------------------------------------------------------

std::string_view to_string(LawKind kind) {
    switch (kind) {
        case LawKind::Power: return "power";
        case LawKind::Nuclear: return "nuclear";
        case LawKind::CustomTabulated: return "custom-tabulated";
    }
    return "unknown";
}

PressureLaw::PressureLaw(LawKind kind, std::vector<PressureTerm> terms, ReferenceState ref,
                         MuRange range)
    : kind_(kind), terms_(std::move(terms)), ref_(ref), range_(range) {
    if (!std::isfinite(ref.rho) || !(ref.rho > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "reference density must be > 0");
    }
    if (!std::isfinite(ref.mu) || !std::isfinite(range.lo) || !std::isfinite(range.hi) ||
        range.lo > range.hi) {
        throw Error(ErrorKind::InvalidParameter, "mass-fraction range must be finite, lo <= hi");
    }
    if (ref.mu < range.lo || ref.mu > range.hi) {
        throw Error(ErrorKind::InvalidParameter, "reference mass fraction outside the law's range");
    }
}

PressureLaw PressureLaw::power(ParamCurve coef, ParamCurve gamma, ReferenceState ref,
                               MuRange range) {
    return PressureLaw(LawKind::Power, {PressureTerm{1.0, std::move(coef), std::move(gamma)}}, ref,
                       range);
}

PressureLaw PressureLaw::nuclear(double c1, double c2, double c3, ParamCurve gi, ParamCurve gj,
                                 ParamCurve gk, ReferenceState ref, MuRange range) {
    if (!(c1 > 0.0) || !(c2 > 0.0) || !(c3 > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "nuclear coefficients must be > 0");
    }
    std::vector<PressureTerm> t;
    t.push_back({1.0, ParamCurve::constant(c1), std::move(gi)});
    t.push_back({-1.0, ParamCurve::constant(c2), std::move(gj)});
    t.push_back({1.0, ParamCurve::constant(c3), std::move(gk)});
    return PressureLaw(LawKind::Nuclear, std::move(t), ref, range);
}

PressureLaw PressureLaw::tabulated(std::vector<double> mu, std::vector<double> coef,
                                   std::vector<double> gamma, ReferenceState ref, MuRange range) {
    auto c = ParamCurve::tabulated(mu, std::move(coef));
    auto g = ParamCurve::tabulated(std::move(mu), std::move(gamma));
    return PressureLaw(LawKind::CustomTabulated, {PressureTerm{1.0, std::move(c), std::move(g)}},
                       ref, range);
}

void PressureLaw::check_inputs(double rho, double mu) const {
    if (!(rho > 0.0)) {
        std::ostringstream os;
        os << "density " << rho << " is not positive";
        throw Error(ErrorKind::VacuumInput, os.str());
    }
    const double slack = 1e-9 * std::max(1.0, range_.hi - range_.lo);
    if (!(mu >= range_.lo - slack && mu <= range_.hi + slack)) {
        std::ostringstream os;
        os << "mass fraction " << mu << " outside [" << range_.lo << ", " << range_.hi << "]";
        throw Error(ErrorKind::InvalidParameter, os.str());
    }
}

PressureValue PressureLaw::eval(double rho, double mu) const {
    check_inputs(rho, mu);
    PressureValue out;
    double log_rho = std::numeric_limits<double>::quiet_NaN();
    for (const PressureTerm& term : terms_) {
        const double c = term.coef.value(mu);
        const double g = term.exponent.value(mu);
        const double r = std::pow(rho, g);
        const double t = term.sign * c * r;
        out.p += t;
        out.dp_drho += t * g / rho;
        const double dc = term.coef.slope(mu);
        const double dg = term.exponent.slope(mu);
        if (dc != 0.0) out.dp_dmu += term.sign * dc * r;
        if (dg != 0.0) {
            if (std::isnan(log_rho)) log_rho = std::log(rho);
            out.dp_dmu += t * dg * log_rho;
        }
    }
    return out;
}

double PressureLaw::pressure(double rho, double mu) const {
    check_inputs(rho, mu);
    double p = 0.0;
    for (const PressureTerm& term : terms_) {
        p += term.sign * term.coef.value(mu) * std::pow(rho, term.exponent.value(mu));
    }
    return p;
}

PressureSecond PressureLaw::second(double rho, double mu) const {
    check_inputs(rho, mu);
    PressureSecond out;
    const double log_rho = std::log(rho);
    for (const PressureTerm& term : terms_) {
        const double c = term.coef.value(mu);
        const double g = term.exponent.value(mu);
        const double dc = term.coef.slope(mu);
        const double dg = term.exponent.slope(mu);
        const double r1 = std::pow(rho, g - 1.0);
        out.d2p_drho2 += term.sign * c * g * (g - 1.0) * r1 / rho;
        out.d2p_drhodmu += term.sign * r1 * (dc * g + c * dg * (1.0 + g * log_rho));
    }
    return out;
}

double PressureLaw::reference_pressure() const { return pressure(ref_.rho, ref_.mu); }

// ---------------------------------------------------------------------------

PsiSpec::PsiSpec(AlphaChoice alpha, double scale) : alpha_(alpha), scale_(scale) {
    if (!std::isfinite(alpha.lower) || !std::isfinite(alpha.upper)) {
        throw Error(ErrorKind::InvalidParameter, "psi exponents must be finite");
    }
    if (!std::isfinite(scale) || !(scale > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "psi scale must be > 0");
    }
}

double PsiSpec::prime(double p) const {
    if (!(p > 0.0)) {
        std::ostringstream os;
        os << "pressure " << p << " is not positive";
        throw Error(ErrorKind::InvalidPressure, os.str());
    }
    return scale_ * std::pow(p, p <= 1.0 ? -alpha_.lower : -alpha_.upper);
}

double PsiSpec::value(double p) const {
    if (!(p > 0.0)) {
        std::ostringstream os;
        os << "pressure " << p << " is not positive";
        throw Error(ErrorKind::InvalidPressure, os.str());
    }
    const double a = p <= 1.0 ? alpha_.lower : alpha_.upper;
    if (a == 1.0) return scale_ * std::log(p);
    return scale_ * (std::pow(p, 1.0 - a) - 1.0) / (1.0 - a);
}

double PsiSpec::second(double p) const {
    if (!(p > 0.0)) {
        throw Error(ErrorKind::InvalidPressure, "pressure is not positive");
    }
    const double a = p <= 1.0 ? alpha_.lower : alpha_.upper;
    return -scale_ * a * std::pow(p, -a - 1.0);
}

double viscosity(const PressureLaw& law, const PsiSpec& psi, double rho, double mu) {
    const PressureValue pv = law.eval(rho, mu);
    return rho * pv.dp_drho * psi.prime(pv.p);
}

}  // namespace multifluid

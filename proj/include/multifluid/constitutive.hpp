#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multifluid/param_curve.hpp"

namespace multifluid {

// ---------------------------------------------------------------------------
// Adiabatic window and the exponents derived from it
// ---------------------------------------------------------------------------

/// Real interval with independently open or closed ends.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = false;
    bool hi_open = false;

    bool contains(double x) const;
    bool empty() const;
    double midpoint() const { return 0.5 * (lo + hi); }
};

/// True iff both window inequalities hold:
///   (hi - 1/2)/lo < (lo + 1/2)/hi   and   (lo - 1/2)/hi > (hi + 1/2)/lo - 1.
/// Throws InvalidParameter for non-finite exponents or exponents <= 1.
bool gamma_window_valid(double gamma_lo, double gamma_hi);

/// Pair of adiabatic exponents bracketing the pressure law. Construction only
/// checks finiteness, > 1 and ordering; `valid()` reports the window relations.
class GammaWindow {
public:
    GammaWindow(double gamma_lo, double gamma_hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    bool valid() const { return gamma_window_valid(lo_, hi_); }

private:
    double lo_;
    double hi_;
};

struct AlphaWindow {
    Interval lower;  // admissible values of the low-pressure exponent
    Interval upper;  // admissible values of the high-pressure exponent
};

/// Intervals ((hi-1/2)/lo, (lo+1/2)/hi] and [(hi+1/2)/lo - 1, (lo-1/2)/hi).
/// Throws WindowInadmissible when either interval is empty.
AlphaWindow alpha_window(double gamma_lo, double gamma_hi);

struct AlphaChoice {
    double lower = 1.0;  // exponent used for p <= 1
    double upper = 0.5;  // exponent used for p >= 1
};

/// Midpoints of both admissible intervals.
AlphaChoice default_alpha(double gamma_lo, double gamma_hi);

struct XiExponents {
    double eta = 0.0;
    double sigma = 0.0;
};

/// eta = alpha_lo*gamma_lo - gamma_hi + 1/2, sigma = gamma_lo - alpha_hi*gamma_hi - 1/2.
/// Throws InadmissibleAlpha if either alpha falls outside its interval or if
/// eta or sigma is not strictly positive.
XiExponents xi_exponents(double gamma_lo, double gamma_hi, double alpha_lo, double alpha_hi);

// ---------------------------------------------------------------------------
// Pressure laws
// ---------------------------------------------------------------------------

struct ReferenceState {
    double rho = 1.0;
    double mu = 0.0;
};

struct MuRange {
    double lo = 0.0;
    double hi = 1.0;
};

enum class LawKind { Power, Nuclear, CustomTabulated };

std::string_view to_string(LawKind kind);

/// One monomial sign * coef(mu) * rho^exponent(mu).
struct PressureTerm {
    double sign = 1.0;
    ParamCurve coef;
    ParamCurve exponent;
};

struct PressureValue {
    double p = 0.0;
    double dp_drho = 0.0;
    double dp_dmu = 0.0;
};

struct PressureSecond {
    double d2p_drho2 = 0.0;
    double d2p_drhodmu = 0.0;
};

/// Barotropic pressure p(rho, mu) written as a signed sum of monomials with
/// mass-fraction dependent coefficients and exponents. All derivatives are
/// analytic.
class PressureLaw {
public:
    /// p = C(mu) rho^gamma(mu)
    static PressureLaw power(ParamCurve coef, ParamCurve gamma, ReferenceState ref = {},
                             MuRange range = {});
    /// p = C1 rho^gi(mu) - C2 rho^gj(mu) + C3 rho^gk(mu)
    static PressureLaw nuclear(double c1, double c2, double c3, ParamCurve gi, ParamCurve gj,
                               ParamCurve gk, ReferenceState ref = {}, MuRange range = {});
    /// Power law whose curves are both tabulated.
    static PressureLaw tabulated(std::vector<double> mu, std::vector<double> coef,
                                 std::vector<double> gamma, ReferenceState ref = {},
                                 MuRange range = {});

    LawKind kind() const noexcept { return kind_; }
    const std::vector<PressureTerm>& terms() const noexcept { return terms_; }
    const ReferenceState& reference() const noexcept { return ref_; }
    const MuRange& mu_range() const noexcept { return range_; }

    /// p, dp/drho, dp/dmu. Throws VacuumInput for rho <= 0 and
    /// InvalidParameter for mu outside the declared range.
    PressureValue eval(double rho, double mu) const;
    double pressure(double rho, double mu) const;
    PressureSecond second(double rho, double mu) const;

    /// p(rho_ref, mu_ref)
    double reference_pressure() const;

private:
    PressureLaw(LawKind kind, std::vector<PressureTerm> terms, ReferenceState ref, MuRange range);
    void check_inputs(double rho, double mu) const;

    LawKind kind_;
    std::vector<PressureTerm> terms_;
    ReferenceState ref_;
    MuRange range_;
};

// ---------------------------------------------------------------------------
// The pressure potential psi and the viscosity it induces
// ---------------------------------------------------------------------------

/// psi'(p) = scale * p^-alpha_lo for p <= 1 and scale * p^-alpha_hi for p >= 1,
/// normalised so that psi(1) = 0.
class PsiSpec {
public:
    explicit PsiSpec(AlphaChoice alpha, double scale = 1.0);

    const AlphaChoice& alpha() const noexcept { return alpha_; }
    double scale() const noexcept { return scale_; }

    double prime(double p) const;   // throws InvalidPressure for p <= 0
    double value(double p) const;
    double second(double p) const;  // one-sided at p = 1

private:
    AlphaChoice alpha_;
    double scale_;
};

/// nu = rho * dp/drho * psi'(p)
double viscosity(const PressureLaw& law, const PsiSpec& psi, double rho, double mu);

}  // namespace multifluid

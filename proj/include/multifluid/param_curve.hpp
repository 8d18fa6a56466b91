#pragma once

#include <memory>
#include <vector>

namespace multifluid {

/// Smooth bounded function of the mass fraction, used for the coefficient and
/// exponent curves of a pressure law.
///
/// Three realizations: a constant, an affine map a + b*mu clamped to
/// [lo, hi], and a monotone piecewise-cubic (PCHIP) interpolant through
/// tabulated control points. Tabulated curves are held constant outside their
/// control range.
class ParamCurve {
public:
    enum class Kind { Constant, Affine, Tabulated };

    ParamCurve();  // constant 0

    static ParamCurve constant(double value);
    static ParamCurve affine(double intercept, double slope, double lo, double hi);
    static ParamCurve tabulated(std::vector<double> mu, std::vector<double> values);

    double value(double mu) const;
    double slope(double mu) const;

    Kind kind() const noexcept { return kind_; }
    bool is_constant() const noexcept { return kind_ == Kind::Constant; }

    const std::vector<double>& control_mu() const noexcept { return mu_; }
    const std::vector<double>& control_values() const noexcept { return values_; }
    double intercept() const noexcept { return a_; }
    double affine_slope() const noexcept { return b_; }
    double clamp_lo() const noexcept { return lo_; }
    double clamp_hi() const noexcept { return hi_; }

private:
    struct Spline;

    Kind kind_ = Kind::Constant;
    double a_ = 0.0;
    double b_ = 0.0;
    double lo_ = 0.0;
    double hi_ = 0.0;
    std::vector<double> mu_;
    std::vector<double> values_;
    std::shared_ptr<const Spline> spline_;
};

}  // namespace multifluid

#include "multifluid/param_curve.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include "multifluid/error.hpp"

namespace multifluid {

struct ParamCurve::Spline {
    boost::math::interpolators::pchip<std::vector<double>> interp;
};

ParamCurve::ParamCurve() = default;

ParamCurve ParamCurve::constant(double value) {
    if (!std::isfinite(value)) throw Error(ErrorKind::InvalidParameter, "curve value must be finite");
    ParamCurve c;
    c.kind_ = Kind::Constant;
    c.a_ = value;
    c.lo_ = value;
    c.hi_ = value;
    return c;
}

ParamCurve ParamCurve::affine(double intercept, double slope, double lo, double hi) {
    if (!std::isfinite(intercept) || !std::isfinite(slope) || std::isnan(lo) || std::isnan(hi) ||
        lo > hi) {
        throw Error(ErrorKind::InvalidParameter, "affine curve needs finite a, b and lo <= hi");
    }
    if (slope == 0.0) {
        return constant(std::clamp(intercept, lo, hi));
    }
    ParamCurve c;
    c.kind_ = Kind::Affine;
    c.a_ = intercept;
    c.b_ = slope;
    c.lo_ = lo;
    c.hi_ = hi;
    return c;
}

ParamCurve ParamCurve::tabulated(std::vector<double> mu, std::vector<double> values) {
    if (mu.size() != values.size()) {
        throw Error(ErrorKind::InvalidParameter, "tabulated curve: point counts differ");
    }
    if (mu.size() < 4) {
        throw Error(ErrorKind::InvalidParameter, "tabulated curve: at least 4 control points");
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!std::isfinite(mu[i]) || !std::isfinite(values[i])) {
            throw Error(ErrorKind::InvalidParameter, "tabulated curve: non-finite control point");
        }
        if (i > 0 && !(mu[i] > mu[i - 1])) {
            throw Error(ErrorKind::InvalidParameter,
                        "tabulated curve: control abscissae must increase strictly");
        }
    }
    ParamCurve c;
    c.kind_ = Kind::Tabulated;
    c.mu_ = mu;
    c.values_ = values;
    c.lo_ = *std::min_element(values.begin(), values.end());
    c.hi_ = *std::max_element(values.begin(), values.end());
    c.spline_ = std::make_shared<const Spline>(
        Spline{boost::math::interpolators::pchip<std::vector<double>>(std::move(mu), std::move(values))});
    return c;
}

double ParamCurve::value(double mu) const {
    switch (kind_) {
        case Kind::Constant:
            return a_;
        case Kind::Affine:
            return std::clamp(a_ + b_ * mu, lo_, hi_);
        case Kind::Tabulated:
            if (mu <= mu_.front()) return values_.front();
            if (mu >= mu_.back()) return values_.back();
            return spline_->interp(mu);
    }
    return 0.0;
}

double ParamCurve::slope(double mu) const {
    switch (kind_) {
        case Kind::Constant:
            return 0.0;
        case Kind::Affine: {
            const double v = a_ + b_ * mu;
            return (v < lo_ || v > hi_) ? 0.0 : b_;
        }
        case Kind::Tabulated:
            if (mu <= mu_.front() || mu >= mu_.back()) return 0.0;
            return spline_->interp.prime(mu);
    }
    return 0.0;
}

}  // namespace multifluid

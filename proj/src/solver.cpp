#include "multifluid/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <limits>
#include <string>
#include <utility>

#include "multifluid/error.hpp"

namespace multifluid {

std::string_view to_string(InitFamily f) {
    switch (f) {
        case InitFamily::Uniform: return "uniform";
        case InitFamily::GaussianRhoBump: return "gaussian-rho-bump";
        case InitFamily::TanhMuInterface: return "tanh-mu-interface";
        case InitFamily::VelocityPulse: return "velocity-pulse";
        case InitFamily::Composite: return "composite";
    }
    return "unknown";
}

InitFamily init_family_from_string(std::string_view s) {
    for (InitFamily f : {InitFamily::Uniform, InitFamily::GaussianRhoBump, InitFamily::TanhMuInterface,
                         InitFamily::VelocityPulse, InitFamily::Composite}) {
        if (s == to_string(f)) return f;
    }
    throw Error(ErrorKind::InvalidParameter, "unknown initial-data family '" + std::string(s) + "'");
}

namespace {

double gaussian(double d, double w) {
    const double z = d / w;
    return std::exp(-z * z);
}

// Plateau of height 1 on |d| < h with tanh edges of width dl.
double plateau(double d, double h, double dl) {
    return 0.5 * (std::tanh((d + h) / dl) - std::tanh((d - h) / dl));
}

// Sum of f over the periodic images of d, so profiles stay smooth across the
// seam; `reach` is how far the tails of f still matter.
template <class F>
double images(const Grid& grid, double x, double c, double reach, F f) {
    const double d = x - c;
    if (grid.boundary() != Boundary::Periodic) return f(d);
    const double L = grid.length();
    const double d0 = d - L * std::round(d / L);
    const int k_max = 1 + static_cast<int>(std::ceil(reach / L));
    double sum = f(d0);
    for (int k = 1; k <= k_max; ++k) sum += f(d0 + k * L) + f(d0 - k * L);
    return sum;
}

double bump(const Grid& grid, double x, double c, double w) {
    return images(grid, x, c, 6.5 * w, [w](double d) { return gaussian(d, w); });
}

constexpr std::array<double, 4> kGaussNodes{-0.8611363115940526, -0.3399810435848563,
                                            0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights{0.3478548451374538, 0.6521451548625461,
                                              0.6521451548625461, 0.3478548451374538};

}  // namespace

PointState init_profile(InitFamily family, const InitParams& prm, const Grid& grid,
                        const ReferenceState& ref, double x) {
    const double L = grid.length();
    const double c = prm.center < 0.0 ? 0.5 * L : prm.center;
    PointState s{ref.rho, prm.velocity, ref.mu};

    const bool has_bump = family == InitFamily::GaussianRhoBump || family == InitFamily::Composite;
    const bool tanh_mu = family == InitFamily::TanhMuInterface || family == InitFamily::Composite;
    const bool pulse = family == InitFamily::VelocityPulse || family == InitFamily::Composite;

    if (has_bump) s.rho += prm.bump_amplitude * bump(grid, x, c, prm.bump_width);
    if (tanh_mu) {
        const double h = prm.plateau_half_width < 0.0 ? 0.25 * L : prm.plateau_half_width;
        const double dl = prm.interface_width;
        s.mu += prm.mu_delta * images(grid, x, c, h + 20.0 * dl, [h, dl](double d) { return plateau(d, h, dl); });
    }
    if (pulse) s.u += prm.pulse_amplitude * bump(grid, x, c, prm.pulse_width);
    if (prm.perturb_amplitude != 0.0) {
        const double pc = prm.perturb_center < 0.0 ? 0.625 * L : prm.perturb_center;
        s.rho += prm.perturb_amplitude * bump(grid, x, pc, prm.perturb_width);
    }
    return s;
}

InitResult init_data(InitFamily family, const InitParams& prm, const Grid& grid,
                     const PressureLaw& law) {
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    const ReferenceState& ref = law.reference();
    for (double w : {prm.bump_width, prm.interface_width, prm.pulse_width, prm.perturb_width}) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw Error(ErrorKind::InvalidInitialData, "profile widths must be positive");
        }
    }

    // Each bump reaches its full (image-summed) depth at its centre, so one
    // that reaches the floor touches vacuum whatever the cell averages say.
    const double floor = 1e-10 * ref.rho;
    const bool has_bump = family == InitFamily::GaussianRhoBump || family == InitFamily::Composite;
    const double L = grid.length();
    const double c = prm.center < 0.0 ? 0.5 * L : prm.center;
    const double pc = prm.perturb_center < 0.0 ? 0.625 * L : prm.perturb_center;
    const double deepest =
        ref.rho + std::min(0.0, has_bump ? prm.bump_amplitude * bump(grid, c, c, prm.bump_width) : 0.0) +
        std::min(0.0, prm.perturb_amplitude * bump(grid, pc, pc, prm.perturb_width));
    if (!(deepest > floor)) {
        throw Error(ErrorKind::InvalidInitialData, "density profile reaches the vacuum floor");
    }

    InitResult res;
    State& s = res.state;
    s = State(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double xc = grid.center(i);
        for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
            const PointState p = init_profile(family, prm, grid, ref, xc + 0.5 * dx * kGaussNodes[q]);
            const double w = 0.5 * kGaussWeights[q];
            s.rho[i] += w * p.rho;
            s.mom[i] += w * p.rho * p.u;
            s.spc[i] += w * p.rho * p.mu;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        std::ostringstream os;
        if (!std::isfinite(s.rho[i]) || !std::isfinite(s.mom[i]) || !std::isfinite(s.spc[i])) {
            os << "non-finite initial value in cell " << i;
            throw Error(ErrorKind::InvalidInitialData, os.str());
        }
        if (!(s.rho[i] > floor)) {
            os << "initial density " << s.rho[i] << " in cell " << i << " is at the vacuum floor";
            throw Error(ErrorKind::InvalidInitialData, os.str());
        }
        const double mu = s.mass_fraction(i);
        const MuRange& r = law.mu_range();
        if (mu < r.lo || mu > r.hi) {
            os << "initial mass fraction " << mu << " in cell " << i << " outside the law's range";
            throw Error(ErrorKind::InvalidInitialData, os.str());
        }
        if (!(law.pressure(s.rho[i], mu) > 0.0)) {
            os << "initial pressure in cell " << i << " is not positive";
            throw Error(ErrorKind::InvalidInitialData, os.str());
        }
    }

    std::vector<double> mu(n);
    for (std::size_t i = 0; i < n; ++i) mu[i] = s.mass_fraction(i);
    for (std::size_t i = 0; i < n; ++i) {
        const double g = (grid.neighbor(mu, i, 1, ref.mu) - grid.neighbor(mu, i, -1, ref.mu)) / (2.0 * dx);
        res.mugrad_constant = std::max(res.mugrad_constant, std::abs(g) / s.rho[i]);
    }
    return res;
}

// ---------------------------------------------------------------------------

Stepper::Stepper(Grid grid, PressureLaw law, PsiSpec psi, SolverOptions opt)
    : grid_(grid),
      law_(std::move(law)),
      psi_(psi),
      opt_(opt),
      rho_floor_(opt.rho_floor_factor * law_.reference().rho),
      k_(grid.size()),
      stage_(grid.size()) {}

void Stepper::rhs(const State& s, Tendency& out, const SourceFn* source) {
    rhs_parallel(s, grid_, law_, psi_, KernelOptions{opt_.limiter}, ws_, out);
    if (source && *source) (*source)(s.t, grid_, out);
}

double Stepper::stable_dt(const State& s, double cfl) const {
    if (!(cfl > 0.0) || !std::isfinite(cfl)) {
        throw Error(ErrorKind::InvalidParameter, "CFL number must be positive");
    }
    const double dx = grid_.dx();
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
        double u, mu, p, c, nu;
        detail::cell_primitives(law_, psi_, s.rho[i], s.mom[i], s.spc[i], u, mu, p, c, nu);
        dt = std::min(dt, dx / (std::abs(u) + c));
        if (nu > 0.0) dt = std::min(dt, s.rho[i] * dx * dx / (2.0 * nu));
    }
    dt *= cfl;
    if (!std::isfinite(dt) || !(dt > 0.0)) {
        std::ostringstream os;
        os << "time step " << dt << " is not a positive finite number";
        throw Error(ErrorKind::NumericFailure, os.str());
    }
    return dt;
}

void Stepper::check_stage(const State& s, double t) const {
    const MuRange& range = law_.mu_range();
    const double slack = 1e-9 * std::max(1.0, range.hi - range.lo);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.rho[i])) throw DivergedError(t, i, "rho", s.rho[i]);
        if (!std::isfinite(s.mom[i])) throw DivergedError(t, i, "mom", s.mom[i]);
        if (!std::isfinite(s.spc[i])) throw DivergedError(t, i, "spc", s.spc[i]);
        if (!(s.rho[i] > rho_floor_)) throw DivergedError(t, i, "rho", s.rho[i]);
        // Same slack as the law's own range check, so the next RHS cannot
        // reject a state this check let through.
        const double mu = s.spc[i] / s.rho[i];
        if (!(mu >= range.lo - slack && mu <= range.hi + slack)) throw DivergedError(t, i, "mu", mu);
    }
}

void Stepper::step(State& s, double dt, const SourceFn* source) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorKind::InvalidParameter, "time step must be positive and finite");
    }
    const std::size_t n = s.size();

    rhs(s, k_, source);
    stage_.rho.resize(n);
    stage_.mom.resize(n);
    stage_.spc.resize(n);
    stage_.t = s.t + dt;
    for (std::size_t i = 0; i < n; ++i) {
        stage_.rho[i] = s.rho[i] + dt * k_.rho[i];
        stage_.mom[i] = s.mom[i] + dt * k_.mom[i];
        stage_.spc[i] = s.spc[i] + dt * k_.spc[i];
    }
    check_stage(stage_, stage_.t);

    rhs(stage_, k_, source);
    for (std::size_t i = 0; i < n; ++i) {
        s.rho[i] = 0.5 * s.rho[i] + 0.5 * (stage_.rho[i] + dt * k_.rho[i]);
        s.mom[i] = 0.5 * s.mom[i] + 0.5 * (stage_.mom[i] + dt * k_.mom[i]);
        s.spc[i] = 0.5 * s.spc[i] + 0.5 * (stage_.spc[i] + dt * k_.spc[i]);
    }
    s.t += dt;
    check_stage(s, s.t);
}

Tendency rhs(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
             const SolverOptions& opt, const SourceFn* source) {
    Stepper st(grid, law, psi, opt);
    Tendency out(grid.size());
    st.rhs(s, out, source);
    return out;
}

double stable_dt(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                 double cfl) {
    return Stepper(grid, law, psi).stable_dt(s, cfl);
}

State step(State s, double dt, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
           const SolverOptions& opt, const SourceFn* source) {
    Stepper st(grid, law, psi, opt);
    st.step(s, dt, source);
    return s;
}

}  // namespace multifluid

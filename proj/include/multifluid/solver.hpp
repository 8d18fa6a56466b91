#pragma once

#include <functional>
#include <string_view>

#include "multifluid/constitutive.hpp"
#include "multifluid/grid.hpp"
#include "multifluid/kernels.hpp"

namespace multifluid {

// ---------------------------------------------------------------------------
// Initial data
// ---------------------------------------------------------------------------

enum class InitFamily { Uniform, GaussianRhoBump, TanhMuInterface, VelocityPulse, Composite };

std::string_view to_string(InitFamily f);
InitFamily init_family_from_string(std::string_view s);

/// Parameters of the initial-data families. Negative centres and widths mean
/// "derive from the domain length".
// Profiles on periodic grids are summed over the periodic images.
struct InitParams {
    double center = -1.0;  // default L/2

    double bump_amplitude = 0.2;  // rho = rho_ref + A exp(-((x-c)/w)^2)
    double bump_width = 0.5;

    // mu = mu_ref + dmu/2 [tanh((x-c+h)/delta) - tanh((x-c-h)/delta)]
    double mu_delta = 0.5;
    double interface_width = 0.25;
    double plateau_half_width = -1.0;  // default L/4

    double pulse_amplitude = 0.1;  // u = U + A exp(-((x-c)/w)^2)
    double pulse_width = 0.5;

    double velocity = 0.0;  // uniform background velocity U

    // Extra density bump used to build nearby trajectories.
    double perturb_amplitude = 0.0;
    double perturb_width = 0.5;
    double perturb_center = -1.0;  // default 5L/8
};

struct InitResult {
    State state;
    /// Realised C0 = max |dmu/dx| / rho over cells (central differences).
    double mugrad_constant = 0.0;
};

/// Cell averages of the chosen family (4-point Gauss-Legendre per cell).
/// Throws InvalidInitialData when the density profile reaches the vacuum
/// floor or any value is non-finite.
InitResult init_data(InitFamily family, const InitParams& params, const Grid& grid,
                     const PressureLaw& law);

/// Point values (rho, u, mu) of a family at x.
struct PointState {
    double rho, u, mu;
};
PointState init_profile(InitFamily family, const InitParams& params, const Grid& grid,
                        const ReferenceState& ref, double x);

// ---------------------------------------------------------------------------
// Time integration
// ---------------------------------------------------------------------------

struct SolverOptions {
    Limiter limiter = Limiter::VanLeer;
    /// Divergence threshold relative to the reference density.
    double rho_floor_factor = 1e-10;
};

/// Adds a source term to the tendencies at time t.
using SourceFn = std::function<void(double t, const Grid& grid, Tendency& add)>;

/// Owns the scratch buffers for repeated RHS evaluations and SSP-RK2 steps.
class Stepper {
public:
    Stepper(Grid grid, PressureLaw law, PsiSpec psi, SolverOptions opt = {});

    const Grid& grid() const noexcept { return grid_; }
    const PressureLaw& law() const noexcept { return law_; }
    const PsiSpec& psi() const noexcept { return psi_; }
    const SolverOptions& options() const noexcept { return opt_; }
    double rho_floor() const noexcept { return rho_floor_; }

    void rhs(const State& s, Tendency& out, const SourceFn* source = nullptr);

    /// CFL * min over cells of min(dx/(|u|+c), rho dx^2/(2 nu)).
    double stable_dt(const State& s, double cfl) const;

    /// Two-stage SSP Runge-Kutta update. Throws DivergedError on a
    /// non-finite value or a density at or below the floor.
    void step(State& s, double dt, const SourceFn* source = nullptr);

private:
    void check_stage(const State& s, double t) const;

    Grid grid_;
    PressureLaw law_;
    PsiSpec psi_;
    SolverOptions opt_;
    double rho_floor_;
    RhsWorkspace ws_;
    Tendency k_;
    State stage_;
};

Tendency rhs(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
             const SolverOptions& opt = {}, const SourceFn* source = nullptr);

double stable_dt(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                 double cfl);

State step(State s, double dt, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
           const SolverOptions& opt = {}, const SourceFn* source = nullptr);

}  // namespace multifluid

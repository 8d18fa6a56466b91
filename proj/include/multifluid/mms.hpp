#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "multifluid/constitutive.hpp"
#include "multifluid/kernels.hpp"
#include "multifluid/solver.hpp"

namespace multifluid {

/// Value and derivatives of a manufactured field at (x, t).
struct FieldJet {
    double v = 0.0;
    double dx = 0.0;
    double dxx = 0.0;
    double dt = 0.0;
};

using FieldFn = std::function<FieldJet(double x, double t)>;

struct ManufacturedSolution {
    FieldFn rho;
    FieldFn u;
    FieldFn mu;
    double length = 6.283185307179586;
};

/// Smooth periodic travelling wave
///   rho = r0 + ar sin(k(x - V t)),  u = V + au cos(k(x - V t)),
///   mu  = m0 + am sin(k(x - V t) + 1),  k = 2 pi / L.
struct TravelingWave {
    double length = 6.283185307179586;
    double speed = 0.5;
    double rho0 = 1.0, rho_amp = 0.1;
    double u_amp = 0.1;
    double mu0 = 0.5, mu_amp = 0.25;
};
ManufacturedSolution traveling_wave(const TravelingWave& w);

/// Pointwise residual of the PDE for the manufactured fields:
///   (S_rho, S_mom, S_spc) = d_t U + d_x F(U) - d_x(nu d_x u) for each equation.
struct SourceValue {
    double rho = 0.0, mom = 0.0, spc = 0.0;
};
SourceValue manufactured_source(const ManufacturedSolution& m, const PressureLaw& law,
                                const PsiSpec& psi, double x, double t);

/// Cell-averaged source suitable for Stepper::step.
SourceFn manufactured_source_fn(const ManufacturedSolution& m, const PressureLaw& law,
                                const PsiSpec& psi);

/// Cell averages of (rho, rho u, rho mu) at time t.
State manufactured_state(const ManufacturedSolution& m, const Grid& grid, double t);

struct MmsResult {
    std::vector<std::size_t> sizes;
    std::vector<double> err_rho, err_mom, err_spc;       // discrete L2 errors
    std::vector<double> order_rho, order_mom, order_spc; // log2 ratios
    bool monotone = true;
};

/// Runs every grid size to t_end with the manufactured source and returns
/// errors and observed orders. Throws VerificationFailure when an error does
/// not decrease with N (the partial result is in the exception message).
MmsResult mms_study(const ManufacturedSolution& m, const PressureLaw& law, const PsiSpec& psi,
                    const std::vector<std::size_t>& sizes, double t_end, double cfl,
                    Limiter limiter = Limiter::VanLeer);

}  // namespace multifluid

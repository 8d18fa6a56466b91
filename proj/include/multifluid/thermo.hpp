#pragma once

#include <vector>

#include "multifluid/constitutive.hpp"
#include "multifluid/grid.hpp"

namespace multifluid {

/// Controls how the tempered internal energy integral is evaluated.
struct EnergyQuadrature {
    double rel_tol = 1e-10;
    unsigned max_depth = 30;
    /// Use the exact antiderivative of each monomial term instead of adaptive
    /// quadrature. Valid for every PressureLaw since all kinds are sums of
    /// monomials at fixed mu.
    bool closed_form = true;
};

/// int_{rho_ref}^{rho} (p(s,mu) - p(rho_ref,mu)) / s^2 ds, always by adaptive
/// Gauss-Kronrod quadrature. Throws NumericFailure when the requested
/// tolerance is not reached.
double tempered_integral_quadrature(const PressureLaw& law, double rho, double mu,
                                    const EnergyQuadrature& quad = {});

/// Same integral from the antiderivative of each monomial.
double tempered_integral_closed_form(const PressureLaw& law, double rho, double mu);

/// E(rho,mu) = rho * I(rho,mu) + p(rho_ref,mu_ref) - p(rho_ref,mu)
double internal_energy(const PressureLaw& law, double rho, double mu,
                       const EnergyQuadrature& quad = {});

/// E - rho dE/drho - p(rho_ref,mu_ref) + p(rho,mu). E uses the configured path;
/// dE/drho always goes through quadrature so the two sides are computed
/// independently for closed-form laws.
double energy_identity_residual(const PressureLaw& law, double rho, double mu,
                                const EnergyQuadrature& quad = {});

struct EntropyBudget {
    double value = 0.0;        // H
    double dissipation = 0.0;  // D
};

/// H1 = sum (rho u^2/2 + E) dx, D1 = sum over faces nu_f ((u_R - u_L)/dx)^2 dx,
/// where nu_f is the face average used by the viscous flux.
EntropyBudget classical_entropy(const State& state, const Grid& grid, const PressureLaw& law,
                                const PsiSpec& psi, const EnergyQuadrature& quad = {});

/// Effective velocity w = u + rho^-1 dpsi(p)/dx with a central difference.
std::vector<double> bd_velocity(const State& state, const Grid& grid, const PressureLaw& law,
                                const PsiSpec& psi);

/// H2 = sum (rho w^2/2 + E) dx, D2 = sum psi'(p)/rho (dp/dx)^2 dx.
EntropyBudget bd_entropy(const State& state, const Grid& grid, const PressureLaw& law,
                         const PsiSpec& psi, const EnergyQuadrature& quad = {});

}  // namespace multifluid

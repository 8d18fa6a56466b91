#include "multifluid/thermo.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "multifluid/error.hpp"

namespace multifluid {

namespace {

void check_density(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        std::ostringstream os;
        os << "density " << rho << " is not a positive finite number";
        throw Error(ErrorKind::VacuumInput, os.str());
    }
}

// Pressure in every cell.
std::vector<double> cell_pressures(const State& s, const PressureLaw& law) {
    std::vector<double> p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) p[i] = law.pressure(s.rho[i], s.mass_fraction(i));
    return p;
}

}  // namespace

double tempered_integral_quadrature(const PressureLaw& law, double rho, double mu,
                                    const EnergyQuadrature& quad) {
    check_density(rho);
    const double rref = law.reference().rho;
    if (rho == rref) return 0.0;
    const double pref = law.pressure(rref, mu);
    auto f = [&](double s) { return (law.pressure(s, mu) - pref) / (s * s); };
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, rref, rho, quad.max_depth, quad.rel_tol, &err);
    if (!std::isfinite(v) || err > quad.rel_tol * std::abs(v) + 1e-14) {
        std::ostringstream os;
        os << "energy quadrature did not converge at rho=" << rho << " mu=" << mu
           << " (estimate " << err << ")";
        throw Error(ErrorKind::NumericFailure, os.str());
    }
    return v;
}

double tempered_integral_closed_form(const PressureLaw& law, double rho, double mu) {
    check_density(rho);
    const double rref = law.reference().rho;
    const double lr = std::log(rho / rref);
    double sum = 0.0;
    for (const PressureTerm& t : law.terms()) {
        const double c = t.sign * t.coef.value(mu);
        const double g = t.exponent.value(mu);
        // int s^(g-2) ds, written with expm1 so rho near rref keeps its digits
        const double a = g == 1.0 ? lr : std::pow(rref, g - 1.0) * std::expm1((g - 1.0) * lr) / (g - 1.0);
        const double b = std::pow(rref, g) * (rref - rho) / (rho * rref);
        sum += c * (a + b);
    }
    return sum;
}

double internal_energy(const PressureLaw& law, double rho, double mu, const EnergyQuadrature& quad) {
    const double I = quad.closed_form ? tempered_integral_closed_form(law, rho, mu)
                                      : tempered_integral_quadrature(law, rho, mu, quad);
    const ReferenceState& ref = law.reference();
    return rho * I + law.reference_pressure() - law.pressure(ref.rho, mu);
}

double energy_identity_residual(const PressureLaw& law, double rho, double mu,
                                const EnergyQuadrature& quad) {
    const double E = internal_energy(law, rho, mu, quad);
    const double p = law.pressure(rho, mu);
    const double p_ref_mu = law.pressure(law.reference().rho, mu);
    const double dE = tempered_integral_quadrature(law, rho, mu, quad) + (p - p_ref_mu) / rho;
    return E - rho * dE - law.reference_pressure() + p;
}

EntropyBudget classical_entropy(const State& state, const Grid& grid, const PressureLaw& law,
                                const PsiSpec& psi, const EnergyQuadrature& quad) {
    const std::size_t n = state.size();
    const double dx = grid.dx();
    EntropyBudget out;
    std::vector<double> u(n), nu(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double mu = state.mass_fraction(i);
        u[i] = state.velocity(i);
        nu[i] = viscosity(law, psi, state.rho[i], mu);
        out.value += (0.5 * state.rho[i] * u[i] * u[i] + internal_energy(law, state.rho[i], mu, quad)) * dx;
    }
    const ReferenceState& ref = law.reference();
    const double nu_far = viscosity(law, psi, ref.rho, ref.mu);
    // Face k sits between cells k-1 and k; far-field grids also own face n.
    const std::size_t faces = grid.boundary() == Boundary::Periodic ? n : n + 1;
    for (std::size_t k = 0; k < faces; ++k) {
        const double uL = grid.neighbor(u, k, -1, 0.0);
        const double uR = grid.neighbor(u, k, 0, 0.0);
        const double nL = grid.neighbor(nu, k, -1, nu_far);
        const double nR = grid.neighbor(nu, k, 0, nu_far);
        const double g = (uR - uL) / dx;
        out.dissipation += 0.5 * (nL + nR) * g * g * dx;
    }
    return out;
}

std::vector<double> bd_velocity(const State& state, const Grid& grid, const PressureLaw& law,
                                const PsiSpec& psi) {
    const std::size_t n = state.size();
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = psi.value(law.pressure(state.rho[i], state.mass_fraction(i)));
    const double phi_far = psi.value(law.reference_pressure());
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = (grid.neighbor(phi, i, 1, phi_far) - grid.neighbor(phi, i, -1, phi_far)) /
                         (2.0 * grid.dx());
        w[i] = state.velocity(i) + d / state.rho[i];
    }
    return w;
}

EntropyBudget bd_entropy(const State& state, const Grid& grid, const PressureLaw& law,
                         const PsiSpec& psi, const EnergyQuadrature& quad) {
    const std::size_t n = state.size();
    const double dx = grid.dx();
    const std::vector<double> w = bd_velocity(state, grid, law, psi);
    const std::vector<double> p = cell_pressures(state, law);
    const double p_far = law.reference_pressure();
    EntropyBudget out;
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = state.rho[i];
        out.value += (0.5 * rho * w[i] * w[i] + internal_energy(law, rho, state.mass_fraction(i), quad)) * dx;
        const double dp = (grid.neighbor(p, i, 1, p_far) - grid.neighbor(p, i, -1, p_far)) / (2.0 * dx);
        out.dissipation += psi.prime(p[i]) / rho * dp * dp * dx;
    }
    return out;
}

}  // namespace multifluid

#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

#include "multifluid/constitutive.hpp"
#include "multifluid/grid.hpp"

namespace multifluid {

/// Slope limiter for the piecewise-linear reconstruction of (rho, u, mu).
/// FirstOrder drops the reconstruction entirely.
enum class Limiter { FirstOrder, Minmod, VanLeer, MC };

std::string_view to_string(Limiter l);
Limiter limiter_from_string(std::string_view s);

/// Time derivatives of the conserved fields.
struct Tendency {
    std::vector<double> rho;
    std::vector<double> mom;
    std::vector<double> spc;

    Tendency() = default;
    explicit Tendency(std::size_t n) : rho(n), mom(n), spc(n) {}
    void resize(std::size_t n) {
        rho.assign(n, 0.0);
        mom.assign(n, 0.0);
        spc.assign(n, 0.0);
    }
};

/// Cell primitives padded with kGhost ghost cells on each side.
struct Primitives {
    static constexpr std::size_t kGhost = 2;

    std::vector<double> rho, u, mu, p, c, nu;

    void resize(std::size_t n_cells);
    std::size_t padded_size() const { return rho.size(); }
};

/// Total flux through one face: mass, momentum (convective + pressure -
/// viscous) and species.
struct FaceFlux {
    double mass = 0.0;
    double mom = 0.0;
    double spc = 0.0;
};

struct KernelOptions {
    Limiter limiter = Limiter::VanLeer;
};

namespace detail {

inline double limited_slope(double dm, double dp, Limiter lim) {
    switch (lim) {
        case Limiter::FirstOrder:
            return 0.0;
        case Limiter::Minmod:
            if (dm * dp <= 0.0) return 0.0;
            return dm > 0.0 ? std::min(dm, dp) : std::max(dm, dp);
        case Limiter::VanLeer:
            if (dm * dp <= 0.0) return 0.0;
            return 2.0 * dm * dp / (dm + dp);
        case Limiter::MC: {
            if (dm * dp <= 0.0) return 0.0;
            const double c = 0.5 * (dm + dp);
            const double s = dm > 0.0 ? 1.0 : -1.0;
            return s * std::min({std::abs(c), 2.0 * std::abs(dm), 2.0 * std::abs(dp)});
        }
    }
    return 0.0;
}

/// Flux through the face between padded cells j and j+1.
///
/// Convective part: local Lax-Friedrichs on (rho, rho u) with the signal speed
/// max|u| + max sqrt(dp/drho) of the two adjacent cells; the species flux is
/// the mass flux times the upwind mass fraction. Pressure enters as the face
/// average of the cell pressures and the viscous flux as the face-averaged
/// viscosity times the compact velocity difference.
inline FaceFlux face_flux(const Primitives& q, std::size_t j, double dx, Limiter lim) {
    const double* rho = q.rho.data();
    const double* u = q.u.data();
    const double* mu = q.mu.data();

    const double srL = 0.5 * limited_slope(rho[j] - rho[j - 1], rho[j + 1] - rho[j], lim);
    const double srR = 0.5 * limited_slope(rho[j + 1] - rho[j], rho[j + 2] - rho[j + 1], lim);
    const double suL = 0.5 * limited_slope(u[j] - u[j - 1], u[j + 1] - u[j], lim);
    const double suR = 0.5 * limited_slope(u[j + 1] - u[j], u[j + 2] - u[j + 1], lim);

    const double rL = rho[j] + srL;
    const double rR = rho[j + 1] - srR;
    const double uL = u[j] + suL;
    const double uR = u[j + 1] - suR;

    const double a = std::max({std::abs(uL), std::abs(uR), std::abs(u[j]), std::abs(u[j + 1])}) +
                     std::max(q.c[j], q.c[j + 1]);

    const double mL = rL * uL;
    const double mR = rR * uR;

    FaceFlux f;
    f.mass = 0.5 * (mL + mR) - 0.5 * a * (rR - rL);

    double mu_up;
    if (f.mass >= 0.0) {
        mu_up = mu[j] + 0.5 * limited_slope(mu[j] - mu[j - 1], mu[j + 1] - mu[j], lim);
    } else {
        mu_up = mu[j + 1] - 0.5 * limited_slope(mu[j + 1] - mu[j], mu[j + 2] - mu[j + 1], lim);
    }
    f.spc = f.mass * mu_up;

    const double conv = 0.5 * (mL * uL + mR * uR) - 0.5 * a * (mR - mL);
    const double pres = 0.5 * (q.p[j] + q.p[j + 1]);
    const double visc = 0.5 * (q.nu[j] + q.nu[j + 1]) * (u[j + 1] - u[j]) / dx;
    f.mom = conv + pres - visc;
    return f;
}

/// Primitive variables of one cell.
inline void cell_primitives(const PressureLaw& law, const PsiSpec& psi, double rho, double mom,
                            double spc, double& u, double& mu, double& p, double& c, double& nu) {
    u = mom / rho;
    mu = spc / rho;
    const PressureValue pv = law.eval(rho, mu);
    p = pv.p;
    c = std::sqrt(std::max(pv.dp_drho, 0.0));
    nu = rho * pv.dp_drho * psi.prime(pv.p);
}

}  // namespace detail

/// Reusable scratch space for the RHS kernels.
struct RhsWorkspace {
    Primitives prim;
    std::vector<FaceFlux> faces;  // n + 1 faces; face k is the left edge of cell k
};

/// OpenMP-parallel RHS: parallel primitive sweep, parallel face sweep, parallel
/// cell update. Bitwise identical to `rhs_reference`.
void rhs_parallel(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                  const KernelOptions& opt, RhsWorkspace& ws, Tendency& out);

/// Serial reference RHS kept for testing: one loop over cells, each cell
/// evaluating its two face fluxes directly.
void rhs_reference(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                   const KernelOptions& opt, Tendency& out);

/// Fills padded primitives from the state (serial).
void fill_primitives(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                     Primitives& prim);

}  // namespace multifluid

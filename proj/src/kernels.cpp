#include "multifluid/kernels.hpp"

#include <exception>
#include <string>

#include "multifluid/error.hpp"

namespace multifluid {

std::string_view to_string(Limiter l) {
    switch (l) {
        case Limiter::FirstOrder: return "first-order";
        case Limiter::Minmod: return "minmod";
        case Limiter::VanLeer: return "van-leer";
        case Limiter::MC: return "mc";
    }
    return "unknown";
}

Limiter limiter_from_string(std::string_view s) {
    if (s == "first-order" || s == "none") return Limiter::FirstOrder;
    if (s == "minmod") return Limiter::Minmod;
    if (s == "van-leer" || s == "vanleer") return Limiter::VanLeer;
    if (s == "mc") return Limiter::MC;
    throw Error(ErrorKind::InvalidParameter, "unknown limiter '" + std::string(s) + "'");
}

void Primitives::resize(std::size_t n_cells) {
    const std::size_t m = n_cells + 2 * kGhost;
    for (auto* v : {&rho, &u, &mu, &p, &c, &nu}) v->resize(m);
}

namespace {

void fill_cell(const State& s, const PressureLaw& law, const PsiSpec& psi, Primitives& q,
               std::size_t i) {
    const std::size_t j = i + Primitives::kGhost;
    q.rho[j] = s.rho[i];
    detail::cell_primitives(law, psi, s.rho[i], s.mom[i], s.spc[i], q.u[j], q.mu[j], q.p[j], q.c[j],
                            q.nu[j]);
}

void fill_ghosts(const Grid& grid, const PressureLaw& law, const PsiSpec& psi, Primitives& q) {
    const std::size_t n = grid.size();
    const std::size_t g = Primitives::kGhost;
    if (grid.boundary() == Boundary::Periodic) {
        for (auto* v : {&q.rho, &q.u, &q.mu, &q.p, &q.c, &q.nu}) {
            auto& f = *v;
            for (std::size_t k = 0; k < g; ++k) {
                f[k] = f[n + k];
                f[n + g + k] = f[g + k];
            }
        }
        return;
    }
    // Far field: quiescent reference state.
    const ReferenceState& ref = law.reference();
    double u, mu, p, c, nu;
    detail::cell_primitives(law, psi, ref.rho, 0.0, ref.rho * ref.mu, u, mu, p, c, nu);
    for (std::size_t k = 0; k < g; ++k) {
        for (std::size_t j : {k, n + g + k}) {
            q.rho[j] = ref.rho;
            q.u[j] = u;
            q.mu[j] = mu;
            q.p[j] = p;
            q.c[j] = c;
            q.nu[j] = nu;
        }
    }
}

void check_sizes(const State& s, const Grid& grid) {
    if (s.rho.size() != grid.size() || s.mom.size() != grid.size() || s.spc.size() != grid.size()) {
        throw Error(ErrorKind::InvalidInput, "state size does not match the grid");
    }
}

}  // namespace

void fill_primitives(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                     Primitives& prim) {
    check_sizes(s, grid);
    prim.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) fill_cell(s, law, psi, prim, i);
    fill_ghosts(grid, law, psi, prim);
}

void rhs_parallel(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                  const KernelOptions& opt, RhsWorkspace& ws, Tendency& out) {
    check_sizes(s, grid);
    const auto n = static_cast<long>(grid.size());
    const double dx = grid.dx();
    Primitives& q = ws.prim;
    q.resize(grid.size());
    ws.faces.resize(grid.size() + 1);
    out.rho.resize(grid.size());
    out.mom.resize(grid.size());
    out.spc.resize(grid.size());

    // The law throws on vacuum or out-of-range input; exceptions must not
    // leave a parallel region, so the first one is carried out by hand.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        try {
            fill_cell(s, law, psi, q, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(multifluid_rhs_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    fill_ghosts(grid, law, psi, q);

    FaceFlux* faces = ws.faces.data();
#pragma omp parallel for schedule(static)
    for (long k = 0; k <= n; ++k) {
        faces[k] = detail::face_flux(q, static_cast<std::size_t>(k) + 1, dx, opt.limiter);
    }

#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        const FaceFlux& l = faces[i];
        const FaceFlux& r = faces[i + 1];
        out.rho[i] = -(r.mass - l.mass) / dx;
        out.mom[i] = -(r.mom - l.mom) / dx;
        out.spc[i] = -(r.spc - l.spc) / dx;
    }
}

void rhs_reference(const State& s, const Grid& grid, const PressureLaw& law, const PsiSpec& psi,
                   const KernelOptions& opt, Tendency& out) {
    Primitives q;
    fill_primitives(s, grid, law, psi, q);
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    out.rho.resize(n);
    out.mom.resize(n);
    out.spc.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const FaceFlux l = detail::face_flux(q, i + 1, dx, opt.limiter);
        const FaceFlux r = detail::face_flux(q, i + 2, dx, opt.limiter);
        out.rho[i] = -(r.mass - l.mass) / dx;
        out.mom[i] = -(r.mom - l.mom) / dx;
        out.spc[i] = -(r.spc - l.spc) / dx;
    }
}

}  // namespace multifluid

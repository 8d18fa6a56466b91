#include "multifluid/mms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "multifluid/error.hpp"

namespace multifluid {

namespace {

constexpr std::array<double, 4> kNodes{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                       0.8611363115940526};
constexpr std::array<double, 4> kWeights{0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                         0.3478548451374538};

// v0 + a*sin(k(x - V t) + phase), or cos when `cosine`.
FieldFn harmonic(double v0, double a, double k, double speed, double phase, bool cosine) {
    return [=](double x, double t) {
        const double th = k * (x - speed * t) + phase;
        const double s = std::sin(th), c = std::cos(th);
        FieldJet j;
        if (cosine) {
            j.v = v0 + a * c;
            j.dx = -a * k * s;
            j.dxx = -a * k * k * c;
        } else {
            j.v = v0 + a * s;
            j.dx = a * k * c;
            j.dxx = -a * k * k * s;
        }
        j.dt = -speed * j.dx;
        return j;
    };
}

}  // namespace

ManufacturedSolution traveling_wave(const TravelingWave& w) {
    if (!(w.length > 0.0)) throw Error(ErrorKind::InvalidParameter, "wave length must be positive");
    if (!(w.rho0 - std::abs(w.rho_amp) > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "manufactured density must stay positive");
    }
    const double k = 2.0 * std::numbers::pi / w.length;
    ManufacturedSolution m;
    m.rho = harmonic(w.rho0, w.rho_amp, k, w.speed, 0.0, false);
    m.u = harmonic(w.speed, w.u_amp, k, w.speed, 0.0, true);
    m.mu = harmonic(w.mu0, w.mu_amp, k, w.speed, 1.0, false);
    m.length = w.length;
    return m;
}

SourceValue manufactured_source(const ManufacturedSolution& m, const PressureLaw& law, const PsiSpec& psi,
                                double x, double t) {
    const FieldJet r = m.rho(x, t);
    const FieldJet u = m.u(x, t);
    const FieldJet mu = m.mu(x, t);

    const PressureValue pv = law.eval(r.v, mu.v);
    const PressureSecond p2 = law.second(r.v, mu.v);
    const double px = pv.dp_drho * r.dx + pv.dp_dmu * mu.dx;
    const double d1 = psi.prime(pv.p);
    const double d2 = psi.second(pv.p);
    const double nu = r.v * pv.dp_drho * d1;
    const double nux = r.dx * pv.dp_drho * d1 + r.v * (p2.d2p_drho2 * r.dx + p2.d2p_drhodmu * mu.dx) * d1 +
                       r.v * pv.dp_drho * d2 * px;

    SourceValue s;
    const double mass_flux_x = r.dx * u.v + r.v * u.dx;
    s.rho = r.dt + mass_flux_x;
    s.mom = r.dt * u.v + r.v * u.dt + r.dx * u.v * u.v + 2.0 * r.v * u.v * u.dx + px -
            (nux * u.dx + nu * u.dxx);
    s.spc = r.dt * mu.v + r.v * mu.dt + mass_flux_x * mu.v + r.v * u.v * mu.dx;
    return s;
}

SourceFn manufactured_source_fn(const ManufacturedSolution& m, const PressureLaw& law, const PsiSpec& psi) {
    return [m, law, psi](double t, const Grid& grid, Tendency& add) {
        const double dx = grid.dx();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double xc = grid.center(i);
            for (std::size_t q = 0; q < kNodes.size(); ++q) {
                const SourceValue v = manufactured_source(m, law, psi, xc + 0.5 * dx * kNodes[q], t);
                const double w = 0.5 * kWeights[q];
                add.rho[i] += w * v.rho;
                add.mom[i] += w * v.mom;
                add.spc[i] += w * v.spc;
            }
        }
    };
}

State manufactured_state(const ManufacturedSolution& m, const Grid& grid, double t) {
    State s(grid.size());
    s.t = t;
    const double dx = grid.dx();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double xc = grid.center(i);
        for (std::size_t q = 0; q < kNodes.size(); ++q) {
            const double x = xc + 0.5 * dx * kNodes[q];
            const double w = 0.5 * kWeights[q];
            const double r = m.rho(x, t).v;
            s.rho[i] += w * r;
            s.mom[i] += w * r * m.u(x, t).v;
            s.spc[i] += w * r * m.mu(x, t).v;
        }
    }
    return s;
}

MmsResult mms_study(const ManufacturedSolution& m, const PressureLaw& law, const PsiSpec& psi,
                    const std::vector<std::size_t>& sizes, double t_end, double cfl, Limiter limiter) {
    if (sizes.size() < 2) throw Error(ErrorKind::InvalidParameter, "MMS study needs at least two sizes");
    if (!(t_end > 0.0)) throw Error(ErrorKind::InvalidParameter, "MMS end time must be positive");
    MmsResult res;
    res.sizes = sizes;
    const SourceFn source = manufactured_source_fn(m, law, psi);
    for (std::size_t n : sizes) {
        const Grid grid(n, m.length);
        Stepper stepper(grid, law, psi, SolverOptions{limiter});
        State s = manufactured_state(m, grid, 0.0);
        while (s.t < t_end) {
            double dt = stepper.stable_dt(s, cfl);
            const bool last = s.t + dt >= t_end;
            if (last) dt = t_end - s.t;
            stepper.step(s, dt, &source);
            if (last) s.t = t_end;
        }
        const State exact = manufactured_state(m, grid, t_end);
        double er = 0.0, em = 0.0, es = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            er += std::pow(s.rho[i] - exact.rho[i], 2) * grid.dx();
            em += std::pow(s.mom[i] - exact.mom[i], 2) * grid.dx();
            es += std::pow(s.spc[i] - exact.spc[i], 2) * grid.dx();
        }
        res.err_rho.push_back(std::sqrt(er));
        res.err_mom.push_back(std::sqrt(em));
        res.err_spc.push_back(std::sqrt(es));
    }
    auto orders = [](const std::vector<double>& e) {
        std::vector<double> o;
        for (std::size_t k = 0; k + 1 < e.size(); ++k) o.push_back(std::log2(e[k] / e[k + 1]));
        return o;
    };
    res.order_rho = orders(res.err_rho);
    res.order_mom = orders(res.err_mom);
    res.order_spc = orders(res.err_spc);
    for (const auto* e : {&res.err_rho, &res.err_mom, &res.err_spc}) {
        for (std::size_t k = 0; k + 1 < e->size(); ++k) {
            // Errors already at round-off cannot keep shrinking.
            if (!((*e)[k + 1] < (*e)[k]) && (*e)[k] > 1e-13) res.monotone = false;
        }
    }
    if (!res.monotone) {
        std::ostringstream os;
        os << "MMS errors do not decrease with N:";
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            os << " N=" << sizes[k] << " (" << res.err_rho[k] << ", " << res.err_mom[k] << ", "
               << res.err_spc[k] << ")";
        }
        throw Error(ErrorKind::VerificationFailure, os.str());
    }
    return res;
}

}  // namespace multifluid

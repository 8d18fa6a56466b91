#include "multifluid/grid.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "multifluid/error.hpp"

namespace multifluid {

std::string_view to_string(Boundary b) {
    return b == Boundary::Periodic ? "periodic" : "far-field";
}

Boundary boundary_from_string(std::string_view s) {
    if (s == "periodic") return Boundary::Periodic;
    if (s == "far-field" || s == "farfield") return Boundary::FarField;
    throw Error(ErrorKind::InvalidParameter, "unknown boundary '" + std::string(s) + "'");
}

Grid::Grid(std::size_t n, double length, Boundary boundary)
    : n_(n), length_(length), dx_(0.0), boundary_(boundary) {
    if (n < 8) {
        std::ostringstream os;
        os << "grid needs at least 8 cells (got " << n << ")";
        throw Error(ErrorKind::InvalidParameter, os.str());
    }
    if (!std::isfinite(length) || !(length > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "domain length must be positive and finite");
    }
    dx_ = length / static_cast<double>(n);
}

State shifted(const State& s, long k) {
    const auto n = static_cast<long>(s.size());
    State out(s.size());
    out.t = s.t;
    for (long i = 0; i < n; ++i) {
        long j = (i + k) % n;
        if (j < 0) j += n;
        const auto src = static_cast<std::size_t>(i);
        const auto dst = static_cast<std::size_t>(j);
        out.rho[dst] = s.rho[src];
        out.mom[dst] = s.mom[src];
        out.spc[dst] = s.spc[src];
    }
    return out;
}

}  // namespace multifluid

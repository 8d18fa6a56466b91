#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace multifluid {

enum class Boundary { Periodic, FarField };

std::string_view to_string(Boundary b);
Boundary boundary_from_string(std::string_view s);

/// Uniform cell-centred mesh on [0, L]. Far-field mode pads the domain with
/// ghost cells frozen at the reference state.
class Grid {
public:
    Grid(std::size_t n, double length, Boundary boundary = Boundary::Periodic);

    std::size_t size() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double dx() const noexcept { return dx_; }
    Boundary boundary() const noexcept { return boundary_; }

    double center(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * dx_; }

    /// f[i + offset], wrapped for periodic grids; `farfield` outside the
    /// domain otherwise.
    double neighbor(std::span<const double> f, std::size_t i, int offset, double farfield) const {
        const auto n = static_cast<long>(n_);
        long j = static_cast<long>(i) + offset;
        if (j >= 0 && j < n) return f[static_cast<std::size_t>(j)];
        if (boundary_ == Boundary::FarField) return farfield;
        j %= n;
        if (j < 0) j += n;
        return f[static_cast<std::size_t>(j)];
    }

private:
    std::size_t n_;
    double length_;
    double dx_;
    Boundary boundary_;
};

/// Cell averages of the conserved fields.
struct State {
    double t = 0.0;
    std::vector<double> rho;  // density
    std::vector<double> mom;  // momentum rho*u
    std::vector<double> spc;  // species density rho*mu

    State() = default;
    explicit State(std::size_t n) : rho(n), mom(n), spc(n) {}

    std::size_t size() const noexcept { return rho.size(); }
    double velocity(std::size_t i) const { return mom[i] / rho[i]; }
    double mass_fraction(std::size_t i) const { return spc[i] / rho[i]; }

    friend bool operator==(const State&, const State&) = default;
};

/// Cyclic shift of every field by k cells (k > 0 moves data to the right).
State shifted(const State& s, long k);

}  // namespace multifluid

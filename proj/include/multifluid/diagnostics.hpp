#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multifluid/constitutive.hpp"
#include "multifluid/grid.hpp"
#include "multifluid/thermo.hpp"

namespace multifluid {

/// Snapshot of conserved totals, both entropy functionals with their
/// dissipation rates, density bounds and the a priori norms.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double momentum = 0.0;
    double species = 0.0;
    double H1 = 0.0;
    double D1 = 0.0;
    double H2 = 0.0;
    double D2 = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    double mugrad_sup = 0.0;  // max |rho^-1 dmu/dx|
    double n1 = 0.0;          // ||sqrt(nu) du/dx||
    double n2 = 0.0;          // ||sqrt(rho) u||
    double n3 = 0.0;          // ||E||_L1
    double n4 = 0.0;          // ||dpsi(p)/dx / sqrt(rho)||
    double n5 = 0.0;          // ||(psi'/rho)^1/2 dp/dx||
};

/// Column names in CSV order.
const std::vector<std::string>& diagnostics_columns();
std::vector<double> as_row(const DiagnosticsRecord& r);
DiagnosticsRecord from_row(std::span<const double> row);

DiagnosticsRecord record(const State& s, const Grid& grid, const PressureLaw& law,
                         const PsiSpec& psi, const EnergyQuadrature& quad = {});

/// max_i |(mu_{i+1} - mu_{i-1}) / (2 dx)| / rho_i
double mugrad_sup(const State& s, const Grid& grid, const ReferenceState& ref);

// ---------------------------------------------------------------------------
// Checks over a series of records
// ---------------------------------------------------------------------------

enum class Verdict { Pass, Fail, Identical };
std::string_view to_string(Verdict v);

struct BudgetReport {
    std::vector<double> t;
    std::vector<double> r1;  // H1(t) - H1(0) + int D1
    std::vector<double> r2;  // H2(t) - H2(0) + int D2
    double max_r1 = 0.0;
    double max_abs_r1 = 0.0;
    double max_abs_r2 = 0.0;
    double tol1 = 0.0;
    Verdict classical = Verdict::Pass;
    std::string verdict_line;  // "PASS ..." or "FAIL ..."
};

/// Trapezoidal time integration of D1 and D2 over the record times.
/// `dt_history[k]` must equal t_{k+1} - t_k; otherwise InvalidInput.
/// tol1 = tol_scale * max(1, H1(0)); the classical residual fails when it
/// exceeds tol1 at any time.
BudgetReport entropy_budget_check(std::span<const DiagnosticsRecord> records,
                                  std::span<const double> dt_history, double tol_scale = 1e-6);

/// log2 of successive ratios of `errors` (one entry per refinement level).
std::vector<double> refinement_slopes(std::span<const double> errors);

struct TransportReport {
    double initial = 0.0;
    double max_value = 0.0;
    double min_value = 0.0;
    double drift = 0.0;           // max_t |sup(t) - sup(0)|
    double relative_drift = 0.0;  // drift / sup(0)
    Verdict verdict = Verdict::Pass;
};

/// PASS iff drift <= rel_limit * sup(0) + abs_eps.
TransportReport transport_invariant_check(std::span<const DiagnosticsRecord> records,
                                          double rel_limit = 0.05, double abs_eps = 1e-12);

struct DensityBoundsReport {
    double rho_lo = 0.0;
    double rho_hi = 0.0;
    Verdict verdict = Verdict::Pass;
    double first_violation_time = -1.0;
};

DensityBoundsReport density_bounds_check(std::span<const DiagnosticsRecord> records,
                                         double rho_floor);

// ---------------------------------------------------------------------------
// Distance between two trajectories
// ---------------------------------------------------------------------------

struct StabilityRecord {
    double t = 0.0;
    double X = 0.0;
    double tau2 = 0.0;      // sum (rho1 - rho2)^2 dx
    double rho_zeta2 = 0.0; // sum rho1 (u1 - u2)^2 dx
    double chi2 = 0.0;      // sum (mu1 - mu2)^2 dx
};

StabilityRecord stability_functional(const State& a, const State& b, const Grid& grid);

struct StabilityReport {
    std::vector<StabilityRecord> series;
    bool rate_defined = false;
    double rate = 0.0;           // least-squares slope of ln X
    double max_excursion = 0.0;  // max X(t) / (X(0) e^{rate t})
    Verdict verdict = Verdict::Pass;
};

/// The rate fit skips the first `skip` samples; PASS iff the rate is finite
/// and X never exceeds the fitted envelope by more than `excursion_limit`.
StabilityReport stability_compare(std::span<const State> a, std::span<const State> b,
                                  const Grid& grid, std::size_t skip = 5,
                                  double excursion_limit = 0.10);

}  // namespace multifluid

#pragma once

#include <string>
#include <vector>

#include "multifluid/constitutive.hpp"
#include "multifluid/thermo.hpp"

namespace multifluid {

/// Sampling box for the admissibility audit. Densities are log-spaced,
/// mass fractions linearly spaced; rho = 1 is always inserted when it lies in
/// the box so both sides of the envelope split are evaluated there.
struct AuditBox {
    double rho_min = 0.1;
    double rho_max = 10.0;
    double mu_min = 0.0;
    double mu_max = 1.0;
    int samples = 41;  // per axis
};

/// Tightest constant C >= 1 over the samples for one hypothesis, together
/// with the value fitted on the nested box (same side, far end pulled in).
/// A finite C that still grows between the nested and the full box is
/// reported as a failure: the hypothesis constant is existential, so growth
/// with the box means no constant exists.
struct EnvelopeCheck {
    std::string name;
    double constant = 1.0;
    double nested_constant = 1.0;
    bool pass = true;
    std::string reason;
};

struct AdmissibilityReport {
    double gamma_lo = 0.0;
    double gamma_hi = 0.0;
    bool window_valid = false;
    bool alpha_valid = false;
    double eta = 0.0;
    double sigma = 0.0;
    double nu_min = 0.0;
    double nu_max = 0.0;
    double min_dp_drho = 0.0;
    int negative_energy_samples = 0;  // reported only (mu != mu_ref may go negative)
    std::vector<EnvelopeCheck> checks;
    std::vector<std::string> failures;  // one reason line per failed item

    bool pass() const { return failures.empty(); }
    const EnvelopeCheck* find(const std::string& name) const;

    /// Flat `key = value` text, deterministic for a fixed report.
    std::string to_key_value() const;
};

AdmissibilityReport audit_law(const PressureLaw& law, const GammaWindow& window, const PsiSpec& psi,
                              const AuditBox& box, const EnergyQuadrature& quad = {});

}  // namespace multifluid

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multifluid/audit.hpp"
#include "multifluid/constitutive.hpp"
#include "multifluid/grid.hpp"
#include "multifluid/kernels.hpp"
#include "multifluid/solver.hpp"

namespace multifluid {

/// Raw sectioned key=value document. Keeps the source line of every entry so
/// semantic errors can point back at it. Overrides carry line 0.
class ConfigDocument {
public:
    struct Entry {
        std::string value;
        int line = 0;
    };

    static ConfigDocument parse(std::string_view text);

    /// `section.key=value`
    void apply_override(std::string_view assignment);
    void set(const std::string& section, const std::string& key, std::string value, int line = 0);

    const Entry* find(const std::string& section, const std::string& key) const;
    const std::map<std::string, std::map<std::string, Entry>>& sections() const { return sections_; }

    /// Sorted `[section]` / `key = value` rendering, independent of comments,
    /// ordering and whitespace in the source.
    std::string canonical() const;

private:
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

struct TimeConfig {
    double t_end = 0.5;
    double cfl = 0.4;
    Limiter limiter = Limiter::VanLeer;
    std::size_t max_steps = 0;  // 0: unlimited
};

struct OutputConfig {
    std::string dir;              // empty: no files
    std::size_t diag_every = 1;   // record cadence in steps (interval == 0)
    double interval = 0.0;        // record cadence in time; dt is clipped to hit it
    std::size_t snapshot_every = 0;  // 0: initial and final snapshot only
};

/// Travelling-wave manufactured solution on the configured domain.
struct MmsConfig {
    std::vector<std::size_t> sizes{64, 128, 256, 512};
    double t_end = 0.1;
    double speed = 0.5;
    double rho0 = 1.0, rho_amp = 0.1;
    double u_amp = 0.1;
    double mu0 = 0.5, mu_amp = 0.25;
};

/// Fully resolved run configuration.
struct RunConfig {
    PressureLaw law = PressureLaw::power(ParamCurve::constant(1.0), ParamCurve::constant(1.35));
    GammaWindow window{1.3, 1.4};
    PsiSpec psi{AlphaChoice{}};
    Grid grid{256, 6.283185307179586};
    TimeConfig time;
    InitFamily family = InitFamily::GaussianRhoBump;
    InitParams init;
    OutputConfig output;
    AuditBox audit;
    bool skip_audit = false;
    MmsConfig mms;

    /// Canonical document text (after overrides); its hash names the run.
    std::string canonical;
};

/// Builds a RunConfig from a document. Unknown sections or keys and
/// malformed values raise ParseError naming the key and its line.
RunConfig build_config(const ConfigDocument& doc);

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

}  // namespace multifluid

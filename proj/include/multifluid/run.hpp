#pragma once

#include <functional>
#include <vector>

#include "multifluid/audit.hpp"
#include "multifluid/config.hpp"
#include "multifluid/diagnostics.hpp"

namespace multifluid {

struct RunObserver {
    /// Called for every diagnostics record, with the state it was taken from.
    std::function<void(const State&, const DiagnosticsRecord&)> on_record;
    /// Called for every snapshot (initial, periodic, final).
    std::function<void(const State&, std::size_t index)> on_snapshot;
};

struct RunResult {
    State final_state;
    std::vector<DiagnosticsRecord> records;
    std::vector<double> record_dt;  // t_{k+1} - t_k between records
    std::size_t steps = 0;
    double mugrad_constant = 0.0;   // realised C0 of the initial data
    bool audit_bypassed = false;
    AdmissibilityReport audit;
};

/// Audits the law (unless bypassed), builds the initial data and integrates
/// to t_end. Deterministic for a fixed config. Throws AdmissibilityFailure if
/// the audit fails and DivergedError if the integration blows up; records
/// produced before the failure have already been delivered to the observer.
RunResult run(const RunConfig& cfg, const RunObserver& observer = {});

}  // namespace multifluid

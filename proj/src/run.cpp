#include "multifluid/run.hpp"

#include <algorithm>
#include <cmath>

#include "multifluid/error.hpp"

namespace multifluid {

RunResult run(const RunConfig& cfg, const RunObserver& observer) {
    RunResult res;
    if (cfg.skip_audit) {
        res.audit_bypassed = true;
    } else {
        res.audit = audit_law(cfg.law, cfg.window, cfg.psi, cfg.audit);
        if (!res.audit.pass()) {
            std::string msg = "pressure law failed the admissibility audit";
            for (const auto& f : res.audit.failures) msg += "\n  " + f;
            throw Error(ErrorKind::AdmissibilityFailure, msg);
        }
    }

    InitResult init = init_data(cfg.family, cfg.init, cfg.grid, cfg.law);
    res.mugrad_constant = init.mugrad_constant;
    State s = std::move(init.state);
    Stepper stepper(cfg.grid, cfg.law, cfg.psi, SolverOptions{cfg.time.limiter});

    auto emit = [&](const State& st) {
        const DiagnosticsRecord r = record(st, cfg.grid, cfg.law, cfg.psi);
        if (!res.records.empty()) res.record_dt.push_back(r.t - res.records.back().t);
        res.records.push_back(r);
        if (observer.on_record) observer.on_record(st, r);
    };
    std::size_t snapshots = 0;
    auto snapshot = [&](const State& st) {
        if (observer.on_snapshot) observer.on_snapshot(st, snapshots);
        ++snapshots;
    };

    emit(s);
    snapshot(s);

    const double t_end = cfg.time.t_end;
    const double interval = cfg.output.interval;
    std::size_t next_out = 1;  // index of the next interval output time
    bool recorded_last = true;
    bool snap_last = true;
    while (s.t < t_end) {
        if (cfg.time.max_steps && res.steps >= cfg.time.max_steps) break;
        double dt = stepper.stable_dt(s, cfg.time.cfl);
        double target = t_end;
        if (interval > 0.0) target = std::min(t_end, static_cast<double>(next_out) * interval);
        bool hit = false;
        if (s.t + dt >= target) {
            dt = target - s.t;
            hit = true;
        }
        stepper.step(s, dt);
        if (hit) s.t = target;
        ++res.steps;

        bool want = false;
        if (interval > 0.0) {
            if (hit && target < t_end) {
                ++next_out;
                want = true;
            }
        } else {
            want = res.steps % cfg.output.diag_every == 0;
        }
        recorded_last = false;
        snap_last = false;
        if (want) {
            emit(s);
            recorded_last = true;
        }
        if (cfg.output.snapshot_every && res.steps % cfg.output.snapshot_every == 0) {
            snapshot(s);
            snap_last = true;
        }
    }
    if (!recorded_last) emit(s);
    if (!snap_last) snapshot(s);
    res.final_state = std::move(s);
    return res;
}

}  // namespace multifluid

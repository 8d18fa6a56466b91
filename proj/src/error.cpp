#include "multifluid/error.hpp"

#include <utility>

namespace multifluid {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::VacuumInput: return "vacuum-input";
        case ErrorKind::WindowInadmissible: return "window-inadmissible";
        case ErrorKind::InadmissibleAlpha: return "inadmissible-alpha";
        case ErrorKind::InvalidPressure: return "invalid-pressure";
        case ErrorKind::NumericFailure: return "numeric-failure";
        case ErrorKind::InvalidInitialData: return "invalid-initial-data";
        case ErrorKind::SimulationDiverged: return "simulation-diverged";
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::VerificationFailure: return "verification-failure";
        case ErrorKind::AdmissibilityFailure: return "admissibility-failure";
        case ErrorKind::ParseError: return "parse-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

DivergedError::DivergedError(double time, std::size_t cell, std::string field, double value)
    : Error(ErrorKind::SimulationDiverged,
            "t=" + std::to_string(time) + " cell=" + std::to_string(cell) + " field=" + field +
                " value=" + std::to_string(value)),
      time_(time),
      cell_(cell),
      field_(std::move(field)),
      value_(value) {}

ParseError::ParseError(std::string key, int line, const std::string& message)
    : Error(ErrorKind::ParseError,
            (line > 0    ? "line " + std::to_string(line) + ", "
             : line == 0 ? std::string("override, ")
                         : std::string()) +
                "key '" + key + "': " + message),
      key_(std::move(key)),
      line_(line) {}

}  // namespace multifluid

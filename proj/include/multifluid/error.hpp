#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace multifluid {

enum class ErrorKind {
    InvalidParameter,
    VacuumInput,
    WindowInadmissible,
    InadmissibleAlpha,
    InvalidPressure,
    NumericFailure,
    InvalidInitialData,
    SimulationDiverged,
    InvalidInput,
    VerificationFailure,
    AdmissibilityFailure,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the time stepper when a field turns non-finite or the density
/// drops to the vacuum floor. Carries the first offending cell.
class DivergedError : public Error {
public:
    DivergedError(double time, std::size_t cell, std::string field, double value);

    double time() const noexcept { return time_; }
    std::size_t cell() const noexcept { return cell_; }
    const std::string& field() const noexcept { return field_; }
    double value() const noexcept { return value_; }

private:
    double time_;
    std::size_t cell_;
    std::string field_;
    double value_;
};

/// Config syntax or semantic error tied to a key and a source line
/// (0 for command-line overrides, negative when there is no line).
class ParseError : public Error {
public:
    ParseError(std::string key, int line, const std::string& message);

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

}  // namespace multifluid

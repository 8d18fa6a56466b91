#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "multifluid/constitutive.hpp"
#include "multifluid/diagnostics.hpp"
#include "multifluid/grid.hpp"

namespace multifluid {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

/// Comment block written at the top of every output file.
struct Provenance {
    std::string subcommand;
    std::string config_hash;
    std::vector<std::string> overrides;
    std::vector<std::string> extra;  // additional `# key=value` lines
};

void write_provenance(std::ostream& os, const Provenance& prov);

/// %.17g
std::string format_double(double v);

void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records,
                           const Provenance& prov);
void write_diagnostics_row(std::ostream& os, const DiagnosticsRecord& r);
void write_diagnostics_header(std::ostream& os);

/// Columns x,rho,u,mu,p,nu; one row per cell.
void write_snapshot_csv(std::ostream& os, const State& s, const Grid& grid, const PressureLaw& law,
                        const PsiSpec& psi, const Provenance& prov);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Index of a column or -1.
    int column(std::string_view name) const;
};

/// Skips `#` comment lines; the first non-comment line is the header.
/// Throws InvalidInput on ragged rows or non-numeric cells.
CsvTable read_csv(std::istream& is);

/// Records back from a diagnostics CSV.
std::vector<DiagnosticsRecord> read_diagnostics_csv(std::istream& is);

}  // namespace multifluid

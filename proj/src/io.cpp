#include "multifluid/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "multifluid/error.hpp"

namespace multifluid {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_provenance(std::ostream& os, const Provenance& prov) {
    os << "# multifluid " << kToolVersion << '\n';
    os << "# subcommand=" << prov.subcommand << '\n';
    os << "# config_hash=" << prov.config_hash << '\n';
    if (prov.overrides.empty()) {
        os << "# overrides=none\n";
    } else {
        for (const auto& o : prov.overrides) os << "# override=" << o << '\n';
    }
    for (const auto& e : prov.extra) os << "# " << e << '\n';
}

void write_diagnostics_header(std::ostream& os) {
    const auto& cols = diagnostics_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
}

void write_diagnostics_row(std::ostream& os, const DiagnosticsRecord& r) {
    const auto row = as_row(r);
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
}

void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records,
                           const Provenance& prov) {
    write_provenance(os, prov);
    write_diagnostics_header(os);
    for (const auto& r : records) write_diagnostics_row(os, r);
}

void write_snapshot_csv(std::ostream& os, const State& s, const Grid& grid, const PressureLaw& law,
                        const PsiSpec& psi, const Provenance& prov) {
    write_provenance(os, prov);
    os << "# t=" << format_double(s.t) << '\n';
    os << "x,rho,u,mu,p,nu\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double mu = s.mass_fraction(i);
        const PressureValue pv = law.eval(s.rho[i], mu);
        const double nu = s.rho[i] * pv.dp_drho * psi.prime(pv.p);
        os << format_double(grid.center(i)) << ',' << format_double(s.rho[i]) << ','
           << format_double(s.velocity(i)) << ',' << format_double(mu) << ',' << format_double(pv.p)
           << ',' << format_double(nu) << '\n';
    }
}

int CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
    CsvTable t;
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string_view v = trim(line);
        if (v.empty() || v.front() == '#') continue;
        const auto cells = split(v);
        if (!header) {
            for (auto c : cells) t.columns.emplace_back(trim(c));
            header = true;
            continue;
        }
        if (cells.size() != t.columns.size()) {
            std::ostringstream os;
            os << "line " << lineno << ": expected " << t.columns.size() << " cells, found " << cells.size();
            throw Error(ErrorKind::InvalidInput, os.str());
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto c : cells) {
            c = trim(c);
            double x = 0.0;
            const auto res = std::from_chars(c.data(), c.data() + c.size(), x);
            if (res.ec != std::errc() || res.ptr != c.data() + c.size()) {
                std::ostringstream os;
                os << "line " << lineno << ": '" << c << "' is not a number";
                throw Error(ErrorKind::InvalidInput, os.str());
            }
            row.push_back(x);
        }
        t.rows.push_back(std::move(row));
    }
    if (!header) throw Error(ErrorKind::InvalidInput, "CSV input has no header line");
    return t;
}

std::vector<DiagnosticsRecord> read_diagnostics_csv(std::istream& is) {
    const CsvTable t = read_csv(is);
    if (t.columns != diagnostics_columns()) {
        throw Error(ErrorKind::InvalidInput, "CSV header does not match the diagnostics columns");
    }
    std::vector<DiagnosticsRecord> out;
    out.reserve(t.rows.size());
    for (const auto& r : t.rows) out.push_back(from_row(r));
    return out;
}

}  // namespace multifluid

#include "multifluid/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "multifluid/error.hpp"

namespace multifluid {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s{
        {"law",
         {"kind", "coef", "coef_slope", "gamma", "gamma_slope", "c1", "c2", "c3", "gamma_i",
          "gamma_i_slope", "gamma_j", "gamma_j_slope", "gamma_k", "gamma_k_slope", "mu_points",
          "coef_points", "gamma_points", "rho_ref", "mu_ref", "mu_min", "mu_max"}},
        {"window", {"gamma_lo", "gamma_hi"}},
        {"psi", {"alpha_lo", "alpha_hi", "scale"}},
        {"grid", {"n", "length", "boundary"}},
        {"time", {"t_end", "cfl", "limiter", "max_steps"}},
        {"init",
         {"family", "center", "bump_amplitude", "bump_width", "mu_delta", "interface_width",
          "plateau_half_width", "pulse_amplitude", "pulse_width", "velocity", "perturb_amplitude",
          "perturb_width", "perturb_center"}},
        {"output", {"dir", "diag_every", "interval", "snapshot_every"}},
        {"audit", {"rho_min", "rho_max", "mu_min", "mu_max", "samples", "skip"}},
        {"mms", {"sizes", "t_end", "speed", "rho0", "rho_amp", "u_amp", "mu0", "mu_amp"}},
    };
    return s;
}

class Reader {
public:
    explicit Reader(const ConfigDocument& doc) : doc_(doc) {}

    const ConfigDocument::Entry* entry(const std::string& sec, const std::string& key) const {
        return doc_.find(sec, key);
    }
    bool has(const std::string& sec, const std::string& key) const { return entry(sec, key) != nullptr; }
    int line(const std::string& sec, const std::string& key) const {
        const auto* e = entry(sec, key);
        return e ? e->line : 0;
    }

    [[noreturn]] void fail(const std::string& sec, const std::string& key, const std::string& msg) const {
        throw ParseError(sec + "." + key, line(sec, key), msg);
    }

    double number(const std::string& sec, const std::string& key, double def) const {
        const auto* e = entry(sec, key);
        return e ? parse_number(sec, key, e->value) : def;
    }

    double parse_number(const std::string& sec, const std::string& key, std::string_view v) const {
        v = trim(v);
        double x = 0.0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
        if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(x)) {
            fail(sec, key, "'" + std::string(v) + "' is not a finite number");
        }
        return x;
    }

    std::size_t count(const std::string& sec, const std::string& key, std::size_t def) const {
        const auto* e = entry(sec, key);
        return e ? parse_count(sec, key, e->value) : def;
    }

    std::size_t parse_count(const std::string& sec, const std::string& key, std::string_view v) const {
        v = trim(v);
        unsigned long long x = 0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
        if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
            fail(sec, key, "'" + std::string(v) + "' is not a non-negative integer");
        }
        return static_cast<std::size_t>(x);
    }

    bool flag(const std::string& sec, const std::string& key, bool def) const {
        const auto* e = entry(sec, key);
        if (!e) return def;
        const std::string_view v = trim(e->value);
        if (v == "true" || v == "yes" || v == "1") return true;
        if (v == "false" || v == "no" || v == "0") return false;
        fail(sec, key, "'" + std::string(v) + "' is not a boolean");
    }

    std::string text(const std::string& sec, const std::string& key, const std::string& def) const {
        const auto* e = entry(sec, key);
        return e ? std::string(trim(e->value)) : def;
    }

    std::vector<double> numbers(const std::string& sec, const std::string& key) const {
        std::vector<double> out;
        const auto* e = entry(sec, key);
        if (!e) fail(sec, key, "required list is missing");
        std::string_view v = e->value;
        while (true) {
            const auto comma = v.find(',');
            out.push_back(parse_number(sec, key, v.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            v.remove_prefix(comma + 1);
        }
        return out;
    }

    /// Runs `f`; library errors become ParseErrors pinned to sec.key.
    template <class F>
    auto guarded(const std::string& sec, const std::string& key, F&& f) const {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(sec, key, e.what());
        }
    }

private:
    const ConfigDocument& doc_;
};

// a + b*mu, clamped to the values it takes at the ends of the mass-fraction range.
ParamCurve curve(const Reader& r, const std::string& key, double def, const MuRange& range) {
    const double a = r.number("law", key, def);
    const double b = r.number("law", key + "_slope", 0.0);
    if (b == 0.0) return ParamCurve::constant(a);
    const double v0 = a + b * range.lo;
    const double v1 = a + b * range.hi;
    return ParamCurve::affine(a, b, std::min(v0, v1), std::max(v0, v1));
}

PressureLaw build_law(const Reader& r) {
    const ReferenceState ref{r.number("law", "rho_ref", 1.0), r.number("law", "mu_ref", 0.0)};
    const MuRange range{r.number("law", "mu_min", 0.0), r.number("law", "mu_max", 1.0)};
    const std::string kind = r.text("law", "kind", "power");
    return r.guarded("law", "kind", [&] {
        if (kind == "power") {
            return PressureLaw::power(curve(r, "coef", 1.0, range), curve(r, "gamma", 1.35, range), ref,
                                      range);
        }
        if (kind == "nuclear") {
            return PressureLaw::nuclear(r.number("law", "c1", 1.0), r.number("law", "c2", 1.0),
                                        r.number("law", "c3", 1.0), curve(r, "gamma_i", 3.0, range),
                                        curve(r, "gamma_j", 2.0, range), curve(r, "gamma_k", 1.75, range),
                                        ref, range);
        }
        if (kind == "custom-tabulated") {
            return PressureLaw::tabulated(r.numbers("law", "mu_points"), r.numbers("law", "coef_points"),
                                          r.numbers("law", "gamma_points"), ref, range);
        }
        r.fail("law", "kind", "unknown law kind '" + kind + "'");
    });
}

}  // namespace

ConfigDocument ConfigDocument::parse(std::string_view text) {
    ConfigDocument doc;
    std::string section;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ParseError(std::string(line), lineno, "malformed section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!schema().count(section)) throw ParseError(section, lineno, "unknown section");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(std::string(line), lineno, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) throw ParseError("", lineno, "empty key");
        if (section.empty()) throw ParseError(key, lineno, "key appears before any section");
        if (doc.find(section, key)) throw ParseError(section + "." + key, lineno, "duplicate key");
        doc.set(section, key, std::string(trim(line.substr(eq + 1))), lineno);
    }
    return doc;
}

void ConfigDocument::apply_override(std::string_view assignment) {
    const auto eq = assignment.find('=');
    const auto dot = assignment.find('.');
    if (eq == std::string_view::npos || dot == std::string_view::npos || dot == 0 || dot + 1 >= eq) {
        throw ParseError(std::string(assignment), 0, "override must look like section.key=value");
    }
    const std::string section(trim(assignment.substr(0, dot)));
    const std::string key(trim(assignment.substr(dot + 1, eq - dot - 1)));
    if (!schema().count(section)) throw ParseError(section + "." + key, 0, "unknown section");
    set(section, key, std::string(trim(assignment.substr(eq + 1))), 0);
}

void ConfigDocument::set(const std::string& section, const std::string& key, std::string value, int line) {
    sections_[section][key] = Entry{std::move(value), line};
}

const ConfigDocument::Entry* ConfigDocument::find(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

std::string ConfigDocument::canonical() const {
    std::ostringstream os;
    for (const auto& [name, entries] : sections_) {
        os << '[' << name << "]\n";
        for (const auto& [key, e] : entries) os << key << " = " << e.value << '\n';
    }
    return os.str();
}

RunConfig build_config(const ConfigDocument& doc) {
    for (const auto& [sec, entries] : doc.sections()) {
        const auto known = schema().find(sec);
        if (known == schema().end()) {
            const int line = entries.empty() ? 0 : entries.begin()->second.line;
            throw ParseError(sec, line, "unknown section");
        }
        for (const auto& [key, e] : entries) {
            if (!known->second.count(key)) throw ParseError(sec + "." + key, e.line, "unknown key");
        }
    }
    const Reader r(doc);
    RunConfig cfg;
    cfg.canonical = doc.canonical();
    cfg.law = build_law(r);

    const double glo = r.number("window", "gamma_lo", 1.3);
    const double ghi = r.number("window", "gamma_hi", 1.4);
    cfg.window = r.guarded("window", "gamma_lo", [&] { return GammaWindow(glo, ghi); });

    // Default exponents are the interval midpoints; a window without any
    // admissible exponent falls back to (1, 1/2) and is left for the audit.
    AlphaChoice alpha;
    if (cfg.window.valid()) alpha = default_alpha(glo, ghi);
    alpha.lower = r.number("psi", "alpha_lo", alpha.lower);
    alpha.upper = r.number("psi", "alpha_hi", alpha.upper);
    cfg.psi = r.guarded("psi", "scale", [&] { return PsiSpec(alpha, r.number("psi", "scale", 1.0)); });

    const std::size_t n = r.count("grid", "n", 256);
    const double length = r.number("grid", "length", 6.283185307179586);
    const Boundary boundary =
        r.guarded("grid", "boundary", [&] { return boundary_from_string(r.text("grid", "boundary", "periodic")); });
    cfg.grid = r.guarded("grid", "n", [&] { return Grid(n, length, boundary); });

    cfg.time.t_end = r.number("time", "t_end", cfg.time.t_end);
    if (cfg.time.t_end < 0.0) r.fail("time", "t_end", "must be >= 0");
    // CFL numbers above 1 are accepted on purpose: they are how a run is
    // driven into the divergence path.
    cfg.time.cfl = r.number("time", "cfl", cfg.time.cfl);
    if (!(cfg.time.cfl > 0.0)) r.fail("time", "cfl", "must be > 0");
    cfg.time.limiter =
        r.guarded("time", "limiter", [&] { return limiter_from_string(r.text("time", "limiter", "van-leer")); });
    cfg.time.max_steps = r.count("time", "max_steps", 0);

    cfg.family = r.guarded("init", "family", [&] {
        return init_family_from_string(r.text("init", "family", "gaussian-rho-bump"));
    });
    InitParams& ip = cfg.init;
    ip.center = r.number("init", "center", ip.center);
    ip.bump_amplitude = r.number("init", "bump_amplitude", ip.bump_amplitude);
    ip.bump_width = r.number("init", "bump_width", ip.bump_width);
    ip.mu_delta = r.number("init", "mu_delta", ip.mu_delta);
    ip.interface_width = r.number("init", "interface_width", ip.interface_width);
    ip.plateau_half_width = r.number("init", "plateau_half_width", ip.plateau_half_width);
    ip.pulse_amplitude = r.number("init", "pulse_amplitude", ip.pulse_amplitude);
    ip.pulse_width = r.number("init", "pulse_width", ip.pulse_width);
    ip.velocity = r.number("init", "velocity", ip.velocity);
    ip.perturb_amplitude = r.number("init", "perturb_amplitude", ip.perturb_amplitude);
    ip.perturb_width = r.number("init", "perturb_width", ip.perturb_width);
    ip.perturb_center = r.number("init", "perturb_center", ip.perturb_center);
    if (boundary == Boundary::FarField && ip.velocity != 0.0) {
        r.fail("init", "velocity", "far-field grids hold the fluid at rest outside the domain");
    }

    cfg.output.dir = r.text("output", "dir", "");
    cfg.output.diag_every = r.count("output", "diag_every", 1);
    if (cfg.output.diag_every == 0) r.fail("output", "diag_every", "must be >= 1");
    cfg.output.interval = r.number("output", "interval", 0.0);
    if (cfg.output.interval < 0.0) r.fail("output", "interval", "must be >= 0");
    cfg.output.snapshot_every = r.count("output", "snapshot_every", 0);

    cfg.audit.rho_min = r.number("audit", "rho_min", cfg.audit.rho_min);
    cfg.audit.rho_max = r.number("audit", "rho_max", cfg.audit.rho_max);
    cfg.audit.mu_min = r.number("audit", "mu_min", cfg.law.mu_range().lo);
    cfg.audit.mu_max = r.number("audit", "mu_max", cfg.law.mu_range().hi);
    cfg.audit.samples = static_cast<int>(r.count("audit", "samples", 41));
    cfg.skip_audit = r.flag("audit", "skip", false);

    if (r.has("mms", "sizes")) {
        cfg.mms.sizes.clear();
        for (double v : r.numbers("mms", "sizes")) {
            if (!(v >= 8.0) || v != std::floor(v)) r.fail("mms", "sizes", "sizes must be integers >= 8");
            cfg.mms.sizes.push_back(static_cast<std::size_t>(v));
        }
    }
    cfg.mms.t_end = r.number("mms", "t_end", cfg.mms.t_end);
    cfg.mms.speed = r.number("mms", "speed", cfg.mms.speed);
    cfg.mms.rho0 = r.number("mms", "rho0", cfg.mms.rho0);
    cfg.mms.rho_amp = r.number("mms", "rho_amp", cfg.mms.rho_amp);
    cfg.mms.u_amp = r.number("mms", "u_amp", cfg.mms.u_amp);
    cfg.mms.mu0 = r.number("mms", "mu0", cfg.mms.mu0);
    cfg.mms.mu_amp = r.number("mms", "mu_amp", cfg.mms.mu_amp);
    return cfg;
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    ConfigDocument doc = ConfigDocument::parse(text);
    for (const auto& o : overrides) doc.apply_override(o);
    return build_config(doc);
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, -1, "cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides);
}

}  // namespace multifluid

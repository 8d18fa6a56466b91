#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "multifluid/cli.hpp"
#include "multifluid/io.hpp"

namespace fs = std::filesystem;
using namespace multifluid;

namespace {

std::string cfg_path(const char* name) { return std::string(MULTIFLUID_CONFIG_DIR) + "/" + name; }

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "multifluid");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("multifluid-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvTable table(const std::string& path) {
    std::ifstream in(path);
    return read_csv(in);
}

// short, coarse smoke run
const std::vector<std::string> kSmall{"--set", "grid.n=32", "--set", "time.t_end=0.2", "--set", "output.interval=0.02"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("usage errors") {
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"frobnicate"}).code == cli::kUsage);
    CHECK(call({"run"}).code == cli::kUsage);
    CHECK(call({"run", "--config", "/nonexistent.cfg"}).code == cli::kUsage);
    const Outcome h = call({"--help"});
    CHECK(h.code == cli::kOk);
    CHECK(h.out.find("check-law") != std::string::npos);
}

TEST_CASE("check-law") {
    TempDir d;
    const Outcome ok = call({"check-law", "--config", cfg_path("smoke.cfg"), "--out", d.path.string()});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.rfind("PASS", 0) == 0);
    CHECK(fs::exists(d / "audit.txt"));
    CHECK(slurp(d / "audit.txt").find("# subcommand=check-law") != std::string::npos);

    const Outcome bad = call({"check-law", "--config", cfg_path("bad_window.cfg"), "--out", d.path.string()});
    CHECK(bad.code == cli::kAdmissibility);
    CHECK(bad.out.find("gamma-window") != std::string::npos);

    const Outcome nuc = call({"check-law", "--config", cfg_path("nuclear.cfg"), "--out", d.path.string()});
    CHECK(nuc.code == cli::kAdmissibility);
    CHECK(nuc.out.find("p-upper-high") != std::string::npos);
}

TEST_CASE("malformed config names key and line") {
    TempDir d;
    std::ofstream(d / "broken.cfg") << "[grid]\nn = 64\nlength = abc\n";
    const Outcome r = call({"check-law", "--config", d / "broken.cfg", "--out", d.path.string()});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.err.find("grid.length") != std::string::npos);

    const Outcome o = call({"run", "--config", cfg_path("smoke.cfg"), "--set", "grid.bogus=1", "--out", d.path.string()});
    CHECK(o.code == cli::kUsage);
    CHECK(o.err.find("override") != std::string::npos);
    CHECK(o.err.find("grid.bogus") != std::string::npos);
}

TEST_CASE("run writes reproducible outputs") {
    TempDir a, b;
    const Outcome r1 = call(with({"run", "--config", cfg_path("smoke.cfg"), "--out", a.path.string()}, kSmall));
    const Outcome r2 = call(with({"run", "--config", cfg_path("smoke.cfg"), "--out", b.path.string()}, kSmall));
    REQUIRE(r1.code == cli::kOk);
    REQUIRE(r2.code == cli::kOk);
    CHECK(r1.out == r2.out);
    for (const char* f : {"diagnostics.csv", "verdicts.txt", "snapshot_0000.csv", "snapshot_0001.csv"}) {
        CAPTURE(f);
        REQUIRE(fs::exists(a / f));
        CHECK(slurp(a / f) == slurp(b / f));
    }
    const std::string diag = slurp(a / "diagnostics.csv");
    CHECK(diag.find("# override=grid.n=32") != std::string::npos);
    CHECK(diag.find("# config_hash=") != std::string::npos);

    const CsvTable t = table(a / "diagnostics.csv");
    REQUIRE(t.rows.size() == 11);
    const int h1 = t.column("H1");
    REQUIRE(h1 >= 0);
    for (std::size_t k = 1; k < t.rows.size(); ++k) CHECK(t.rows[k][h1] <= t.rows[k - 1][h1] + 1e-14);
    CHECK(t.rows.back()[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(slurp(a / "verdicts.txt").find("budget.verdict = PASS") != std::string::npos);
}

TEST_CASE("divergence exits with the failing cell") {
    TempDir d;
    const Outcome r = call({"run", "--config", cfg_path("smoke.cfg"), "--set", "time.cfl=10", "--out", d.path.string()});
    CHECK(r.code == cli::kDiverged);
    CHECK(r.err.find("t=") != std::string::npos);
    CHECK(r.err.find("cell=") != std::string::npos);
    CHECK(r.err.find("field=") != std::string::npos);
}

TEST_CASE("strict turns a failed verdict into an exit code") {
    TempDir d;
    const std::vector<std::string> coarse{"run",           "--config",       cfg_path("tanh.cfg"), "--set",
                                          "grid.n=32",     "--set",          "time.t_end=2",       "--out",
                                          d.path.string()};
    const Outcome loose = call(coarse);
    CHECK(loose.code == cli::kOk);
    CHECK(loose.out.find("FAIL") != std::string::npos);
    CHECK(call(with(coarse, {"--strict"})).code == cli::kVerdict);
}

TEST_CASE("inadmissible law stops run unless skipped") {
    TempDir d;
    const std::vector<std::string> base{"run", "--config", cfg_path("bad_window.cfg"), "--set", "grid.n=32",
                                        "--set", "time.t_end=0.05", "--out", d.path.string()};
    const Outcome r = call(base);
    CHECK(r.code == cli::kAdmissibility);
    CHECK(fs::exists(d / "audit.txt"));
    const Outcome s = call(with(base, {"--skip-audit"}));
    CHECK(s.code == cli::kOk);
    CHECK(slurp(d / "diagnostics.csv").find("audit_bypassed=true") != std::string::npos);
}

TEST_CASE("plot-data") {
    TempDir d;
    REQUIRE(call(with({"run", "--config", cfg_path("smoke.cfg"), "--out", d.path.string()}, kSmall)).code == 0);

    const Outcome h = call({"plot-data", "--input", d / "diagnostics.csv", "--column", "H1"});
    CHECK(h.code == cli::kOk);
    CHECK(h.out.find("t H1\n") != std::string::npos);

    const Outcome s = call({"plot-data", "--input", d / "snapshot_0001.csv", "--column", "rho", "--out", d / "plots"});
    CHECK(s.code == cli::kOk);
    const std::string file = d / "plots/snapshot_0001_rho.dat";
    REQUIRE(fs::exists(file));
    std::size_t lines = 0;
    std::ifstream in(file);
    for (std::string line; std::getline(in, line);) lines += !line.empty() && line[0] != '#';
    CHECK(lines == 33);  // header plus 32 cells

    const Outcome bad = call({"plot-data", "--input", d / "diagnostics.csv", "--column", "entropy"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("mugrad_sup") != std::string::npos);
    CHECK(call({"plot-data", "--input", d / "missing.csv", "--column", "H1"}).code == cli::kUsage);
}

TEST_CASE("compare") {
    TempDir d;
    const Outcome same = call(with({"compare", "--config", cfg_path("smoke.cfg"), "--out", d.path.string()}, kSmall));
    CHECK(same.code == cli::kOk);
    CHECK(same.out.find("IDENTICAL") != std::string::npos);
    CHECK(slurp(d / "stability_verdict.txt").find("verdict = IDENTICAL") != std::string::npos);

    const Outcome pert = call(with(
        {"compare", "--config", cfg_path("smoke.cfg"), "--perturb", "0.01", "--out", d.path.string()}, kSmall));
    CHECK(pert.code == cli::kOk);
    CHECK(pert.out.find("IDENTICAL") == std::string::npos);
    const CsvTable t = table(d / "stability.csv");
    REQUIRE(t.rows.size() == 11);
    CHECK(t.rows.front()[t.column("X")] > 0.0);
}

TEST_CASE("mms") {
    TempDir d;
    const Outcome r = call({"mms", "--config", cfg_path("mms.cfg"), "--set", "mms.sizes=32,64", "--set",
                            "mms.t_end=0.02", "--out", d.path.string()});
    CHECK(r.code == cli::kOk);
    const CsvTable t = table(d / "mms.csv");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1][t.column("err_rho")] < t.rows[0][t.column("err_rho")]);
    CHECK(t.rows[1][t.column("order_rho")] > 1.0);
}

TEST_CASE("output directory from the environment") {
    TempDir d;
    ::setenv("MULTIFLUID_OUTPUT_DIR", d.path.string().c_str(), 1);
    const Outcome r = call({"check-law", "--config", cfg_path("smoke.cfg")});
    ::unsetenv("MULTIFLUID_OUTPUT_DIR");
    CHECK(r.code == cli::kOk);
    CHECK(fs::exists(d / "audit.txt"));
}

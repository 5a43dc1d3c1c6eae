#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "multitime/cli.hpp"

using namespace multitime;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "multitime");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int run_exe(const std::string& args) {
  const std::string cmd = std::string(MULTITIME_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("multitime_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

}  // namespace

TEST_CASE("generate writes one row per sample and kind") {
  const fs::path dir = scratch("generate");
  for (const std::string cls : {"spinless", "photon", "boson"}) {
    const fs::path file = dir / (cls + ".csv");
    const auto r = run_cli({"generate", "--class", cls, "--samples", "64", "--periods", "2",
                            "--out", file.string()});
    REQUIRE(r.code == cli::kPass);
    const std::string csv = slurp(file);
    CHECK(csv.rfind(std::string(cli::kCsvHeader) + "\n", 0) == 0);
    CHECK(count_lines(csv) == 1 + 3 * 64 * 2);
    CHECK(!fs::exists(fs::path(file.string() + ".tmp")));
  }
}

TEST_CASE("world-line CSV round trips bit for bit") {
  const auto set = generate_worldlines(ParticleSpec::boson(1.3, Vector3d(0.2, 0.1, 0.0)), {32, 2});
  const std::string text = cli::worldlines_csv(set);
  const auto lines = cli::parse_worldlines_csv(text);
  REQUIRE(lines.size() == 3);
  for (int k = 0; k < 3; ++k) {
    REQUIRE(lines[k].samples.size() == set.lines[k].samples.size());
    CHECK(lines[k].kind == set.lines[k].kind);
    for (std::size_t j = 0; j < lines[k].samples.size(); ++j) {
      CHECK(lines[k].samples[j].proper_time == set.lines[k].samples[j].proper_time);
      CHECK(lines[k].samples[j].event == set.lines[k].samples[j].event);
    }
  }
  CHECK_THROWS_AS(cli::parse_worldlines_csv("bad header\n"), ConfigurationError);
  CHECK_THROWS_AS(cli::parse_worldlines_csv(std::string(cli::kCsvHeader) + "\nrho,0,0,0,0,0,0,0\n"),
                  ConfigurationError);
  CHECK_THROWS_AS(cli::parse_worldlines_csv(std::string(cli::kCsvHeader) + "\ntau,0,0,0\n"),
                  ConfigurationError);
}

TEST_CASE("format_number is round-trip exact") {
  for (double v : {0.1, kPi, -1e-300, 6.02214076e23, 1.0 / 3.0}) {
    CHECK(std::stod(cli::format_number(v)) == v);
  }
}

TEST_CASE("verify passes on the default suite") {
  const auto r = run_cli({"verify"});
  CHECK(r.code == cli::kPass);
  CHECK(count_lines(r.out) >= static_cast<int>(cli::check_names().size()));
  CHECK(r.out.find(" fail") == std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli({"verify", "--checks", "kg_on_shell", "--inject-offshell", "0.1"}).code ==
        cli::kVerificationFailure);
  CHECK(run_cli({"verify", "--checks", ""}).code == cli::kConfigFailure);
  CHECK(run_cli({"verify", "--checks", "no_such_check"}).code == cli::kConfigFailure);
  CHECK(run_cli({"verify", "--order", "3"}).code == cli::kConfigFailure);
}

TEST_CASE("configuration and I/O failures") {
  CHECK(run_cli({"generate", "--speed", "1.5"}).code == cli::kConfigFailure);
  CHECK(run_cli({"generate", "--class", "tachyon"}).code == cli::kConfigFailure);
  CHECK(run_cli({"launch"}).code == cli::kConfigFailure);
  CHECK(run_cli({"generate", "--out", "/nonexistent-dir/x/worldlines.csv"}).code == cli::kIoFailure);
  CHECK(run_cli({"generate", "--config", "/nonexistent-dir/run.toml"}).code == cli::kIoFailure);
  CHECK(run_cli({"stats", "--experiment", "lottery"}).code == cli::kConfigFailure);
}

TEST_CASE("executable exit codes") {
  const fs::path dir = scratch("exe");
  CHECK(run_exe("generate --out " + (dir / "a.csv").string()) == 0);
  CHECK(run_exe("verify --checks kg_on_shell --inject-offshell 0.1") == 1);
  CHECK(run_exe("generate --out /nonexistent-dir/x/a.csv") == 2);
  CHECK(run_exe("generate --speed 1.5") == 3);
}

TEST_CASE("config file values are read and flags override them") {
  const fs::path dir = scratch("config");
  const fs::path cfg = dir / "run.toml";
  {
    std::ofstream f(cfg);
    f << "# run settings\nclass = \"boson\"\nsamples = 16\nperiods = 1\nout = \""
      << (dir / "from_config.csv").string() << "\"\n";
  }
  auto r = run_cli({"generate", "--config", cfg.string()});
  REQUIRE(r.code == cli::kPass);
  CHECK(r.out.find("class=boson") != std::string::npos);
  CHECK(count_lines(slurp(dir / "from_config.csv")) == 1 + 3 * 16);

  r = run_cli({"generate", "--config", cfg.string(), "--samples", "8"});
  REQUIRE(r.code == cli::kPass);
  CHECK(count_lines(slurp(dir / "from_config.csv")) == 1 + 3 * 8);
}

TEST_CASE("figure fig1 reports the lattice spacings") {
  const fs::path dir = scratch("fig1");
  const std::string base = (dir / "fig1").string();
  const auto r = run_cli({"figure", "fig1", "--mass", "1", "--mass-kind", "relativistic", "--speed",
                          "0.5", "--out", base});
  REQUIRE(r.code == cli::kPass);
  CHECK(r.out.find("dx=" + cli::format_number(4.0 * kPi)) != std::string::npos);
  CHECK(r.out.find("dt=" + cli::format_number(2.0 * kPi)) != std::string::npos);
  CHECK(fs::exists(base + ".csv"));
  CHECK(fs::exists(base + ".svg"));
  CHECK(fs::exists(base + "_lattice.csv"));
  CHECK(run_cli({"figure", "fig1", "--speed", "0", "--out", base}).code == cli::kConfigFailure);
  CHECK(run_cli({"figure", "fig9", "--out", base}).code == cli::kConfigFailure);
}

TEST_CASE("figures are byte-identical across runs") {
  const fs::path dir = scratch("determinism");
  for (const std::string fig : {"fig1", "fig2", "fig3"}) {
    const std::string a = (dir / (fig + "_a")).string();
    const std::string b = (dir / (fig + "_b")).string();
    const std::string cls = fig == "fig2" ? "fermion" : "boson";
    REQUIRE(run_cli({"figure", fig, "--class", cls, "--out", a}).code == cli::kPass);
    REQUIRE(run_cli({"figure", fig, "--class", cls, "--out", b}).code == cli::kPass);
    CHECK(slurp(a + ".svg") == slurp(b + ".svg"));
    CHECK(slurp(a + ".csv") == slurp(b + ".csv"));
    CHECK(slurp(a + ".svg").rfind("<svg", 0) == 0);
  }
}

TEST_CASE("stats output") {
  const fs::path dir = scratch("stats");
  auto r = run_cli({"stats", "--class", "fermion", "--out", (dir / "f.csv").string()});
  REQUIRE(r.code == cli::kPass);
  CHECK(r.out.find("placed=2 capacity_reached=true") != std::string::npos);
  CHECK(r.out.find("intersections=0") != std::string::npos);
  CHECK(slurp(dir / "f.csv").rfind("i,j,distance\n", 0) == 0);

  r = run_cli({"stats", "--class", "boson", "--count", "100", "--out", (dir / "b.csv").string()});
  REQUIRE(r.code == cli::kPass);
  CHECK(r.out.find("placed=100") != std::string::npos);
  CHECK(r.out.find("intersections=0") != std::string::npos);
  CHECK(count_lines(slurp(dir / "b.csv")) == 1 + 100 * 99 / 2);

  r = run_cli({"stats", "--experiment", "measurement", "--trials", "1000", "--out",
               (dir / "m.csv").string()});
  REQUIRE(r.code == cli::kPass);
  CHECK(r.out.find("model_probability=") != std::string::npos);
  CHECK(count_lines(slurp(dir / "m.csv")) == 1 + 8);
}

TEST_CASE("svg renderer is deterministic and fixed-size") {
  cli::Panel p{"t", "x", "y", {{{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1)}, "red"}}, {}};
  const std::string a = cli::render_svg({p});
  CHECK(a == cli::render_svg({p}));
  CHECK(a.find("viewBox=\"0 0 400.00 400.00\"") != std::string::npos);
  CHECK(cli::render_svg({p, p}).find("viewBox=\"0 0 800.00 400.00\"") != std::string::npos);
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "multitime/residuals.hpp"
#include "multitime/statistics.hpp"
#include "multitime/worldlines.hpp"

namespace multitime::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kIoFailure = 2, kConfigFailure = 3 };

/// Output file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Everything one invocation needs.
struct RunConfig {
  std::string command;
  std::string figure;  // fig1 | fig2 | fig3
  std::string particle = "spinless";
  double mass = 1.0;
  std::string mass_kind = "rest";  // rest | relativistic
  double speed = 0.5;
  double wave_number = 1.0;
  std::string orientation = "up";
  int samples = 256;
  int periods = 1;
  double step = 1e-3;
  int order = 4;
  std::uint64_t seed = 1;
  std::string out;
  std::string checks = "all";
  double inject_offshell = 0.0;
  int count = 100;
  std::uint64_t trials = 100000;
  double window = kPi / 8.0;
  std::string experiment;  // fermion | boson | measurement; chosen from the class when empty
  int positions = 8;
  double offset = 0.0;  // packing offset fraction; 0 picks the command default

  /// Throws ConfigurationError on inconsistent values.
  void validate() const;
  /// Particle spec with the velocity along x1 (x3 for the photon).
  ParticleSpec particle_spec() const;
  SampleGrid grid() const { return {samples, periods}; }
};

/// Parses argv and runs the command. Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// --- serialization -------------------------------------------------------

/// %.17g, round-trip exact for doubles.
std::string format_number(double v);

inline constexpr const char* kCsvHeader = "kind,proper_time,x0,x1,x2,x3,x4,x5";

std::string worldlines_csv(const WorldlineSet& set);
/// Inverse of worldlines_csv; throws ConfigurationError on malformed input.
std::vector<Worldline> parse_worldlines_csv(const std::string& text);

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// --- verification suite -------------------------------------------------

/// Names accepted by --checks, in execution order.
const std::vector<std::string>& check_names();

/// Runs the named checks ("all" expands to every check).
std::vector<ResidualReport> run_checks(const RunConfig& config,
                                       const std::vector<std::string>& names);

/// "name value tolerance verdict".
std::string format_report(const ResidualReport& r);

// --- figures --------------------------------------------------------------

struct Polyline {
  std::vector<Eigen::Vector2d> points;
  std::string color;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Polyline> lines;
  std::vector<Eigen::Vector2d> markers;
};

/// Deterministic SVG with a fixed viewBox, one panel per column.
std::string render_svg(const std::vector<Panel>& panels);

}  // namespace multitime::cli

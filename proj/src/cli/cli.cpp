#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "multitime/cli.hpp"

namespace multitime::cli {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string s;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) s += ',';
    s += c;
    first = false;
  }
  s += '\n';
  return s;
}

std::string out_or(const RunConfig& c, const std::string& fallback) {
  return c.out.empty() ? fallback : c.out;
}

const char* kind_color(ProperTimeKind k) {
  switch (k) {
    case ProperTimeKind::tau:
      return "#1f77b4";
    case ProperTimeKind::sigma:
      return "#d62728";
    case ProperTimeKind::phi:
      return "#2ca02c";
  }
  return "black";
}

// --- generate ---------------------------------------------------------------

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const ParticleSpec spec = c.particle_spec();
  const WorldlineSet set = generate_worldlines(spec, c.grid());
  const std::string path = out_or(c, "worldlines.csv");
  write_file_atomic(path, worldlines_csv(set));
  out << "class=" << to_string(spec.cls) << " rows=" << set.size() << " file=" << path << '\n';
  out << "period=" << format_number(set.period) << '\n';
  out << "wavelength=" << format_number(set.wavelength) << '\n';
  if (spec.massive() && spec.cls != ParticleClass::fermion && spec.speed() > 0.0) {
    const auto lattice = debroglie_lattice(spec, 1);
    out << "lattice_dx=" << format_number(lattice.spec.dx) << '\n';
    out << "lattice_dt=" << format_number(lattice.spec.dt) << '\n';
  }
  return kPass;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto reports = run_checks(c, split_list(c.checks));
  bool all = true;
  for (const auto& r : reports) {
    out << format_report(r) << '\n';
    all = all && r.pass;
  }
  return all ? kPass : kVerificationFailure;
}

// --- stats ------------------------------------------------------------------

std::string occupancy_csv(const OccupancyResult& r) {
  std::string s = "i,j,distance\n";
  for (const auto& d : r.distances) {
    s += csv_row({std::to_string(d.i), std::to_string(d.j), format_number(d.distance)});
  }
  return s;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
  const ParticleSpec spec = c.particle_spec();
  std::string experiment = c.experiment;
  if (experiment.empty()) experiment = spec.cls == ParticleClass::fermion ? "fermion" : "boson";
  const std::string path = out_or(c, "stats.csv");

  if (experiment == "fermion") {
    const auto r = fermion_capacity(Cell::compton(spec.m0), spec);
    out << "placed=" << r.placed << " capacity_reached=" << (r.capacity_reached ? "true" : "false")
        << '\n';
    out << "intersections=" << r.intersections.size() << '\n';
    out << "third_attempts=" << r.third_attempts
        << " third_intersections=" << r.third_intersections << '\n';
    write_file_atomic(path, occupancy_csv(r));
    return kPass;
  }
  if (experiment == "boson") {
    PackingOptions opts;
    if (c.offset > 0.0) opts.offset_fraction = c.offset;
    const Cell cell = Cell::compton(spec.m0);
    const auto r = boson_packing(c.count, cell, spec, opts);
    out << "placed=" << r.placed << " capacity_reached=" << (r.capacity_reached ? "true" : "false")
        << '\n';
    out << "intersections=" << r.intersections.size() << '\n';
    if (const auto d = r.min_distance()) {
      out << "min_distance=" << format_number(*d)
          << " offset=" << format_number(opts.offset_fraction * cell.side) << '\n';
    }
    write_file_atomic(path, occupancy_csv(r));
    return kPass;
  }
  if (experiment == "measurement") {
    MeasurementOptions opts;
    opts.trials = c.trials;
    opts.window = c.window;
    opts.seed = c.seed;
    opts.positions = c.positions;
    const auto r = measurement_mc(spec, opts);
    out << "trials=" << r.trials << " window=" << format_number(r.window)
        << " model_probability=" << format_number(r.model_probability) << '\n';
    std::string s = "position,t,x,detections,frequency\n";
    for (std::size_t j = 0; j < r.positions.size(); ++j) {
      out << "position " << j << " x=" << format_number(r.positions[j].x)
          << " frequency=" << format_number(r.frequency[j]) << '\n';
      s += csv_row({std::to_string(j), format_number(r.positions[j].t),
                    format_number(r.positions[j].x), std::to_string(r.detections[j]),
                    format_number(r.frequency[j])});
    }
    out << "total_rate=" << format_number(r.total_rate) << '\n';
    write_file_atomic(path, s);
    return kPass;
  }
  throw ConfigurationError("unknown experiment '" + experiment + "'");
}

// --- figure -----------------------------------------------------------------

void write_figure(const std::string& base, const std::string& csv,
                  const std::vector<Panel>& panels) {
  write_file_atomic(base + ".csv", csv);
  write_file_atomic(base + ".svg", render_svg(panels));
}

int figure1(const RunConfig& c, std::ostream& out) {
  const ParticleSpec spec = c.particle_spec();
  const int n = std::max(2, c.positions);
  const auto lattice = debroglie_lattice(spec, n);
  const double u = spec.speed();
  const double dx = lattice.spec.dx;
  const double dt = lattice.spec.dt;
  const double T = n * dt;
  const std::string base = out_or(c, "fig1");

  // τ lines x = u t + j dx and σ lines x = (t - j dt)/u, clipped to |t| <= T
  std::string csv = "family,line,t,x\n";
  Panel panel{"de Broglie lattice", "x1", "x0", {}, {}};
  for (int j = 0; j < n; ++j) {
    const Eigen::Vector2d a(-T, u * -T + j * dx);
    const Eigen::Vector2d b(T, u * T + j * dx);
    csv += csv_row({"tau", std::to_string(j), format_number(a[0]), format_number(a[1])});
    csv += csv_row({"tau", std::to_string(j), format_number(b[0]), format_number(b[1])});
    panel.lines.push_back({{{a[1], a[0]}, {b[1], b[0]}}, kind_color(ProperTimeKind::tau)});
  }
  for (int j = 0; j < n; ++j) {
    // keep the steep σ lines inside the same x range as the τ lines
    const double x_hi = u * T + n * dx;
    const double t_lo = std::max(-T, -x_hi * u + j * dt);
    const double t_hi = std::min(T, x_hi * u + j * dt);
    const Eigen::Vector2d a(t_lo, (t_lo - j * dt) / u);
    const Eigen::Vector2d b(t_hi, (t_hi - j * dt) / u);
    csv += csv_row({"sigma", std::to_string(j), format_number(a[0]), format_number(a[1])});
    csv += csv_row({"sigma", std::to_string(j), format_number(b[0]), format_number(b[1])});
    panel.lines.push_back({{{a[1], a[0]}, {b[1], b[0]}}, kind_color(ProperTimeKind::sigma)});
  }

  std::string lat = "axis,j,t,x\n";
  for (int j = 0; j < n; ++j) {
    const auto& p = lattice.positions[j];
    lat += csv_row({"x", std::to_string(j), format_number(p.t), format_number(p.x)});
    panel.markers.push_back({p.x, p.t});
  }
  for (int j = 0; j < n; ++j) {
    const auto& p = lattice.times[j];
    lat += csv_row({"t", std::to_string(j), format_number(p.t), format_number(p.x)});
    panel.markers.push_back({p.x, p.t});
  }
  write_figure(base, csv, {panel});
  write_file_atomic(base + "_lattice.csv", lat);
  out << "dx=" << format_number(dx) << " dt=" << format_number(dt) << '\n';
  out << "files=" << base << ".csv," << base << ".svg," << base << "_lattice.csv\n";
  return kPass;
}

int figure2(const RunConfig& c, std::ostream& out) {
  RunConfig fc = c;
  fc.particle = "fermion";
  const ParticleSpec spec = fc.particle_spec();
  const WorldlineSet set = fermion_worldlines(spec, c.grid());
  const std::string base = out_or(c, "fig2");

  // (x0, x3, xs) with s = x1; τ is drawn against x5 in its own panel
  std::string csv = "kind,proper_time,x0,x3,xs\n";
  Panel space{"sigma and phi", "xs", "x3", {}, {}};
  Panel time{"tau", "x0", "x5", {}, {}};
  for (const auto& line : set.lines) {
    Polyline poly{{}, kind_color(line.kind)};
    for (const auto& s : line.samples) {
      const auto& e = s.event;
      csv += csv_row({to_string(line.kind), format_number(s.proper_time), format_number(e[0]),
                      format_number(e[3]), format_number(e[1])});
      if (line.kind == ProperTimeKind::tau) {
        poly.points.emplace_back(e[0], e[5]);
      } else if (line.kind == ProperTimeKind::sigma) {
        poly.points.emplace_back(e[1], e[2]);
      } else {
        poly.points.emplace_back(e[1], e[3]);
      }
    }
    (line.kind == ProperTimeKind::tau ? time : space).lines.push_back(poly);
  }
  write_figure(base, csv, {space, time});
  out << "radius=" << format_number(fermion_radius(spec.m0)) << '\n';
  out << "files=" << base << ".csv," << base << ".svg\n";
  return kPass;
}

int figure3(const RunConfig& c, std::ostream& out) {
  RunConfig bc = c;
  if (bc.particle != "spinless") bc.particle = "boson";
  const ParticleSpec spec = bc.particle_spec();
  PackingOptions opts;
  opts.offset_fraction = c.offset > 0.0 ? c.offset : 0.05;
  opts.grid = {std::max(4, c.samples / 8), c.periods};
  const Cell cell = Cell::compton(spec.m0);
  const auto families = boson_packing_families(2, cell, spec, opts);
  const auto result = pack_worldline_families(families, cell.tolerance);
  const std::string base = out_or(c, "fig3");

  std::string csv = "particle,kind,proper_time,x0,x1,x2,x3,x4,x5\n";
  std::vector<Panel> panels{{"tau", "x3", "x0", {}, {}},
                            {"sigma", "x3", "x4", {}, {}},
                            {"phi", "x3", "x5", {}, {}}};
  const Vector3d along = spec.direction();
  for (std::size_t k = 0; k < families.size(); ++k) {
    for (const auto& line : families[k].lines) {
      const int axis = line.kind == ProperTimeKind::tau ? 0 : (line.kind == ProperTimeKind::sigma ? 4 : 5);
      Polyline poly{{}, kind_color(line.kind)};
      for (const auto& s : line.samples) {
        const auto& e = s.event;
        csv += std::to_string(k) + "," +
               csv_row({to_string(line.kind), format_number(s.proper_time), format_number(e[0]),
                        format_number(e[1]), format_number(e[2]), format_number(e[3]),
                        format_number(e[4]), format_number(e[5])});
        poly.points.emplace_back((e.spatial() - cell.center()).dot(along), e[axis]);
      }
      panels[static_cast<int>(line.kind)].lines.push_back(poly);
    }
  }
  std::string dist = "i,j,distance\n";
  for (const auto& d : result.distances) {
    dist += csv_row({std::to_string(d.i), std::to_string(d.j), format_number(d.distance)});
  }
  write_figure(base, csv, panels);
  write_file_atomic(base + "_distances.csv", dist);
  out << "intersections=" << result.intersections.size() << '\n';
  out << "files=" << base << ".csv," << base << ".svg," << base << "_distances.csv\n";
  return kPass;
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
  if (c.figure == "fig1") return figure1(c, out);
  if (c.figure == "fig2") return figure2(c, out);
  if (c.figure == "fig3") return figure3(c, out);
  throw ConfigurationError("figure must be fig1, fig2 or fig3");
}

}  // namespace

void RunConfig::validate() const {
  if (!(mass > 0.0)) throw ConfigurationError("--mass must be positive");
  if (!(speed >= 0.0) || speed >= 1.0) throw ConfigurationError("--speed must lie in [0, 1)");
  if (samples < 4) throw ConfigurationError("--samples must be at least 4");
  if (periods < 1) throw ConfigurationError("--periods must be positive");
  if (!(step > 0.0)) throw ConfigurationError("--step must be positive");
  if (order != 2 && order != 4) throw ConfigurationError("--order must be 2 or 4");
  if (count < 0) throw ConfigurationError("--count must be non-negative");
  if (positions < 1) throw ConfigurationError("--positions must be positive");
  if (offset < 0.0) throw ConfigurationError("--offset must be positive");
  if (mass_kind != "rest" && mass_kind != "relativistic") {
    throw ConfigurationError("--mass-kind must be rest or relativistic");
  }
  if (orientation != "up" && orientation != "down") {
    throw ConfigurationError("--orientation must be up or down");
  }
}

ParticleSpec RunConfig::particle_spec() const {
  const Vector3d u(speed, 0.0, 0.0);
  // relativistic mass m = γ m0 given directly
  const double m0 = mass_kind == "relativistic" ? mass / gamma_factor(speed) : mass;
  if (particle == "spinless") return ParticleSpec::spinless(m0, u);
  if (particle == "boson") return ParticleSpec::boson(m0, u);
  if (particle == "photon") return ParticleSpec::photon(wave_number);
  if (particle == "fermion") {
    return ParticleSpec::fermion(
        m0, u, orientation == "down" ? SpinOrientation::down : SpinOrientation::up);
  }
  throw ConfigurationError("unknown particle class '" + particle + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Three-proper-time world-line models and their numerical checks", "multitime"};
  app.set_config("--config", "", "key=value file; flags given on the command line win");
  app.add_option("command", c.command, "generate | verify | stats | figure")
      ->required()
      ->check(CLI::IsMember({"generate", "verify", "stats", "figure"}));
  app.add_option("figure", c.figure, "fig1 | fig2 | fig3 (figure only)");
  app.add_option("--class", c.particle, "spinless | photon | boson | fermion")
      ->check(CLI::IsMember({"spinless", "photon", "boson", "fermion"}));
  app.add_option("--mass", c.mass, "rest mass m0 (natural units)");
  app.add_option("--mass-kind", c.mass_kind, "rest | relativistic: how --mass is read");
  app.add_option("--speed", c.speed, "speed along x1 in units of c");
  app.add_option("--wave-number", c.wave_number, "photon wave number");
  app.add_option("--orientation", c.orientation, "fermion spin orientation, up | down");
  app.add_option("--samples", c.samples, "samples per period");
  app.add_option("--periods", c.periods, "sampled periods");
  app.add_option("--step", c.step, "finite-difference step");
  app.add_option("--order", c.order, "stencil order, 2 or 4");
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--out", c.out, "output file (generate, stats) or base name (figure)");
  app.add_option("--checks", c.checks, "comma-separated check names, or all");
  app.add_option("--inject-offshell", c.inject_offshell,
                 "add this δ to E² in the on-shell Klein-Gordon check");
  app.add_option("--count", c.count, "boson copies to pack");
  app.add_option("--trials", c.trials, "Monte Carlo trials per position");
  app.add_option("--window", c.window, "coincidence window in radians");
  app.add_option("--experiment", c.experiment, "fermion | boson | measurement");
  app.add_option("--positions", c.positions, "lattice positions");
  app.add_option("--offset", c.offset, "packing offset as a fraction of the cell side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigFailure;
  }

  try {
    c.validate();
    if (c.command != "figure" && !c.figure.empty()) {
      throw ConfigurationError("unexpected argument '" + c.figure + "'");
    }
    if (c.command == "generate") return cmd_generate(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "stats") return cmd_stats(c, out);
    return cmd_figure(c, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigFailure;
  }
}

}  // namespace multitime::cli

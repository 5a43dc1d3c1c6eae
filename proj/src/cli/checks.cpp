#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "multitime/cli.hpp"
#include "multitime/curvature.hpp"
#include "multitime/fields.hpp"

namespace multitime::cli {

namespace {

using Check = std::function<ResidualReport(const RunConfig&)>;

CurvatureProbe probe_at(const RunConfig& c, const Event6& e) { return {e, c.step, c.order}; }

const Event6 kProbeEvent(0.3, 0.2, -0.1, 0.4, 0.0, 0.25);

double rest_mass(const RunConfig& c) {
  return c.particle == "photon" ? 1.0 : c.particle_spec().m0;
}

ScalarWave wave_for(const RunConfig& c, double delta) {
  ScalarWave w = ScalarWave::on_shell(rest_mass(c), Vector3d(c.speed, 0.0, 0.0));
  w.p[0] = std::sqrt(w.p[0] * w.p[0] + delta);
  return w;
}

ResidualReport kg_on_shell(const RunConfig& c) {
  auto r = kg_residual(wave_for(c, c.inject_offshell), probe_at(c, kProbeEvent), 1e-6);
  r.name = "kg_on_shell";
  return r;
}

ResidualReport kg_off_shell(const RunConfig& c) {
  constexpr double delta = 0.1;
  const ScalarWave w = wave_for(c, delta);
  const auto r = kg_residual(w, probe_at(c, kProbeEvent), 0.0);
  const double expected = delta * std::abs(scalar_psi(w, kProbeEvent));
  return ResidualReport::make("kg_off_shell", std::abs(r.value - expected) / expected, 0.05,
                              r.context + " delta=0.1 (relative deviation from delta|psi|)");
}

ResidualReport kg_order(const RunConfig& c) {
  const ScalarWave w = wave_for(c, 0.0);
  const double coarse = kg_residual(w, {kProbeEvent, 0.2, c.order}).value;
  const double fine = kg_residual(w, {kProbeEvent, 0.1, c.order}).value;
  const double measured = std::log2(coarse / fine);
  std::ostringstream os;
  os << "steps=0.2,0.1 measured_order=" << format_number(measured) << " order=" << c.order;
  return ResidualReport::make("kg_convergence_order", std::abs(measured - c.order), 0.5, os.str());
}

ResidualReport maxwell(const RunConfig& c) {
  ProcaWave w;
  w.polarization << 0.0, 1.0, 0.0, 0.0;
  w.p << 1.0, 0.0, 0.0, 1.0;
  w.m0 = 0.0;
  auto r = proca_residual(w, probe_at(c, kProbeEvent), 1e-6).report;
  r.name = "maxwell_transverse";
  return r;
}

ResidualReport proca_massive(const RunConfig& c) {
  const double m = rest_mass(c);
  const double p3 = 0.75;
  const double E = std::sqrt(p3 * p3 + m * m);
  ProcaWave w;
  w.p << E, 0.0, 0.0, p3;
  w.m0 = m;
  // Lorenz gauge: longitudinal polarization with k·ε = 0
  w.polarization << p3, 0.0, 0.0, -E;
  auto r = proca_residual(w, probe_at(c, kProbeEvent), 1e-6).report;
  r.name = "proca_massive_lorenz";
  return r;
}

ResidualReport proca_broken(const RunConfig& c) {
  ProcaWave w;
  w.polarization << 0.0, 0.0, 0.0, 1.0;
  w.p << 1.0, 0.0, 0.0, 1.0;
  w.m0 = 0.0;
  const auto r = proca_residual(w, probe_at(c, kProbeEvent), 0.0).report;
  // the check passes when the residual exceeds 0.1
  return ResidualReport::make("proca_broken_detected", 0.1 / r.value, 1.0,
                              r.context + " residual=" + format_number(r.value) +
                                  " (value is 0.1/residual)");
}

ResidualReport coulomb_at(const RunConfig& c, double radius) {
  const Vector3d x = radius * Vector3d(1.0, 1.0, 1.0).normalized();
  auto r = coulomb_check(1.0, probe_at(c, Event6(0.0, x[0], x[1], x[2])), 1e-5);
  std::ostringstream os;
  os << "coulomb_r" << radius;
  r.name = os.str();
  return r;
}

Vector6d random_displacement(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Vector6d v;
  for (int i = 0; i < 6; ++i) v[i] = d(rng);
  return v;
}

ResidualReport interval_vector(const RunConfig& c) {
  const auto metric = vector_metric<double>([](const Event6& e) {
    return Vector4d(0.3 * std::sin(e[1]), 0.2 * std::cos(e[0]), 0.1 * e[2], 0.4);
  });
  std::mt19937_64 rng(c.seed);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vector6d at = random_displacement(rng);
    const Vector6d dx = random_displacement(rng);
    const Event6 e(at);
    worst = std::max(worst, std::abs(interval(metric, dx, e) - local_flat_interval(metric, dx, e)));
  }
  return ResidualReport::make("interval_vector", worst, 1e-12, "100 random displacements");
}

ResidualReport interval_fermion(const RunConfig& c) {
  SpinorOptions opts;
  opts.extended_normal = true;
  const auto metric =
      fermion_metric_for(ParticleSpec::fermion(rest_mass(c), Vector3d(0.3, 0.2, 0.1)), opts);
  std::mt19937_64 rng(c.seed + 1);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Event6 e(random_displacement(rng));
    const Vector6<Complex> dx = random_displacement(rng).cast<Complex>();
    worst = std::max(worst, std::abs(interval(metric, dx, e) - local_flat_interval(metric, dx, e)));
  }
  return ResidualReport::make("interval_fermion", worst, 1e-12, "100 random displacements");
}

ResidualReport ladder(const RunConfig& c, ParticleClass cls) {
  const double m = rest_mass(c);
  const Vector3d u(c.speed, 0.0, 0.0);
  ParticleSpec spec =
      cls == ParticleClass::boson ? ParticleSpec::boson(m, u) : ParticleSpec::spinless(m, u);
  std::mt19937_64 rng(c.seed + 2);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = d(rng);
    const Vector3d x(d(rng), d(rng), d(rng));
    const double direct =
        cls == ParticleClass::boson ? boson_value(spec, t, x) : spinless_moving_sigma(t, x, spec);
    worst = std::max(worst, std::abs(ladder_recompose(ladder_decompose(spec, t), spec, x) - direct));
  }
  return ResidualReport::make(
      cls == ParticleClass::boson ? "ladder_boson" : "ladder_spinless", worst, 1e-12,
      "100 random events");
}

Vector3d random_velocity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  while (true) {
    Vector3d u(d(rng), d(rng), d(rng));
    if (u.norm() < 0.95 && std::abs(u[2]) > 0.05) return u;
  }
}

ResidualReport dirac_ratio(const RunConfig& c) {
  std::mt19937_64 rng(c.seed + 3);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto spec = ParticleSpec::fermion(rest_mass(c), random_velocity(rng));
    const auto d = dirac_components(spec, kProbeEvent);
    const Vector3d p = spec.momentum();
    const Complex expected = Complex(p[0], p[1]) / p[2];
    worst = std::max(worst, std::abs(d.psi1 / d.psi2 - expected) / std::abs(expected));
  }
  return ResidualReport::make("dirac_ratio", worst, 1e-12, "100 random velocities, relative");
}

ResidualReport dirac_norm(const RunConfig& c) {
  std::mt19937_64 rng(c.seed + 4);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto spec = ParticleSpec::fermion(rest_mass(c), random_velocity(rng));
    const auto d = dirac_components(spec, kProbeEvent);
    worst = std::max(worst, std::abs(d.norm_without_constant() - spec.energy() / spec.m0));
  }
  return ResidualReport::make("dirac_norm", worst, 1e-12, "100 random velocities");
}

ResidualReport boost_consistency(const RunConfig& c) {
  const double m = rest_mass(c);
  double worst = 0.0;
  for (double u : {0.1, 0.5, 0.9}) {
    const auto spec = ParticleSpec::spinless(m, Vector3d(u, 0.0, 0.0));
    for (int j = 0; j < 1000; ++j) {
      const double xi = kTwoPi / m * j / 1000.0;
      const Event6 rest = spinless_sigma_anchor(xi, m);
      const Event6 lab = boost(rest, Vector3d(-u, 0.0, 0.0));
      worst = std::max(worst,
                       std::abs(spinless_moving_sigma(lab.time(), lab.spatial(), spec) - rest.x4()));
    }
  }
  return ResidualReport::make("boost_consistency", worst, 1e-10, "u=0.1,0.5,0.9 x 1000 samples");
}

ResidualReport lattice_geometry(const RunConfig& c) {
  const double m0 = rest_mass(c);
  const double u = c.speed > 0.0 ? c.speed : 0.5;
  const auto spec = ParticleSpec::spinless(m0, Vector3d(u, 0.0, 0.0));
  const auto lattice = debroglie_lattice(spec, 6);
  const double g = gamma_factor(u);
  double worst = 0.0;
  std::vector<double> xs;
  std::vector<double> ts;
  for (int k = 0; k < 6; ++k) {
    // phase points on the τ line x = u t, then the σ line of slope 1/u
    const double tk = kTwoPi * g * k / m0;
    const Eigen::Vector2d through(tk, u * tk);
    const Eigen::Vector2d dir(u, 1.0);
    Eigen::Matrix2d a;
    a << dir[0], 0.0, dir[1], -1.0;  // through + s dir = (0, x)
    xs.push_back(a.colPivHouseholderQr().solve(-through)[1]);
    a << dir[0], -1.0, dir[1], 0.0;  // through + s dir = (t, 0)
    ts.push_back(a.colPivHouseholderQr().solve(-through)[1]);
  }
  for (int k = 1; k < 6; ++k) {
    worst = std::max(worst, std::abs(std::abs(xs[k] - xs[k - 1]) - lattice.spec.dx));
    worst = std::max(worst, std::abs(std::abs(ts[k] - ts[k - 1]) - lattice.spec.dt));
  }
  std::ostringstream os;
  os << "dx=" << format_number(lattice.spec.dx) << " dt=" << format_number(lattice.spec.dt);
  return ResidualReport::make("debroglie_lattice", worst, 1e-9, os.str());
}

ResidualReport curvature_flat(const RunConfig& c) {
  const auto flat = scalar_metric<double>([](const Event6&) { return 1.0; });
  double worst = 0.0;
  for (const Event6& e : {kProbeEvent, Event6(1.0, -2.0, 0.5, 3.0, 0.7, -1.0)}) {
    const auto r = einstein_tensor(flat, {e, c.step, c.order}, false);
    worst = std::max(worst, r.einstein.cwiseAbs().maxCoeff());
  }
  return ResidualReport::make("einstein_flat", worst, 1e-8, "two probes");
}

Metric6<double> product_sphere() {
  return custom_metric<double>([](const Event6& e) {
    Matrix6<double> g = Matrix6<double>::Zero();
    g.topLeftCorner<4, 4>() = minkowski<double>();
    g(4, 4) = 1.0;
    const double s = std::sin(e.x4());
    g(5, 5) = s * s;
    return g;
  });
}

ResidualReport curvature_sphere(const RunConfig& c) {
  const auto m = product_sphere();
  const Event6 e(0.0, 0.0, 0.0, 0.0, 1.0, 0.3);
  const auto r = einstein_tensor(m, {e, c.step, c.order}, false);
  Matrix6<double> expected = Matrix6<double>::Zero();
  expected(4, 4) = 1.0;
  expected(5, 5) = std::pow(std::sin(1.0), 2);
  return ResidualReport::make("ricci_product_sphere", (r.ricci - expected).cwiseAbs().maxCoeff(),
                              1e-5, "x4=1");
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"kg_on_shell", kg_on_shell},
      {"kg_off_shell", kg_off_shell},
      {"kg_convergence_order", kg_order},
      {"maxwell_transverse", maxwell},
      {"proca_massive_lorenz", proca_massive},
      {"proca_broken_detected", proca_broken},
      {"coulomb_r0.5", [](const RunConfig& c) { return coulomb_at(c, 0.5); }},
      {"coulomb_r1", [](const RunConfig& c) { return coulomb_at(c, 1.0); }},
      {"coulomb_r2", [](const RunConfig& c) { return coulomb_at(c, 2.0); }},
      {"interval_vector", interval_vector},
      {"interval_fermion", interval_fermion},
      {"ladder_spinless", [](const RunConfig& c) { return ladder(c, ParticleClass::spinless); }},
      {"ladder_boson", [](const RunConfig& c) { return ladder(c, ParticleClass::boson); }},
      {"dirac_ratio", dirac_ratio},
      {"dirac_norm", dirac_norm},
      {"boost_consistency", boost_consistency},
      {"debroglie_lattice", lattice_geometry},
      {"einstein_flat", curvature_flat},
      {"ricci_product_sphere", curvature_sphere},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<ResidualReport> run_checks(const RunConfig& config,
                                       const std::vector<std::string>& names) {
  if (names.empty()) throw ConfigurationError("no checks selected");
  std::vector<std::string> selected;
  for (const auto& n : names) {
    if (n == "all") {
      selected = check_names();
      break;
    }
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end()) {
      throw ConfigurationError("unknown check '" + n + "'");
    }
    selected.push_back(n);
  }
  std::vector<ResidualReport> out;
  for (const auto& n : selected) {
    for (const auto& [name, fn] : registry()) {
      if (name == n) out.push_back(fn(config));
    }
  }
  return out;
}

std::string format_report(const ResidualReport& r) {
  return r.name + " " + format_number(r.value) + " " + format_number(r.tolerance) + " " +
         (r.pass ? "pass" : "fail");
}

}  // namespace multitime::cli

#include "multitime/worldlines.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <string>

namespace multitime {

namespace {

// Lab frame in which the particle moves with velocity u.
Event6 to_lab(const Event6& rest, const Vector3d& u) {
  if (u.isZero(0.0)) return rest;
  return boost(rest, Vector3d(-u));
}

// arccos(cos θ) on the principal branch, computed without the round trip.
double principal_angle(double reduced) { return reduced <= kPi ? reduced : kTwoPi - reduced; }

void require_class(const ParticleSpec& spec, ParticleClass cls, const char* op) {
  if (spec.cls != cls) {
    throw ConfigurationError(std::string(op) + ": particle class must be " + to_string(cls));
  }
  spec.validate();
}

void set_de_broglie_metadata(WorldlineSet& set, const ParticleSpec& spec) {
  set.period = kTwoPi / spec.energy();
  const double p = spec.momentum().norm();
  set.wavelength = p > 0.0 ? kTwoPi / p : kTwoPi / spec.m0;
}

}  // namespace

const char* to_string(ParticleClass cls) {
  switch (cls) {
    case ParticleClass::spinless:
      return "spinless";
    case ParticleClass::photon:
      return "photon";
    case ParticleClass::boson:
      return "boson";
    case ParticleClass::fermion:
      return "fermion";
  }
  return "?";
}

const char* to_string(SpinOrientation orientation) {
  return orientation == SpinOrientation::up ? "+x3" : "-x3";
}

ParticleSpec ParticleSpec::spinless(double m0, const Vector3d& u) {
  ParticleSpec s;
  s.cls = ParticleClass::spinless;
  s.m0 = m0;
  s.u = u;
  s.validate();
  return s;
}

ParticleSpec ParticleSpec::photon(double wave_number) {
  ParticleSpec s;
  s.cls = ParticleClass::photon;
  s.m0 = 0.0;
  s.u = Vector3d::UnitZ();
  s.wave_number = wave_number;
  s.validate();
  return s;
}

ParticleSpec ParticleSpec::boson(double m0, const Vector3d& u) {
  ParticleSpec s = spinless(m0, u);
  s.cls = ParticleClass::boson;
  return s;
}

ParticleSpec ParticleSpec::fermion(double m0, const Vector3d& u, SpinOrientation orientation) {
  ParticleSpec s = spinless(m0, u);
  s.cls = ParticleClass::fermion;
  s.orientation = orientation;
  return s;
}

void ParticleSpec::validate() const {
  if (!u.allFinite()) throw InvalidVelocity("velocity must be finite");
  for (double scale : {lambda_E0, lambda_B0, lambda_V10, lambda_V20}) {
    if (!(scale > 0.0)) throw ConfigurationError("lambda scale factors must be positive");
  }
  if (cls == ParticleClass::photon) {
    if (m0 != 0.0) throw ConfigurationError("photon rest mass must be exactly 0");
    if (!(wave_number != 0.0) || !std::isfinite(wave_number)) {
      throw DegenerateWave("photon wave number must be nonzero");
    }
    if (wave_number < 0.0) throw ConfigurationError("photon wave number must be positive");
    return;
  }
  if (!(m0 > 0.0) || !std::isfinite(m0)) {
    throw ConfigurationError(std::string(to_string(cls)) + " rest mass must be positive");
  }
  if (u.norm() >= 1.0) {
    throw InvalidVelocity("massive particle requires |u| < c, got " + std::to_string(u.norm()));
  }
}

double ParticleSpec::energy() const {
  if (!massive()) return wave_number;
  return gamma_factor(u.norm()) * m0;
}

Vector3d ParticleSpec::momentum() const {
  if (!massive()) return wave_number * Vector3d::UnitZ();
  return gamma_factor(u.norm()) * m0 * u;
}

Vector3d ParticleSpec::direction() const {
  if (!massive()) return Vector3d::UnitZ();
  const double speed = u.norm();
  return speed > 0.0 ? Vector3d(u / speed) : Vector3d::UnitZ();
}

double ParticleSpec::phase(double t, const Vector3d& x) const {
  return energy() * t - momentum().dot(x);
}

double SampleGrid::angle(int j) const {
  return kTwoPi * static_cast<double>(j) / samples_per_period;
}

double SampleGrid::reduced_angle(int j) const {
  return kTwoPi * static_cast<double>(j % samples_per_period) / samples_per_period;
}

void SampleGrid::validate() const {
  if (samples_per_period < 4) throw ConfigurationError("need at least 4 samples per period");
  if (periods < 1) throw ConfigurationError("need at least one period");
}

std::size_t WorldlineSet::size() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.samples.size();
  return n;
}

double spinless_rest_sigma(double x1, double m0) {
  if (!(m0 > 0.0)) throw ConfigurationError("rest mass must be positive");
  const double wavelength = kTwoPi / m0;
  if (!(x1 >= 0.0) || x1 >= wavelength) {
    throw DomainError("spinless_rest_sigma: x1 must lie in [0, h/(m0 c)), got " +
                      std::to_string(x1));
  }
  return kPi * std::cos(m0 * x1);
}

Event6 spinless_rest_event(double x1, double m0) {
  const double sigma = spinless_rest_sigma(x1, m0);
  return Event6(0.0, x1, 0.0, 0.0, sigma, x1);
}

Event6 spinless_sigma_anchor(double x1, double m0) {
  const double sigma = spinless_rest_sigma(x1, m0);
  return Event6(x1, 0.0, 0.0, 0.0, sigma, x1);
}

double spinless_moving_sigma(double t, const Vector3d& x, const ParticleSpec& spec) {
  require_class(spec, ParticleClass::spinless, "spinless_moving_sigma");
  return kPi * std::cos(spec.phase(t, x));
}

double cosine_model_angle(double value) {
  if (!(std::abs(value) <= kPi)) {
    throw DomainError("world-line value must lie in [-π, π]");
  }
  return std::acos(value / kPi);
}

double photon_sigma(const ParticleSpec& spec, double t, double x3) {
  require_class(spec, ParticleClass::photon, "photon_sigma");
  const double k = spec.wave_number;
  return kPi * std::cos(k * t - k * x3);
}

double photon_phi(const ParticleSpec& spec, double t, double x3) { return photon_sigma(spec, t, x3); }

double boson_value(const ParticleSpec& spec, double t, const Vector3d& x) {
  require_class(spec, ParticleClass::boson, "boson_value");
  return kPi * std::cos(spec.phase(t, x));
}

std::array<Vector3d, 3> boson_support_directions(const ParticleSpec& spec) {
  const Vector3d e3 = spec.direction();
  // seed e1 from the coordinate axis least aligned with the motion
  Eigen::Index axis = 0;
  e3.cwiseAbs().minCoeff(&axis);
  Vector3d seed = Vector3d::Unit(axis);
  if (e3.isApprox(Vector3d::UnitZ())) seed = Vector3d::UnitX();
  const Vector3d e1 = (seed - seed.dot(e3) * e3).normalized();
  const Vector3d e2 = e3.cross(e1);
  return {e1, e2, e3};
}

WorldlineSet spinless_worldlines(const ParticleSpec& spec, const SampleGrid& grid) {
  require_class(spec, ParticleClass::spinless, "spinless_worldlines");
  grid.validate();
  const double m0 = spec.m0;
  const Vector3d n = spec.u.isZero(0.0) ? Vector3d::UnitX() : spec.direction();

  WorldlineSet set{ParticleClass::spinless};
  auto& tau = set.line(ProperTimeKind::tau).samples;
  auto& sigma = set.line(ProperTimeKind::sigma).samples;
  auto& phi = set.line(ProperTimeKind::phi).samples;
  for (int j = 0; j < grid.total(); ++j) {
    const double theta = grid.angle(j);
    const double reduced = grid.reduced_angle(j);
    const double value = kPi * std::cos(reduced);

    const double proper = theta / m0;
    tau.push_back({proper, to_lab(Event6(proper, 0.0, 0.0, 0.0), spec.u)});

    // localized to one wavelength: x1 restarts every period
    const double xi = reduced / m0;
    Vector6d s;
    s << 0.0, xi * n, value, xi;
    sigma.push_back({theta, to_lab(Event6(s), spec.u)});

    // φ projects onto the τ world line
    phi.push_back({theta, to_lab(Event6(proper, 0.0, 0.0, 0.0, 0.0, value), spec.u)});
  }
  set_de_broglie_metadata(set, spec);
  return set;
}

WorldlineSet photon_worldlines(const ParticleSpec& spec, const SampleGrid& grid) {
  require_class(spec, ParticleClass::photon, "photon_worldlines");
  grid.validate();
  const double k = spec.wave_number;
  const double omega = k;

  WorldlineSet set{ParticleClass::photon};
  auto& tau = set.line(ProperTimeKind::tau).samples;
  auto& sigma = set.line(ProperTimeKind::sigma).samples;
  auto& phi = set.line(ProperTimeKind::phi).samples;
  for (int j = 0; j < grid.total(); ++j) {
    const double theta = grid.angle(j);
    const double reduced = grid.reduced_angle(j);
    const double value = kPi * std::cos(reduced);
    const double a = principal_angle(reduced);
    const double x3 = theta / k;

    tau.push_back({theta / omega, Event6(theta / omega, 0.0, 0.0, theta / omega)});
    sigma.push_back({theta, Event6(0.0, spec.lambda_E0 * a, 0.0, x3, value, 0.0)});
    phi.push_back({theta, Event6(0.0, 0.0, spec.lambda_B0 * a, x3, 0.0, value)});
  }
  set.period = kTwoPi / omega;
  set.wavelength = kTwoPi / k;
  return set;
}

WorldlineSet boson_worldlines(const ParticleSpec& spec, const SampleGrid& grid) {
  require_class(spec, ParticleClass::boson, "boson_worldlines");
  grid.validate();
  const double m0 = spec.m0;
  const auto [e1, e2, e3] = boson_support_directions(spec);

  WorldlineSet set{ParticleClass::boson};
  auto& tau = set.line(ProperTimeKind::tau).samples;
  auto& sigma = set.line(ProperTimeKind::sigma).samples;
  auto& phi = set.line(ProperTimeKind::phi).samples;
  for (int j = 0; j < grid.total(); ++j) {
    const double theta = grid.angle(j);
    const double reduced = grid.reduced_angle(j);
    const double value = kPi * std::cos(reduced);
    const double a = principal_angle(reduced);
    const Vector3d along = (a / m0) * e3;

    Vector6d s;
    s << 0.0, spec.lambda_V10 * a * e1 + along, value, 0.0;
    Vector6d f;
    f << 0.0, spec.lambda_V20 * a * e2 + along, 0.0, value;
    Vector6d t;
    t << theta / m0, along, 0.0, 0.0;

    sigma.push_back({theta, to_lab(Event6(s), spec.u)});
    phi.push_back({theta, to_lab(Event6(f), spec.u)});
    tau.push_back({theta / m0, to_lab(Event6(t), spec.u)});
  }
  set_de_broglie_metadata(set, spec);
  return set;
}

double fermion_radius(double m0) {
  if (!(m0 > 0.0)) throw ConfigurationError("rest mass must be positive");
  return kPi / m0;
}

Vector3d fermion_sigma_point(const ParticleSpec& spec, double sigma) {
  const double r0 = fermion_radius(spec.m0);
  const double angle = spec.m0 * sigma;
  const double handed = spec.orientation == SpinOrientation::up ? 1.0 : -1.0;
  return {r0 * std::cos(angle), handed * r0 * std::sin(angle), 0.0};
}

Eigen::Vector2d fermion_phi_point(const ParticleSpec& spec, double phi) {
  if (!(phi >= 0.0) || phi >= kTwoPi) {
    throw DomainError("fermion φ must lie in [0, 2π), got " + std::to_string(phi));
  }
  const double r0 = fermion_radius(spec.m0);
  const double arc = 0.25 * phi;
  const double hemisphere = spec.orientation == SpinOrientation::up ? 1.0 : -1.0;
  return {hemisphere * r0 * std::cos(arc), r0 * std::sin(arc)};
}

Eigen::Vector2d fermion_tau_point(const ParticleSpec& spec, double tau) {
  const double angle = spec.m0 * tau;
  return {tau * (1.0 + std::cos(angle)), tau * std::sin(angle)};
}

WorldlineSet fermion_worldlines(const ParticleSpec& spec, const SampleGrid& grid) {
  require_class(spec, ParticleClass::fermion, "fermion_worldlines");
  grid.validate();
  const double m0 = spec.m0;
  const double r0 = fermion_radius(m0);
  const double handed = spec.orientation == SpinOrientation::up ? 1.0 : -1.0;

  WorldlineSet set{ParticleClass::fermion};
  auto& sigma = set.line(ProperTimeKind::sigma).samples;
  for (int j = 0; j < grid.total(); ++j) {
    const double reduced = grid.reduced_angle(j);
    sigma.push_back({grid.angle(j) / m0, Event6(0.0, r0 * std::cos(reduced),
                                                handed * r0 * std::sin(reduced), 0.0)});
  }

  // one sweep of φ over [0, 2π); the arc is drawn in the x1-x3 plane (s = e1)
  auto& phi = set.line(ProperTimeKind::phi).samples;
  const int n_phi = grid.total();
  for (int j = 0; j < n_phi; ++j) {
    const double value = kTwoPi * static_cast<double>(j) / n_phi;
    const Eigen::Vector2d p = fermion_phi_point(spec, value);
    phi.push_back({value, Event6(0.0, p[1], 0.0, p[0])});
  }

  // τ spans two oscillation periods per requested period
  auto& tau = set.line(ProperTimeKind::tau).samples;
  const SampleGrid tau_grid{grid.samples_per_period, 2 * grid.periods};
  for (int j = 0; j < tau_grid.total(); ++j) {
    const double proper = tau_grid.angle(j) / m0;
    const double reduced = tau_grid.reduced_angle(j);
    tau.push_back({proper, Event6(proper * (1.0 + std::cos(reduced)), 0.0, 0.0, 0.0, 0.0,
                                  proper * std::sin(reduced))});
  }
  set.period = kTwoPi / m0;
  set.wavelength = 2.0 * r0;
  return set;
}

WorldlineSet generate_worldlines(const ParticleSpec& spec, const SampleGrid& grid) {
  switch (spec.cls) {
    case ParticleClass::spinless:
      return spinless_worldlines(spec, grid);
    case ParticleClass::photon:
      return photon_worldlines(spec, grid);
    case ParticleClass::boson:
      return boson_worldlines(spec, grid);
    case ParticleClass::fermion:
      return fermion_worldlines(spec, grid);
  }
  throw ConfigurationError("unknown particle class");
}

LatticeSpec LatticeSpec::from_mass(double m, double u, int n) {
  if (!(m > 0.0)) throw ConfigurationError("lattice mass must be positive");
  if (n < 1) throw ConfigurationError("lattice needs at least one point");
  if (u == 0.0) throw DegenerateLattice("lattice spacing h/(m u) is infinite at u = 0");
  if (!(u > 0.0) || u >= 1.0) throw InvalidVelocity("lattice speed must satisfy 0 < u < c");
  return {kTwoPi / (m * u), kTwoPi / m, n};
}

DeBroglieLattice debroglie_lattice(const ParticleSpec& spec, int n) {
  spec.validate();
  if (!spec.massive()) throw ConfigurationError("de Broglie lattice needs a massive particle");
  const double speed = spec.u.norm();
  if (speed == 0.0) throw DegenerateLattice("lattice spacing h/(m u) is infinite at u = 0");
  const double m = gamma_factor(speed) * spec.m0;

  DeBroglieLattice lattice{LatticeSpec::from_mass(m, speed, n), {}, {}};
  for (int j = 0; j < n; ++j) {
    lattice.positions.push_back({0.0, j * lattice.spec.dx});
    lattice.times.push_back({j * lattice.spec.dt, 0.0});
  }
  return lattice;
}

}  // namespace multitime

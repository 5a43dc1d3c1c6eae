#pragma once

#include <array>
#include <optional>
#include <vector>

#include "multitime/core.hpp"

namespace multitime {

enum class ParticleClass { spinless, photon, boson, fermion };
enum class SpinOrientation { up, down };  // rotation towards +x3 / -x3

const char* to_string(ParticleClass cls);
const char* to_string(SpinOrientation orientation);

/// Physical description of a free particle.
///
/// Massive classes carry a rest mass and a frame velocity |u| < c. The photon
/// has m0 = 0, moves at c along x3 and is described by its wave number. The
/// lambda_* factors are the positive length scales attached to the field
/// magnitudes E0, B0, V10, V20; alpha_* convert world-line values to fields.
struct ParticleSpec {
  ParticleClass cls = ParticleClass::spinless;
  double m0 = 1.0;
  Vector3d u = Vector3d::Zero();
  double wave_number = 1.0;  // photon only
  double E0 = 1.0, B0 = 1.0;
  double V10 = 1.0, V20 = 1.0;
  double lambda_E0 = 1.0, lambda_B0 = 1.0;
  double lambda_V10 = 1.0, lambda_V20 = 1.0;
  double alpha_e = 1.0, alpha_b = 1.0;
  SpinOrientation orientation = SpinOrientation::up;

  static ParticleSpec spinless(double m0, const Vector3d& u = Vector3d::Zero());
  static ParticleSpec photon(double wave_number);
  static ParticleSpec boson(double m0, const Vector3d& u = Vector3d::Zero());
  static ParticleSpec fermion(double m0, const Vector3d& u = Vector3d::Zero(),
                              SpinOrientation orientation = SpinOrientation::up);

  /// Throws ConfigurationError or InvalidVelocity when the class invariants
  /// do not hold.
  void validate() const;

  bool massive() const { return cls != ParticleClass::photon; }
  double speed() const { return massive() ? u.norm() : 1.0; }
  double energy() const;
  Vector3d momentum() const;
  /// Unit vector along the direction of motion; x3 for a particle at rest.
  Vector3d direction() const;
  /// Phase (E t - p.x)/ħ of the plane wave at (t, x).
  double phase(double t, const Vector3d& x) const;
};

/// Uniform sampling of a world line: `samples_per_period` points per 2π of
/// loop angle, over `periods` periods.
struct SampleGrid {
  int samples_per_period = 256;
  int periods = 1;

  int total() const { return samples_per_period * periods; }
  /// Loop angle of sample j, unwrapped across periods.
  double angle(int j) const;
  /// Loop angle reduced into one period; equal for j and j + samples_per_period.
  double reduced_angle(int j) const;
  void validate() const;
};

/// One sample of a world line: the proper-time parameter and the event it
/// reaches. The parameter is strictly increasing along a line. For the
/// cosine models it is the loop angle θ of the cylinder condition and the
/// world-line value is π cos θ, stored in x4 (σ) or x5 (φ).
struct WorldlineSample {
  double proper_time;
  Event6 event;
};

struct Worldline {
  ProperTimeKind kind;
  std::vector<WorldlineSample> samples;
};

/// Sampled τ, σ and φ world lines of one particle.
struct WorldlineSet {
  ParticleClass cls;
  std::array<Worldline, 3> lines{Worldline{ProperTimeKind::tau, {}},
                                 Worldline{ProperTimeKind::sigma, {}},
                                 Worldline{ProperTimeKind::phi, {}}};
  double period = 0.0;      // temporal period of the τ oscillation
  double wavelength = 0.0;  // spatial period of the σ oscillation

  Worldline& line(ProperTimeKind kind) { return lines[static_cast<int>(kind)]; }
  const Worldline& line(ProperTimeKind kind) const { return lines[static_cast<int>(kind)]; }
  std::size_t size() const;
};

/// Rest-frame σ of the spinless oscillator, σ = π cos(m0 c x1 / ħ), for x1
/// within one Compton wavelength [0, h/(m0 c)).
double spinless_rest_sigma(double x1, double m0);

/// Rest-frame event on the σ world line: x1 = x5, x0 = x2 = x3 = 0, x4 = σ.
Event6 spinless_rest_event(double x1, double m0);

/// Rest-frame anchor of the σ world line labelled by x1: the point of the τ
/// world line (x0 axis) at x0 = x1, where the σ line through it crosses.
/// Carries σ in x4 and x1 in x5. Boosting this event with `boost` and
/// evaluating `spinless_moving_sigma` there returns the same σ; this is the
/// real form of the rest-to-moving transformation (x1 -> γ(t - u.x)).
Event6 spinless_sigma_anchor(double x1, double m0);

/// σ = π cos((E t - p.x)/ħ) in the frame where the particle moves with spec.u.
double spinless_moving_sigma(double t, const Vector3d& x, const ParticleSpec& spec);

/// Principal-branch inverse of a cosine-model world line: the loop angle in
/// [0, π] reached at value `value` ∈ [-π, π].
double cosine_model_angle(double value);

/// σ(t, x3) = φ(t, x3) = π cos(ω t - k x3).
double photon_sigma(const ParticleSpec& spec, double t, double x3);
double photon_phi(const ParticleSpec& spec, double t, double x3);

/// Common value of σ, φ and τ for the massive boson, π cos((E t - p.x)/ħ).
double boson_value(const ParticleSpec& spec, double t, const Vector3d& x);

/// Orthonormal frame (e1, e2, e3) with e3 along the direction of motion.
std::array<Vector3d, 3> boson_support_directions(const ParticleSpec& spec);

WorldlineSet spinless_worldlines(const ParticleSpec& spec, const SampleGrid& grid = {});
WorldlineSet photon_worldlines(const ParticleSpec& spec, const SampleGrid& grid = {});
WorldlineSet boson_worldlines(const ParticleSpec& spec, const SampleGrid& grid = {});
WorldlineSet fermion_worldlines(const ParticleSpec& spec, const SampleGrid& grid = {});

/// Dispatches on spec.cls.
WorldlineSet generate_worldlines(const ParticleSpec& spec, const SampleGrid& grid = {});

/// Radius h/(2 m0 c) of the fermion circles.
double fermion_radius(double m0);

/// Points of the fermion world lines in the rest frame.
Vector3d fermion_sigma_point(const ParticleSpec& spec, double sigma);
/// (x3, xs) on the φ arc; φ ∈ [0, 2π) sweeps the arc angle φ/4 ∈ [0, π/2).
Eigen::Vector2d fermion_phi_point(const ParticleSpec& spec, double phi);
/// (x0, x5) on the τ world line.
Eigen::Vector2d fermion_tau_point(const ParticleSpec& spec, double tau);

/// Spacings of the de Broglie intersection lattice: dx = h/(m u) and
/// dt = h/(m c²), with m the relativistic mass γ m0.
struct LatticeSpec {
  double dx;
  double dt;
  int n;

  /// Lattice for a given relativistic mass m and speed u.
  static LatticeSpec from_mass(double m, double u, int n);
};

struct LatticePoint {
  double t;
  double x;  // coordinate along the direction of motion
};

struct DeBroglieLattice {
  LatticeSpec spec;
  std::vector<LatticePoint> positions;  // at t = 0
  std::vector<LatticePoint> times;      // at x = 0
};

DeBroglieLattice debroglie_lattice(const ParticleSpec& spec, int n);

}  // namespace multitime

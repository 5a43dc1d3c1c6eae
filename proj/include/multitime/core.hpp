#pragma once

#include <Eigen/Core>

#include <complex>
#include <numbers>
#include <variant>

#include "multitime/errors.hpp"

namespace multitime {

template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Vector6 = Eigen::Matrix<Scalar, 6, 1>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Matrix6 = Eigen::Matrix<Scalar, 6, 6>;

using Vector3d = Eigen::Vector3d;
using Vector4d = Vector4<double>;
using Vector6d = Vector6<double>;
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Action and speed units. Everything inside the library runs in natural
/// units; SI values are produced on the way out.
struct UnitSystem {
  enum class Mode { natural, si };

  double hbar = 1.0;
  double c = 1.0;
  Mode mode = Mode::natural;

  static UnitSystem natural() { return {}; }
  static UnitSystem si() { return {1.054571817e-34, 299792458.0, Mode::si}; }

  double h() const { return kTwoPi * hbar; }

  // Conversions of natural-unit quantities for a particle of rest mass
  // `mass_kg`. In natural mode they are the identity.
  double length(double natural_length, double mass_kg) const;
  double time(double natural_time, double mass_kg) const;
  double speed(double natural_speed) const { return natural_speed * c; }
};

/// A point in 6D time-space: x0 (time), x1..x3 (space), x4 and x5 (second
/// and third time dimensions).
class Event6 {
 public:
  Event6() : x_(Vector6d::Zero()) {}
  explicit Event6(const Vector6d& x);
  Event6(double x0, double x1, double x2, double x3, double x4 = 0.0, double x5 = 0.0);

  /// Builds an event whose x4 is an angle on a loop, reduced into [0, 2π).
  static Event6 on_cylinder(const Vector6d& x);

  double operator[](int i) const { return x_[i]; }
  const Vector6d& coords() const { return x_; }

  double time() const { return x_[0]; }
  Vector3d spatial() const { return x_.segment<3>(1); }
  Vector4d spacetime() const { return x_.head<4>(); }
  double x4() const { return x_[4]; }
  double x5() const { return x_[5]; }
  bool cylinder() const { return cylinder_; }

  Event6 shifted(int axis, double delta) const;

  friend bool operator==(const Event6& a, const Event6& b) { return a.x_ == b.x_; }

 private:
  Vector6d x_;
  bool cylinder_ = false;
};

/// Hyperbolic angle of a boost, with the half-angle values used by the
/// fermion components.
struct HyperbolicAngle {
  double cosh_a = 1.0;
  double sinh_a = 0.0;
  double cosh_half = 1.0;
  double sinh_half = 0.0;
};

enum class ProperTimeKind { tau, sigma, phi };

const char* to_string(ProperTimeKind kind);

/// Rates of change of the six coordinates with respect to one proper time.
class Tangent6 {
 public:
  Tangent6(const Vector6d& components, ProperTimeKind kind);
  Tangent6(const Vector4d& spacetime, ProperTimeKind kind);

  const Vector6d& components() const { return v_; }
  ProperTimeKind kind() const { return kind_; }

 private:
  Vector6d v_;
  ProperTimeKind kind_;
};

/// Passive Lorentz boost into the frame moving with velocity `u`. Only
/// (x0, x1..x3) transform; x4 and x5 are carried over untouched.
Event6 boost(const Event6& e, const Vector3d& u);
Tangent6 boost(const Tangent6& t, const Vector3d& u);

/// 4x4 boost matrix acting on (x0, x1, x2, x3).
Eigen::Matrix4d boost_matrix(const Vector3d& u);

HyperbolicAngle rapidity(double u);

/// Marker for the rest-frame case where the phase velocity c²/u diverges.
struct InfinitePhaseVelocity {
  friend bool operator==(InfinitePhaseVelocity, InfinitePhaseVelocity) { return true; }
};

using PhaseVelocity = std::variant<double, InfinitePhaseVelocity>;

PhaseVelocity phase_velocity(double u);

/// 4D Minkowski product with signature (+,-,-,-); x4 and x5 are ignored.
double minkowski_dot(const Tangent6& a, const Tangent6& b);

/// Same product extended with the (x4, x5) sector of the scalar metric,
/// contributing +psi² a4 b4 - a5 b5.
double minkowski_dot(const Tangent6& a, const Tangent6& b, double psi);

inline double minkowski_dot(const Vector4d& a, const Vector4d& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

/// Minkowski metric diag(1, -1, -1, -1).
template <typename Scalar = double>
Matrix4<Scalar> minkowski() {
  return Vector4<Scalar>(Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)).asDiagonal();
}

/// Lorentz factor for a speed below c.
double gamma_factor(double speed);

}  // namespace multitime

#include "multitime/core.hpp"

#include <cmath>
#include <string>

namespace multitime {

namespace {

void require_finite(const Vector6d& x) {
  if (!x.allFinite()) {
    throw DomainError("Event6: coordinates must be finite");
  }
}

}  // namespace

double UnitSystem::length(double natural_length, double mass_kg) const {
  if (mode == Mode::natural) return natural_length;
  return natural_length * hbar / (mass_kg * c);
}

double UnitSystem::time(double natural_time, double mass_kg) const {
  if (mode == Mode::natural) return natural_time;
  return natural_time * hbar / (mass_kg * c * c);
}

Event6::Event6(const Vector6d& x) : x_(x) { require_finite(x_); }

Event6::Event6(double x0, double x1, double x2, double x3, double x4, double x5)
    : Event6((Vector6d() << x0, x1, x2, x3, x4, x5).finished()) {}

Event6 Event6::on_cylinder(const Vector6d& x) {
  Event6 e(x);
  double angle = std::fmod(e.x_[4], kTwoPi);
  if (angle < 0.0) angle += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π
  if (angle >= kTwoPi) angle = 0.0;
  e.x_[4] = angle;
  e.cylinder_ = true;
  return e;
}

Event6 Event6::shifted(int axis, double delta) const {
  Vector6d x = x_;
  x[axis] += delta;
  return Event6(x);
}

const char* to_string(ProperTimeKind kind) {
  switch (kind) {
    case ProperTimeKind::tau:
      return "tau";
    case ProperTimeKind::sigma:
      return "sigma";
    case ProperTimeKind::phi:
      return "phi";
  }
  return "?";
}

Tangent6::Tangent6(const Vector6d& components, ProperTimeKind kind)
    : v_(components), kind_(kind) {
  if (!v_.allFinite() || v_.isZero(0.0)) {
    throw DomainError("Tangent6: tangent must be a finite nonzero vector");
  }
}

Tangent6::Tangent6(const Vector4d& spacetime, ProperTimeKind kind)
    : Tangent6((Vector6d() << spacetime, 0.0, 0.0).finished(), kind) {}

double gamma_factor(double speed) {
  if (!(speed >= 0.0) || speed >= 1.0) {
    throw InvalidVelocity("speed must satisfy 0 <= u < c, got " + std::to_string(speed));
  }
  return 1.0 / std::sqrt((1.0 - speed) * (1.0 + speed));
}

Eigen::Matrix4d boost_matrix(const Vector3d& u) {
  const double speed = u.norm();
  if (!u.allFinite() || speed >= 1.0) {
    throw InvalidVelocity("boost requires |u| < c, got |u| = " + std::to_string(speed));
  }
  Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
  if (speed == 0.0) return L;

  const double g = gamma_factor(speed);
  const Vector3d n = u / speed;
  L(0, 0) = g;
  L.block<1, 3>(0, 1) = -g * u.transpose();
  L.block<3, 1>(1, 0) = -g * u;
  L.block<3, 3>(1, 1) += (g - 1.0) * n * n.transpose();
  return L;
}

Event6 boost(const Event6& e, const Vector3d& u) {
  Vector6d x = e.coords();
  x.head<4>() = boost_matrix(u) * x.head<4>();
  return Event6(x);
}

Tangent6 boost(const Tangent6& t, const Vector3d& u) {
  Vector6d v = t.components();
  v.head<4>() = boost_matrix(u) * v.head<4>();
  return Tangent6(v, t.kind());
}

HyperbolicAngle rapidity(double u) {
  if (!(u >= 0.0) || u >= 1.0) {
    throw InvalidVelocity("rapidity requires 0 <= u < c, got " + std::to_string(u));
  }
  const double alpha = std::atanh(u);
  HyperbolicAngle a;
  a.cosh_a = std::cosh(alpha);
  a.sinh_a = std::sinh(alpha);
  a.cosh_half = std::cosh(0.5 * alpha);
  a.sinh_half = std::sinh(0.5 * alpha);
  return a;
}

PhaseVelocity phase_velocity(double u) {
  if (!(u >= 0.0) || u > 1.0) {
    throw InvalidVelocity("group speed must satisfy 0 <= u <= c, got " + std::to_string(u));
  }
  if (u == 0.0) return InfinitePhaseVelocity{};
  return 1.0 / u;
}

double minkowski_dot(const Tangent6& a, const Tangent6& b) {
  return minkowski_dot(Vector4d(a.components().head<4>()), Vector4d(b.components().head<4>()));
}

double minkowski_dot(const Tangent6& a, const Tangent6& b, double psi) {
  const auto& va = a.components();
  const auto& vb = b.components();
  return minkowski_dot(a, b) + psi * psi * va[4] * vb[4] - va[5] * vb[5];
}

}  // namespace multitime

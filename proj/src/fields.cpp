#include "multitime/fields.hpp"

#include <cmath>

namespace multitime {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

void require_fermion(const ParticleSpec& spec) {
  if (spec.cls != ParticleClass::fermion) {
    throw ConfigurationError("fermion components need a fermion spec");
  }
  spec.validate();
}

}  // namespace

LadderPair ladder_decompose(const ParticleSpec& spec, double t) {
  spec.validate();
  double sign = 0.0;
  switch (spec.cls) {
    case ParticleClass::spinless:
      sign = 1.0;
      break;
    case ParticleClass::boson:
      sign = -1.0;
      break;
    default:
      throw Unsupported(std::string("no ladder form for class ") + to_string(spec.cls));
  }
  const Complex a = 0.5 * kPi * unit_phase(sign * spec.energy() * t);
  return {a, std::conj(a)};
}

double ladder_recompose(const LadderPair& pair, const ParticleSpec& spec, const Vector3d& x) {
  const double px = spec.momentum().dot(x);
  const double sign = spec.cls == ParticleClass::boson ? 1.0 : -1.0;
  const Complex value = pair.a * unit_phase(sign * px) + pair.a_star * unit_phase(-sign * px);
  return value.real();
}

ScalarWave ScalarWave::on_shell(double m0, const Vector3d& u, WaveForm form) {
  const double g = gamma_factor(u.norm());
  ScalarWave w;
  w.p << g * m0, g * m0 * u;
  w.m0 = m0;
  w.form = form;
  return w;
}

double ScalarWave::shell_defect() const {
  return p[0] * p[0] - p.tail<3>().squaredNorm() - m0 * m0;
}

double ScalarWave::phase(const Event6& e) const {
  return p[0] * e[0] - p.tail<3>().dot(e.spatial()) - m0 * e.x5();
}

Complex scalar_psi(const ScalarWave& w, const Event6& e) {
  const double phase = w.phase(e);
  if (w.form == WaveForm::cosine) return {std::cos(phase), 0.0};
  return unit_phase(phase);
}

FieldVectors photon_field_vectors(const ParticleSpec& spec, const Event6& e) {
  const double sigma = photon_sigma(spec, e.time(), e[3]);
  const double phi = photon_phi(spec, e.time(), e[3]);
  return {spec.alpha_e * sigma * Vector3d::UnitX(), spec.alpha_b * phi * Vector3d::UnitY()};
}

FieldVectors boson_field_vectors(const ParticleSpec& spec, const Event6& e) {
  const double value = boson_value(spec, e.time(), e.spatial());
  const auto [e1, e2, e3] = boson_support_directions(spec);
  return {spec.alpha_e * value * e1, spec.alpha_b * value * e2};
}

double DiracComponents::norm_without_constant() const {
  return std::norm(psi1) + std::norm(psi2) + alpha.cosh_half * alpha.cosh_half;
}

DiracComponents dirac_components(const ParticleSpec& spec, const Event6& e,
                                 const SpinorOptions& options) {
  require_fermion(spec);
  const double speed = spec.u.norm();
  DiracComponents d;
  d.alpha = rapidity(speed);
  d.C0 = options.C0;
  d.phase = unit_phase(spec.phase(e.time(), e.spatial()));

  // at rest sinh(α/2) = 0 removes the direction dependence
  Vector3d n = Vector3d::Zero();
  if (speed > 0.0) n = spec.u / speed;
  d.psi1 = d.alpha.sinh_half * Complex(n[0], n[1]) * d.phase;
  d.psi2 = d.alpha.sinh_half * n[2] * d.phase;
  const Complex normal_factor = options.extended_normal ? Complex(1.0, 1.0) : Complex(1.0, 0.0);
  d.psi3 = d.alpha.cosh_half * normal_factor * d.phase + 1.0;
  return d;
}

DiracComponents dirac_momentum_components(const ParticleSpec& spec, const Event6& e,
                                          const SpinorOptions& options) {
  require_fermion(spec);
  const Vector3d p = spec.momentum();
  const double m0 = spec.m0;
  DiracComponents d;
  d.alpha = rapidity(spec.u.norm());
  d.C0 = options.C0;
  d.phase = unit_phase(spec.phase(e.time(), e.spatial()));
  d.psi1 = Complex(p[0], p[1]) / m0 * d.phase;
  d.psi2 = p[2] / m0 * d.phase;
  d.psi3 = spec.energy() / m0 * d.phase + 1.0;
  return d;
}

KVector k_vector(const ParticleSpec& spec, const Event6& e, const SpinorOptions& options) {
  const DiracComponents d = dirac_components(spec, e, options);
  const double m0 = spec.m0;
  const double C = options.C;
  const Complex fifth = unit_phase(m0 * e.x5());

  KVector k;
  k.C = C;
  k.K[0] = C * d.psi3 * fifth;
  k.K[1] = -C * d.psi1 * fifth;
  k.K[2] = kI * C * d.psi1 * options.k2_factor * fifth;
  k.K[3] = -C * d.psi2 * fifth;
  if (options.extended_normal) {
    k.K5 = -C * unit_phase(spec.phase(e.time(), e.spatial()) - m0 * e.x5());
  }
  return k;
}

}  // namespace multitime

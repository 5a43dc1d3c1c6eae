#pragma once

#include "multitime/core.hpp"
#include "multitime/worldlines.hpp"

namespace multitime {

/// Coefficients of σ = a e^{∓ip.x/ħ} + a* e^{±ip.x/ħ}.
struct LadderPair {
  Complex a;
  Complex a_star;
};

/// a = (π/2) e^{iEt/ħ} for the spinless particle, (π/2) e^{-iEt/ħ} for the
/// massive boson. The photon has no ladder form.
LadderPair ladder_decompose(const ParticleSpec& spec, double t);

/// Rebuilds the world-line value at spatial point x. The spinless form pairs
/// a with e^{-ip.x/ħ}; the boson form pairs a with e^{+ip.x/ħ}.
double ladder_recompose(const LadderPair& pair, const ParticleSpec& spec, const Vector3d& x);

enum class WaveForm { exponential, cosine };

/// Scalar plane wave ψ = e^{i(p^α x_α - m0 x5)/ħ} or its cosine.
struct ScalarWave {
  Vector4d p = Vector4d(1.0, 0.0, 0.0, 0.0);  // (E, p1, p2, p3)
  double m0 = 1.0;
  WaveForm form = WaveForm::exponential;

  /// Wave of a particle of mass m0 moving with velocity u.
  static ScalarWave on_shell(double m0, const Vector3d& u, WaveForm form = WaveForm::exponential);

  /// E² - p² - m0²; zero on shell.
  double shell_defect() const;
  /// p^α x_α - m0 x5.
  double phase(const Event6& e) const;
};

Complex scalar_psi(const ScalarWave& w, const Event6& e);

/// A pair of field vectors perpendicular to the direction of propagation.
struct FieldVectors {
  Vector3d first;   // E for the photon, V1 for the boson
  Vector3d second;  // B for the photon, V2 for the boson
};

/// E = α_e σ e1, B = α_b φ e2 for the photon travelling along x3.
FieldVectors photon_field_vectors(const ParticleSpec& spec, const Event6& e);
/// V1 = α_e σ e1, V2 = α_b φ e2 with (e1, e2) transverse to the motion.
FieldVectors boson_field_vectors(const ParticleSpec& spec, const Event6& e);

/// Options of the fermion component construction.
struct SpinorOptions {
  double C0 = 1.0;  // normalization of the Dirac components
  double C = 1.0;   // normalization of the K vector
  /// Use e_n = e0 + e_τ + e5; adds the (1 + i) factor to ψ3 and produces K5.
  bool extended_normal = false;
  /// Factor multiplying i C ψ1 e^{i m0 x5} in K2.
  Complex k2_factor = 1.0;
};

/// Three non-zero fermion components and the phase they share.
struct DiracComponents {
  Complex psi1;
  Complex psi2;
  Complex psi3;
  Complex phase;  // e^{i(Et - p.x)/ħ}
  double C0 = 1.0;
  HyperbolicAngle alpha;

  /// |ψ1|² + |ψ2|² + cosh²(α/2), with the constant term of ψ3 left out.
  double norm_without_constant() const;
};

/// Half-angle form of the fermion components at event e.
DiracComponents dirac_components(const ParticleSpec& spec, const Event6& e,
                                 const SpinorOptions& options = {});

/// Momentum form: (p1 + i p2)/m0, p3/m0 and p0/m0 + 1 times the phase. These
/// are C0 times the Dirac components in the x3 representation; the ψ1 : ψ2
/// ratio matches the half-angle form.
DiracComponents dirac_momentum_components(const ParticleSpec& spec, const Event6& e,
                                          const SpinorOptions& options = {});

/// Components K0..K3 and K5 of the fermion 5-vector.
struct KVector {
  Vector4<Complex> K = Vector4<Complex>::Zero();
  Complex K5 = 0.0;
  double C = 1.0;
};

KVector k_vector(const ParticleSpec& spec, const Event6& e, const SpinorOptions& options = {});

}  // namespace multitime

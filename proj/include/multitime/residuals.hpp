#pragma once

#include <string>

#include "multitime/curvature.hpp"
#include "multitime/fields.hpp"
#include "multitime/metric.hpp"

namespace multitime {

/// Outcome of one numerical check.
struct ResidualReport {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string context;

  static ResidualReport make(std::string name, double value, double tolerance,
                             std::string context = {});
};

/// |∂_α∂^α ψ + m0² ψ| at the probe, by central differences over x0..x3.
ResidualReport kg_residual(const ScalarWave& w, const CurvatureProbe& probe,
                           double tolerance = 1e-6);

/// Plane vector wave A_β = ε_β e^{i(E x0 - p.x)} with lower-index
/// polarization ε.
struct ProcaWave {
  Vector4<Complex> polarization = Vector4<Complex>(0.0, 1.0, 0.0, 0.0);
  Vector4d p = Vector4d(1.0, 0.0, 0.0, 1.0);  // (E, p1, p2, p3)
  double m0 = 0.0;

  Vector4<Complex> potential(const Event6& e) const;
};

struct ProcaResult {
  ResidualReport report;
  /// ¼ F_αβ F^αβ - ½ m0² A_β A^β at the probe (complex plane wave).
  Complex invariant;
};

/// Euclidean norm over β of ∂^α F_αβ + m0² A_β, with F from nested central
/// differences of A.
ProcaResult proca_residual(const ProcaWave& w, const CurvatureProbe& probe,
                           double tolerance = 1e-6);

/// Spatial Laplacian of A5 = e/r at the probe, divided by |e|/r³.
/// Throws SingularityProximity when r <= 10 step.
ResidualReport coulomb_check(double charge, const CurvatureProbe& probe, double tolerance = 1e-5);

/// A5 = e/r with r measured from the spatial origin.
double coulomb_potential(double charge, const Event6& e);

/// Electromagnetic metric of a static point charge: A_α = 0, A5 = e/r.
Metric6<double> coulomb_metric(double charge);

/// Fermion metric with K̂ from the K vector of `spec`, evaluated at each event.
Metric6<Complex> fermion_metric_for(const ParticleSpec& spec, const SpinorOptions& options = {});

}  // namespace multitime

#include "multitime/residuals.hpp"

#include <cmath>
#include <sstream>

namespace multitime {

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::scalar:
      return "scalar";
    case MetricKind::vector:
      return "vector";
    case MetricKind::electromagnetic:
      return "electromagnetic";
    case MetricKind::fermion:
      return "fermion";
    case MetricKind::custom:
      return "custom";
  }
  return "unknown";
}

ResidualReport ResidualReport::make(std::string name, double value, double tolerance,
                                    std::string context) {
  ResidualReport r;
  r.name = std::move(name);
  r.value = value;
  r.tolerance = tolerance;
  r.pass = value <= tolerance;
  r.context = std::move(context);
  return r;
}

namespace {

std::string probe_context(const CurvatureProbe& probe) {
  std::ostringstream os;
  os << "order=" << probe.order << " step=" << probe.step;
  return os.str();
}

constexpr std::array<double, 4> kEta{1.0, -1.0, -1.0, -1.0};

}  // namespace

ResidualReport kg_residual(const ScalarWave& w, const CurvatureProbe& probe, double tolerance) {
  probe.validate();
  const auto psi = [&](const Event6& e) { return scalar_psi(w, e); };
  Complex box = 0.0;
  for (int a = 0; a < 4; ++a) {
    box += kEta[a] * central_second_derivative(psi, probe.event, a, probe.step, probe.order);
  }
  const double value = std::abs(box + w.m0 * w.m0 * psi(probe.event));
  std::ostringstream os;
  os << probe_context(probe) << " shell_defect=" << w.shell_defect();
  return ResidualReport::make("klein_gordon", value, tolerance, os.str());
}

Vector4<Complex> ProcaWave::potential(const Event6& e) const {
  const double phase = p[0] * e[0] - p.tail<3>().dot(e.spatial());
  return polarization * std::polar(1.0, phase);
}

ProcaResult proca_residual(const ProcaWave& w, const CurvatureProbe& probe, double tolerance) {
  probe.validate();
  const auto A = [&](const Event6& e) { return w.potential(e); };
  // F[α](β) = ∂_α A_β - ∂_β A_α, assembled as a matrix at each point
  const auto F = [&](const Event6& e) {
    Matrix4<Complex> dA;  // dA(α, β) = ∂_α A_β
    for (int a = 0; a < 4; ++a) {
      dA.row(a) = central_derivative(A, e, a, probe.step, probe.order).transpose();
    }
    return Matrix4<Complex>(dA - dA.transpose());
  };

  Vector4<Complex> div = Vector4<Complex>::Zero();  // ∂^α F_αβ
  for (int a = 0; a < 4; ++a) {
    const Matrix4<Complex> dF = central_derivative(F, probe.event, a, probe.step, probe.order);
    div += kEta[a] * dF.row(a).transpose();
  }
  const Vector4<Complex> A0 = A(probe.event);
  const double m2 = w.m0 * w.m0;
  const double value = (div + m2 * A0).norm();

  const Matrix4<Complex> F0 = F(probe.event);
  Complex ff = 0.0;
  Complex aa = 0.0;
  for (int a = 0; a < 4; ++a) {
    aa += kEta[a] * A0[a] * A0[a];
    for (int b = 0; b < 4; ++b) ff += kEta[a] * kEta[b] * F0(a, b) * F0(a, b);
  }

  std::ostringstream os;
  os << probe_context(probe) << " m0=" << w.m0
     << " shell_defect=" << (w.p[0] * w.p[0] - w.p.tail<3>().squaredNorm() - m2);
  return {ResidualReport::make("proca", value, tolerance, os.str()), 0.25 * ff - 0.5 * m2 * aa};
}

double coulomb_potential(double charge, const Event6& e) {
  if (charge == 0.0) return 0.0;
  return charge / e.spatial().norm();
}

ResidualReport coulomb_check(double charge, const CurvatureProbe& probe, double tolerance) {
  probe.validate();
  const double r = probe.event.spatial().norm();
  if (r <= 10.0 * probe.step) {
    std::ostringstream os;
    os << "probe at r=" << r << " lies within 10 steps of the point charge";
    throw SingularityProximity(os.str());
  }
  std::ostringstream os;
  os << probe_context(probe) << " r=" << r << " e=" << charge;
  if (charge == 0.0) return ResidualReport::make("coulomb", 0.0, tolerance, os.str());

  const auto a5 = [&](const Event6& e) { return coulomb_potential(charge, e); };
  double laplacian = 0.0;
  for (int a = 1; a <= 3; ++a) {
    laplacian += central_second_derivative(a5, probe.event, a, probe.step, probe.order);
  }
  const double scale = std::abs(charge) / (r * r * r);
  return ResidualReport::make("coulomb", std::abs(laplacian) / scale, tolerance, os.str());
}

Metric6<double> coulomb_metric(double charge) {
  return electromagnetic_metric<double>([](const Event6&) { return Vector4d::Zero().eval(); },
                                        [charge](const Event6& e) {
                                          return coulomb_potential(charge, e);
                                        });
}

Metric6<Complex> fermion_metric_for(const ParticleSpec& spec, const SpinorOptions& options) {
  spec.validate();
  return fermion_metric<Complex>(
      [spec, options](const Event6& e) { return k_vector(spec, e, options).K; },
      [spec, options](const Event6& e) { return k_vector(spec, e, options).K5; });
}

}  // namespace multitime

#pragma once

#include <Eigen/LU>
#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <string>

#include "multitime/metric.hpp"

namespace multitime {

/// Where and how finely to difference.
struct CurvatureProbe {
  Event6 event;
  double step = 1e-3;
  int order = 4;

  void validate() const {
    if (!(step > 0.0)) throw ConfigurationError("finite-difference step must be positive");
    if (order != 2 && order != 4) throw ConfigurationError("stencil order must be 2 or 4");
  }
};

/// Central first derivative of f along `axis` at e.
template <typename F>
auto central_derivative(const F& f, const Event6& e, int axis, double h, int order) {
  if (order == 2) {
    return ((f(e.shifted(axis, h)) - f(e.shifted(axis, -h))) / (2.0 * h)).eval();
  }
  return ((f(e.shifted(axis, -2.0 * h)) - 8.0 * f(e.shifted(axis, -h)) +
           8.0 * f(e.shifted(axis, h)) - f(e.shifted(axis, 2.0 * h))) /
          (12.0 * h))
      .eval();
}

/// Central second derivative of a scalar-valued f along `axis` at e.
template <typename F>
auto central_second_derivative(const F& f, const Event6& e, int axis, double h, int order) {
  const auto f0 = f(e);
  if (order == 2) {
    return (f(e.shifted(axis, h)) - 2.0 * f0 + f(e.shifted(axis, -h))) / (h * h);
  }
  return (-f(e.shifted(axis, 2.0 * h)) + 16.0 * f(e.shifted(axis, h)) - 30.0 * f0 +
          16.0 * f(e.shifted(axis, -h)) - f(e.shifted(axis, -2.0 * h))) /
         (12.0 * h * h);
}

/// Γ^A_{BC} stored as gamma[A](B, C).
template <typename Scalar>
struct Christoffel {
  std::array<Matrix6<Scalar>, 6> gamma;
  double condition_number = 1.0;

  Scalar operator()(int a, int b, int c) const { return gamma[a](b, c); }
};

/// Condition number of g; throws SingularMetric above `limit`.
template <typename Scalar>
double checked_condition_number(const Matrix6<Scalar>& g, double limit = 1e12) {
  Eigen::JacobiSVD<Matrix6<Scalar>> svd(g);
  const auto& s = svd.singularValues();
  const double smax = s[0];
  const double smin = s[5];
  const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(cond <= limit)) {
    throw SingularMetric("metric is singular at the probe (condition number " +
                             std::to_string(cond) + ")",
                         cond);
  }
  return cond;
}

/// Γ^A_{BC} = ½ g^{AD}(∂_B g_{DC} + ∂_C g_{DB} - ∂_D g_{BC}) by central
/// differences of the metric.
template <typename Scalar>
Christoffel<Scalar> christoffel(const Metric6<Scalar>& m, const CurvatureProbe& probe) {
  probe.validate();
  const Matrix6<Scalar> g = m(probe.event);
  Christoffel<Scalar> out;
  out.condition_number = checked_condition_number(g);
  const Matrix6<Scalar> g_inv = g.inverse();

  std::array<Matrix6<Scalar>, 6> dg;  // dg[D] = ∂_D g
  for (int d = 0; d < 6; ++d) {
    dg[d] = central_derivative(m, probe.event, d, probe.step, probe.order);
  }

  // lowered[D](B, C) = ½(∂_B g_DC + ∂_C g_DB - ∂_D g_BC)
  std::array<Matrix6<Scalar>, 6> lowered;
  for (int d = 0; d < 6; ++d) {
    for (int b = 0; b < 6; ++b) {
      for (int c = b; c < 6; ++c) {
        const Scalar v = Scalar(0.5) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        lowered[d](b, c) = v;
        lowered[d](c, b) = v;
      }
    }
  }
  for (int a = 0; a < 6; ++a) {
    out.gamma[a].setZero();
    for (int d = 0; d < 6; ++d) out.gamma[a] += g_inv(a, d) * lowered[d];
  }
  return out;
}

template <typename Scalar>
struct CurvatureResult {
  Matrix6<Scalar> ricci = Matrix6<Scalar>::Zero();
  Scalar scalar_curvature = Scalar(0);
  Matrix6<Scalar> einstein = Matrix6<Scalar>::Zero();
  double condition_number = 1.0;
  /// Richardson estimate |G(h) - G(2h)| / (2^order - 1), max over entries;
  /// negative when not requested.
  double truncation_error = -1.0;
};

namespace detail {

template <typename Scalar>
CurvatureResult<Scalar> curvature_at_step(const Metric6<Scalar>& m, const CurvatureProbe& probe) {
  const Christoffel<Scalar> G = christoffel(m, probe);
  std::array<std::array<Matrix6<Scalar>, 6>, 6> dG;  // dG[C][A] = ∂_C Γ^A
  for (int c = 0; c < 6; ++c) {
    for (int a = 0; a < 6; ++a) dG[c][a].setZero();
  }
  const double h = probe.step;
  const auto gamma_at = [&](double offset, int axis) {
    CurvatureProbe shifted = probe;
    shifted.event = probe.event.shifted(axis, offset);
    return christoffel(m, shifted);
  };
  for (int c = 0; c < 6; ++c) {
    if (probe.order == 2) {
      const auto gp = gamma_at(h, c);
      const auto gm = gamma_at(-h, c);
      for (int a = 0; a < 6; ++a) dG[c][a] = (gp.gamma[a] - gm.gamma[a]) / (2.0 * h);
    } else {
      const auto gp2 = gamma_at(2.0 * h, c);
      const auto gp = gamma_at(h, c);
      const auto gm = gamma_at(-h, c);
      const auto gm2 = gamma_at(-2.0 * h, c);
      for (int a = 0; a < 6; ++a) {
        dG[c][a] = (gm2.gamma[a] - 8.0 * gm.gamma[a] + 8.0 * gp.gamma[a] - gp2.gamma[a]) /
                   (12.0 * h);
      }
    }
  }

  // R_BD = ∂_A Γ^A_DB - ∂_D Γ^A_AB + Γ^A_AE Γ^E_DB - Γ^A_DE Γ^E_AB
  CurvatureResult<Scalar> r;
  r.condition_number = G.condition_number;
  Vector6<Scalar> trace;  // Γ^A_AE
  for (int e = 0; e < 6; ++e) {
    trace[e] = Scalar(0);
    for (int a = 0; a < 6; ++a) trace[e] += G(a, a, e);
  }
  for (int b = 0; b < 6; ++b) {
    for (int d = b; d < 6; ++d) {
      Scalar v(0);
      for (int a = 0; a < 6; ++a) {
        v += dG[a][a](d, b) - dG[d][a](a, b);
        for (int e = 0; e < 6; ++e) v -= G(a, d, e) * G(e, a, b);
      }
      for (int e = 0; e < 6; ++e) v += trace[e] * G(e, d, b);
      r.ricci(b, d) = v;
      r.ricci(d, b) = v;
    }
  }
  const Matrix6<Scalar> g = m(probe.event);
  const Matrix6<Scalar> g_inv = g.inverse();
  r.scalar_curvature = g_inv.cwiseProduct(r.ricci).sum();
  r.einstein = r.ricci - Scalar(0.5) * r.scalar_curvature * g;
  return r;
}

}  // namespace detail

/// Ricci tensor, scalar curvature and G_AB = R_AB - ½ g_AB R at the probe.
/// The Christoffel symbols are differenced once more with the same stencil.
/// G_AB/κ stands in for the stress-energy T_AB; no matter model is built.
template <typename Scalar>
CurvatureResult<Scalar> einstein_tensor(const Metric6<Scalar>& m, const CurvatureProbe& probe,
                                        bool estimate_error = true) {
  probe.validate();
  CurvatureResult<Scalar> r = detail::curvature_at_step(m, probe);
  if (estimate_error) {
    CurvatureProbe coarse = probe;
    coarse.step = 2.0 * probe.step;
    const auto rc = detail::curvature_at_step(m, coarse);
    const double factor = probe.order == 2 ? 3.0 : 15.0;
    r.truncation_error = (r.einstein - rc.einstein).cwiseAbs().maxCoeff() / factor;
  }
  return r;
}

}  // namespace multitime

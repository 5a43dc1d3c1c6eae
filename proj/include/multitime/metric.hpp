#pragma once

#include <functional>
#include <utility>

#include "multitime/core.hpp"

namespace multitime {

/// The four metric families plus caller-supplied fixtures.
enum class MetricKind { scalar, vector, electromagnetic, fermion, custom };

const char* to_string(MetricKind kind);

/// Position-dependent fields entering a metric family.
///
///   scalar:          psi
///   vector:          potential (Â_α)
///   electromagnetic: potential (A_α) and fifth (A5)
///   fermion:         potential (K̂_α) and fifth (K̂5)
template <typename Scalar>
struct MetricFieldData {
  std::function<Scalar(const Event6&)> psi;
  std::function<Vector4<Scalar>(const Event6&)> potential;
  std::function<Scalar(const Event6&)> fifth;
  std::function<Matrix6<Scalar>(const Event6&)> custom;
};

/// Symmetric 6x6 metric over (x0, ..., x5), templated on the entry type so
/// that the complex scalar and fermion families share the machinery of the
/// real ones.
template <typename Scalar>
class Metric6 {
 public:
  Metric6(MetricKind kind, MetricFieldData<Scalar> data) : kind_(kind), data_(std::move(data)) {
    switch (kind_) {
      case MetricKind::scalar:
        if (!data_.psi) throw ConfigurationError("scalar metric needs psi");
        break;
      case MetricKind::vector:
        if (!data_.potential) throw ConfigurationError("vector metric needs the potential");
        break;
      case MetricKind::electromagnetic:
      case MetricKind::fermion:
        if (!data_.potential || !data_.fifth) {
          throw ConfigurationError(std::string(to_string(kind_)) +
                                   " metric needs the 4-potential and its fifth component");
        }
        break;
      case MetricKind::custom:
        if (!data_.custom) throw ConfigurationError("custom metric needs an evaluator");
        break;
    }
  }

  MetricKind kind() const { return kind_; }

  Matrix6<Scalar> operator()(const Event6& e) const {
    Matrix6<Scalar> g = Matrix6<Scalar>::Zero();
    g.template topLeftCorner<4, 4>() = minkowski<Scalar>();
    switch (kind_) {
      case MetricKind::scalar: {
        const Scalar psi = data_.psi(e);
        g(4, 4) = psi * psi;
        g(5, 5) = Scalar(-1);
        return g;
      }
      case MetricKind::custom:
        return data_.custom(e);
      default:
        break;
    }
    // g = diag(η, 0, -1) + w wᵀ with w = (A_α, 1, A5)
    Vector6<Scalar> w;
    w << potential(e), Scalar(1), fifth(e);
    g(5, 5) = Scalar(-1);
    g += w * w.transpose();
    return g;
  }

  /// Â_α, A_α or K̂_α at e; zero for the scalar family.
  Vector4<Scalar> potential(const Event6& e) const {
    if (!data_.potential) return Vector4<Scalar>::Zero();
    return data_.potential(e);
  }

  /// Coefficient of dx5 inside the completed square; zero for the vector family.
  Scalar fifth(const Event6& e) const {
    if (kind_ == MetricKind::vector || !data_.fifth) return Scalar(0);
    return data_.fifth(e);
  }

  Scalar psi(const Event6& e) const { return data_.psi ? data_.psi(e) : Scalar(1); }

 private:
  MetricKind kind_;
  MetricFieldData<Scalar> data_;
};

template <typename Scalar>
Metric6<Scalar> build_metric(MetricKind kind, MetricFieldData<Scalar> data) {
  return Metric6<Scalar>(kind, std::move(data));
}

template <typename Scalar>
Metric6<Scalar> scalar_metric(std::function<Scalar(const Event6&)> psi) {
  MetricFieldData<Scalar> d;
  d.psi = std::move(psi);
  return Metric6<Scalar>(MetricKind::scalar, std::move(d));
}

template <typename Scalar>
Metric6<Scalar> vector_metric(std::function<Vector4<Scalar>(const Event6&)> potential) {
  MetricFieldData<Scalar> d;
  d.potential = std::move(potential);
  return Metric6<Scalar>(MetricKind::vector, std::move(d));
}

template <typename Scalar>
Metric6<Scalar> electromagnetic_metric(std::function<Vector4<Scalar>(const Event6&)> potential,
                                       std::function<Scalar(const Event6&)> a5) {
  MetricFieldData<Scalar> d;
  d.potential = std::move(potential);
  d.fifth = std::move(a5);
  return Metric6<Scalar>(MetricKind::electromagnetic, std::move(d));
}

template <typename Scalar>
Metric6<Scalar> fermion_metric(std::function<Vector4<Scalar>(const Event6&)> k,
                               std::function<Scalar(const Event6&)> k5) {
  MetricFieldData<Scalar> d;
  d.potential = std::move(k);
  d.fifth = std::move(k5);
  return Metric6<Scalar>(MetricKind::fermion, std::move(d));
}

template <typename Scalar>
Metric6<Scalar> custom_metric(std::function<Matrix6<Scalar>(const Event6&)> g) {
  MetricFieldData<Scalar> d;
  d.custom = std::move(g);
  return Metric6<Scalar>(MetricKind::custom, std::move(d));
}

/// ds² = g_AB dx^A dx^B at e. Bilinear: complex entries are not conjugated.
template <typename Scalar>
Scalar interval(const Metric6<Scalar>& m, const Vector6<Scalar>& dx, const Event6& e) {
  return dx.cwiseProduct(m(e) * dx).sum();
}

/// Interval in the adapted coordinate dx4' = A_α dx^α + A5 dx5 + dx4, where
/// the metric takes the flat form dx_α dx^α - dx5² + (dx4')².
template <typename Scalar>
Scalar local_flat_interval(const Metric6<Scalar>& m, const Vector6<Scalar>& dx, const Event6& e) {
  if (m.kind() == MetricKind::scalar || m.kind() == MetricKind::custom) {
    throw ConfigurationError(std::string("no local flat coordinate for the ") + to_string(m.kind()) +
                             " metric");
  }
  const Vector4<Scalar> d4 = dx.template head<4>();
  const Scalar dx4_new = m.potential(e).cwiseProduct(d4).sum() + m.fifth(e) * dx[5] + dx[4];
  const Scalar flat = d4[0] * d4[0] - d4[1] * d4[1] - d4[2] * d4[2] - d4[3] * d4[3];
  return flat - dx[5] * dx[5] + dx4_new * dx4_new;
}

}  // namespace multitime

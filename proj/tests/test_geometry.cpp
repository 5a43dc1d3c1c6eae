#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "multitime/residuals.hpp"
#include "oracle_values.hpp"

using namespace multitime;

namespace {

std::mt19937_64 rng(99);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Event6 random_event(double span = 2.0) {
  Vector6d x;
  for (int i = 0; i < 6; ++i) x[i] = uniform(-span, span);
  return Event6(x);
}

Metric6<double> flat() {
  return custom_metric<double>([](const Event6&) {
    Matrix6<double> g = Matrix6<double>::Zero();
    g.topLeftCorner<4, 4>() = minkowski<double>();
    g(4, 4) = 1.0;
    g(5, 5) = -1.0;
    return g;
  });
}

Metric6<double> expanding() {
  return custom_metric<double>([](const Event6& e) {
    Vector6d d;
    d << 1.0, -std::exp(2.0 * e[0]), -1.0, -1.0, 1.0, -1.0;
    return Matrix6<double>(d.asDiagonal());
  });
}

// flat 4D block times a unit 2-sphere in (x4, x5)
Metric6<double> product_sphere() {
  return custom_metric<double>([](const Event6& e) {
    Matrix6<double> g = Matrix6<double>::Zero();
    g.topLeftCorner<4, 4>() = minkowski<double>();
    g(4, 4) = 1.0;
    g(5, 5) = std::pow(std::sin(e.x4()), 2);
    return g;
  });
}

Metric6<double> smooth_vector() {
  return vector_metric<double>([](const Event6& e) {
    return Vector4d(0.3 * std::sin(e[0] + e[1]), 0.2 * std::cos(e[2]), 0.1 * e[3], 0.05 * e[0] * e[1]);
  });
}

double sphere_error(double step, int order) {
  const Event6 e(0.0, 0.0, 0.0, 0.0, 1.0, 0.3);
  const auto r = einstein_tensor(product_sphere(), {e, step, order}, false);
  Matrix6<double> expected = Matrix6<double>::Zero();
  expected(4, 4) = 1.0;
  expected(5, 5) = std::pow(std::sin(1.0), 2);
  return (r.ricci - expected).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("vector metric with zero potential is flat") {
  const auto m = vector_metric<double>([](const Event6&) { return Vector4d::Zero().eval(); });
  const Matrix6<double> g = m(Event6(1, 2, 3, 4, 5, 6));
  Vector6d d;
  d << 1, -1, -1, -1, 1, -1;
  CHECK(g == Matrix6<double>(d.asDiagonal()));
}

TEST_CASE("electromagnetic metric of a point charge") {
  const auto m = coulomb_metric(1.0);
  const Matrix6<double> g = m(Event6(0.0, 2.0, 0.0, 0.0));
  CHECK(g(5, 5) == doctest::Approx(-0.75));
  CHECK(g(4, 5) == doctest::Approx(0.5));
  CHECK(g(4, 4) == 1.0);
  CHECK(g(0, 5) == 0.0);
}

TEST_CASE("metric families need their fields") {
  CHECK_THROWS_AS(build_metric<double>(MetricKind::scalar, {}), ConfigurationError);
  CHECK_THROWS_AS(build_metric<double>(MetricKind::vector, {}), ConfigurationError);
  MetricFieldData<double> only_potential;
  only_potential.potential = [](const Event6&) { return Vector4d::Zero().eval(); };
  CHECK_THROWS_AS(build_metric<double>(MetricKind::electromagnetic, only_potential), ConfigurationError);
  CHECK_THROWS_AS(build_metric<double>(MetricKind::custom, {}), ConfigurationError);
}

TEST_CASE("property: metrics are symmetric") {
  const auto spec = ParticleSpec::fermion(1.0, Vector3d(0.3, -0.2, 0.4));
  SpinorOptions opts;
  opts.extended_normal = true;
  const auto fm = fermion_metric_for(spec, opts);
  const auto vm = smooth_vector();
  const auto em = coulomb_metric(-2.0);
  for (int k = 0; k < 1000; ++k) {
    const Event6 e = random_event();
    const Matrix6<Complex> gf = fm(e);
    CHECK((gf - gf.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const Matrix6<double> gv = vm(e);
    CHECK((gv - gv.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const Matrix6<double> ge = em(e);
    CHECK((ge - ge.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("scalar metric") {
  const auto m = scalar_metric<double>([](const Event6& e) { return 2.0 + std::sin(e[0]); });
  for (int k = 0; k < 100; ++k) {
    const Event6 e = random_event();
    const double psi = 2.0 + std::sin(e[0]);
    const Matrix6<double> g = m(e);
    CHECK(g(4, 4) == doctest::Approx(psi * psi));
    // det diag(η) = -1, times ψ² and the -1 of x5
    CHECK(g.determinant() == doctest::Approx(psi * psi).epsilon(1e-12));
  }
  CHECK_THROWS_AS(local_flat_interval(m, Vector6d::Ones().eval(), Event6()), ConfigurationError);
}

TEST_CASE("property: adapted coordinate flattens the interval") {
  const auto vm = smooth_vector();
  const auto em = coulomb_metric(0.7);
  const auto spec = ParticleSpec::fermion(1.2, Vector3d(0.1, 0.5, -0.2));
  SpinorOptions opts;
  opts.extended_normal = true;
  const auto fm = fermion_metric_for(spec, opts);
  for (int k = 0; k < 1000; ++k) {
    Event6 e = random_event();
    if (e.spatial().norm() < 0.2) continue;
    Vector6d dx;
    for (int i = 0; i < 6; ++i) dx[i] = uniform(-1, 1);
    CHECK(std::abs(interval(vm, dx, e) - local_flat_interval(vm, dx, e)) < 1e-12);
    CHECK(std::abs(interval(em, dx, e) - local_flat_interval(em, dx, e)) < 1e-11);
    const Vector6<Complex> dz = dx.cast<Complex>();
    CHECK(std::abs(interval(fm, dz, e) - local_flat_interval(fm, dz, e)) < 1e-11);
  }
}

TEST_CASE("complex interval is bilinear, not sesquilinear") {
  const auto m = scalar_metric<Complex>([](const Event6&) { return Complex(0.0, 1.0); });
  Vector6<Complex> dx = Vector6<Complex>::Zero();
  dx[4] = 1.0;
  // g44 = ψ² = -1; a conjugating product would give +1
  CHECK(interval(m, dx, Event6()) == Complex(-1.0, 0.0));
}

TEST_CASE("christoffel symbols") {
  const auto g = christoffel(flat(), {Event6(0.1, 0.2, 0.3, 0.4, 0.5, 0.6), 1e-3, 4});
  for (int a = 0; a < 6; ++a) CHECK(g.gamma[a].cwiseAbs().maxCoeff() == 0.0);

  const auto x = christoffel(expanding(), {Event6(0.2, 0, 0, 0), 1e-3, 2});
  CHECK(std::abs(x(1, 0, 1) - 1.0) < 2e-6);
  CHECK(std::abs(x(1, 0, 1) - 1.0) == doctest::Approx(oracle::kGammaFdErrorOrder2).epsilon(1e-3));
  // Γ⁰₁₁ = e^{2x0}
  CHECK(x(0, 1, 1) == doctest::Approx(std::exp(0.4)).epsilon(1e-5));

  const auto vm = smooth_vector();
  for (int k = 0; k < 50; ++k) {
    const auto c = christoffel(vm, {random_event(), 1e-3, 4});
    for (int a = 0; a < 6; ++a) CHECK((c.gamma[a] - c.gamma[a].transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("singular metric is rejected") {
  const auto m = custom_metric<double>([](const Event6&) {
    Matrix6<double> g = Matrix6<double>::Identity();
    g(5, 5) = 0.0;
    return g;
  });
  CHECK_THROWS_AS(christoffel(m, {Event6(), 1e-3, 4}), SingularMetric);
  try {
    christoffel(m, {Event6(), 1e-3, 4});
  } catch (const SingularMetric& err) {
    CHECK(err.condition_number() > 1e12);
  }
  CHECK_THROWS_AS((CurvatureProbe{Event6(), 0.0, 4}).validate(), ConfigurationError);
  CHECK_THROWS_AS((CurvatureProbe{Event6(), 1e-3, 3}).validate(), ConfigurationError);
}

TEST_CASE("einstein tensor of flat space vanishes") {
  const auto r = einstein_tensor(flat(), {Event6(0.3, 0.2, -0.1, 0.4, 0.0, 0.25), 1e-3, 4});
  CHECK(r.einstein.cwiseAbs().maxCoeff() < 1e-8);
  CHECK(r.truncation_error >= 0.0);
  CHECK(r.truncation_error < 1e-8);
}

TEST_CASE("product sphere curvature") {
  CHECK(sphere_error(1e-3, 4) < 1e-5);
  const Event6 e(0.0, 0.0, 0.0, 0.0, 1.0, 0.3);
  const auto r = einstein_tensor(product_sphere(), {e, 1e-3, 4});
  CHECK(r.scalar_curvature == doctest::Approx(2.0).epsilon(1e-5));
  CHECK((r.einstein - r.einstein.transpose()).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(r.truncation_error >= 0.0);
}

TEST_CASE("curvature error shrinks with the stencil order") {
  const double coarse = sphere_error(0.04, 4);
  const double fine = sphere_error(0.02, 4);
  CHECK(coarse / fine >= std::pow(2.0, 3.5));
  const double c2 = sphere_error(0.02, 2);
  const double f2 = sphere_error(0.01, 2);
  CHECK(c2 / f2 >= std::pow(2.0, 1.5));
}

TEST_CASE("property: einstein tensor of a smooth vector metric is symmetric") {
  const auto vm = smooth_vector();
  for (int k = 0; k < 5; ++k) {
    const auto r = einstein_tensor(vm, {random_event(1.0), 1e-2, 4}, false);
    CHECK((r.einstein - r.einstein.transpose()).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("klein-gordon residual") {
  const CurvatureProbe probe{Event6(0.3, 0.2, -0.1, 0.4, 0.0, 0.25), 1e-2, 4};
  for (double u : {0.0, 0.3, 0.8}) {
    const auto w = ScalarWave::on_shell(1.0, Vector3d(u, 0, 0));
    const auto r = kg_residual(w, probe);
    CHECK(r.pass);
    CHECK(r.value < 1e-6);
  }
  auto cos_wave = ScalarWave::on_shell(1.5, Vector3d(0, 0.4, 0.2), WaveForm::cosine);
  CHECK(kg_residual(cos_wave, probe).pass);

  // massless constant ψ
  ScalarWave still;
  still.p = Vector4d::Zero();
  still.m0 = 0.0;
  CHECK(kg_residual(still, probe).value == 0.0);

  // off shell by δ: residual ≈ |δ (2E + δ)| |ψ|
  auto off = ScalarWave::on_shell(1.0, Vector3d(0.5, 0, 0));
  const double E = off.p[0];
  off.p[0] += 0.1;
  const double expected = std::abs((E + 0.1) * (E + 0.1) - E * E);
  const auto r = kg_residual(off, probe);
  CHECK(!r.pass);
  CHECK(std::abs(r.value - expected) / expected < 0.05);
}

TEST_CASE("klein-gordon convergence order") {
  auto w = ScalarWave::on_shell(1.0, Vector3d(0.5, 0, 0));
  const Event6 e(0.3, 0.2, -0.1, 0.4, 0.0, 0.25);
  const double r1 = kg_residual(w, {e, 0.2, 4}).value;
  const double r2 = kg_residual(w, {e, 0.1, 4}).value;
  CHECK(std::abs(std::log2(r1 / r2) - 4.0) <= 0.5);
}

TEST_CASE("proca residuals") {
  const CurvatureProbe probe{Event6(0.3, 0.2, -0.1, 0.4, 0.0, 0.25), 1e-2, 4};
  ProcaWave maxwell;
  maxwell.polarization << 0.0, 1.0, 0.0, 0.0;
  maxwell.p << 1.0, 0.0, 0.0, 1.0;
  const auto a = proca_residual(maxwell, probe);
  CHECK(a.report.value < 1e-6);
  // null transverse wave: F² vanishes
  CHECK(std::abs(a.invariant) < 1e-6);

  const double m = 1.0;
  const double p3 = 0.75;
  const double E = std::sqrt(p3 * p3 + m * m);
  ProcaWave massive;
  massive.p << E, 0.0, 0.0, p3;
  massive.m0 = m;
  massive.polarization << p3, 0.0, 0.0, -E;
  CHECK(proca_residual(massive, probe).report.value < 1e-6);

  ProcaWave broken;
  broken.polarization << 0.0, 0.0, 0.0, 1.0;
  broken.p << 1.0, 0.0, 0.0, 1.0;
  const auto b = proca_residual(broken, probe);
  CHECK(b.report.value > 0.1);
  CHECK(b.report.value == doctest::Approx(oracle::kProcaLongitudinal).epsilon(1e-6));
  CHECK(!b.report.pass);
}

TEST_CASE("coulomb potential is harmonic away from the charge") {
  for (double r : {0.5, 1.0, 2.0}) {
    const Vector3d x = r * Vector3d(1, 1, 1).normalized();
    const CurvatureProbe probe{Event6(0.0, x[0], x[1], x[2]), 1e-3, 4};
    const auto rep = coulomb_check(1.0, probe);
    CHECK(rep.value < 1e-5);
    CHECK(rep.pass);
    CHECK(coulomb_check(-3.0, probe).value < 1e-5);
  }
  CHECK(coulomb_check(0.0, {Event6(0, 1, 0, 0), 1e-3, 4}).value == 0.0);
  CHECK(coulomb_potential(2.0, Event6(0, 0, 4, 0)) == 0.5);
  CHECK_THROWS_AS(coulomb_check(1.0, {Event6(0, 0.005, 0, 0), 1e-3, 4}), SingularityProximity);
}

TEST_CASE("residual report") {
  const auto r = ResidualReport::make("x", 1.0, 1.0);
  CHECK(r.pass);
  CHECK(!ResidualReport::make("x", 1.5, 1.0).pass);
  CHECK(!ResidualReport::make("x", std::nan(""), 1.0).pass);
}

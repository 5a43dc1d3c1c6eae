#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "multitime/fields.hpp"
#include "oracle_values.hpp"

using namespace multitime;

namespace {

std::mt19937_64 rng(4242);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Event6 random_event() {
  return Event6(uniform(-3, 3), uniform(-3, 3), uniform(-3, 3), uniform(-3, 3), uniform(-3, 3),
                uniform(-3, 3));
}

Vector3d random_velocity(double max_speed) {
  while (true) {
    Vector3d u(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    if (u.norm() <= 1.0 && u.norm() > 1e-3) return u * max_speed;
  }
}

}  // namespace

TEST_CASE("ladder coefficients at t = 0") {
  const auto pair = ladder_decompose(ParticleSpec::spinless(1.0), 0.0);
  CHECK(pair.a == Complex(kPi / 2.0, 0.0));
  CHECK(pair.a_star == Complex(kPi / 2.0, 0.0));
  const auto boson = ladder_decompose(ParticleSpec::boson(2.0), 0.0);
  CHECK(boson.a == Complex(kPi / 2.0, 0.0));
}

TEST_CASE("ladder coefficient at E t = pi") {
  const auto pair = ladder_decompose(ParticleSpec::spinless(1.0), kPi);
  CHECK(pair.a.real() == doctest::Approx(oracle::kLadderAtPi).epsilon(1e-15));
  CHECK(std::abs(pair.a.imag()) < 1e-15);
}

TEST_CASE("photon and fermion have no ladder form") {
  CHECK_THROWS_AS(ladder_decompose(ParticleSpec::photon(1.0), 0.0), Unsupported);
  CHECK_THROWS_AS(ladder_decompose(ParticleSpec::fermion(1.0), 0.0), Unsupported);
}

TEST_CASE("property: ladder round trip reproduces the world-line value") {
  for (int k = 0; k < 500; ++k) {
    const auto s = ParticleSpec::spinless(uniform(0.1, 3), random_velocity(0.9));
    const auto b = ParticleSpec::boson(uniform(0.1, 3), random_velocity(0.9));
    const double t = uniform(-4, 4);
    const Vector3d x(uniform(-4, 4), uniform(-4, 4), uniform(-4, 4));
    CHECK(std::abs(ladder_recompose(ladder_decompose(s, t), s, x) - spinless_moving_sigma(t, x, s)) <
          1e-12);
    CHECK(std::abs(ladder_recompose(ladder_decompose(b, t), b, x) - boson_value(b, t, x)) < 1e-12);
    const auto pair = ladder_decompose(s, t);
    CHECK(pair.a_star == std::conj(pair.a));
  }
}

TEST_CASE("scalar wave") {
  const auto w = ScalarWave::on_shell(1.0, Vector3d(0.6, 0, 0));
  CHECK(w.p[0] == doctest::Approx(1.25));
  CHECK(w.p[1] == doctest::Approx(0.75));
  CHECK(std::abs(w.shell_defect()) < 1e-15);
  CHECK(scalar_psi(w, Event6()) == Complex(1.0, 0.0));

  ScalarWave off = w;
  off.p[0] += 0.1;
  CHECK(off.shell_defect() > 0.0);

  auto c = w;
  c.form = WaveForm::cosine;
  for (int k = 0; k < 500; ++k) {
    const Event6 e = random_event();
    const Complex psi = scalar_psi(w, e);
    CHECK(std::abs(std::abs(psi) - 1.0) < 1e-14);
    CHECK(scalar_psi(c, e).real() == doctest::Approx(psi.real()).epsilon(1e-14).scale(1.0));
    CHECK(scalar_psi(c, e).imag() == 0.0);
  }
}

TEST_CASE("scalar wave carries the mass in the x5 dependence") {
  const auto w = ScalarWave::on_shell(2.0, Vector3d::Zero());
  const Complex a = scalar_psi(w, Event6(0, 0, 0, 0, 0, 0.25));
  CHECK(a.real() == doctest::Approx(std::cos(0.5)));
  CHECK(a.imag() == doctest::Approx(-std::sin(0.5)));
}

TEST_CASE("property: field vectors are transverse and mutually orthogonal") {
  const auto photon = ParticleSpec::photon(1.7);
  for (int k = 0; k < 300; ++k) {
    const Event6 e = random_event();
    const auto f = photon_field_vectors(photon, e);
    CHECK(f.first.dot(f.second) == 0.0);
    CHECK(f.first[2] == 0.0);
    CHECK(f.second[2] == 0.0);

    const auto boson = ParticleSpec::boson(1.0, random_velocity(0.8));
    const auto v = boson_field_vectors(boson, e);
    const Vector3d n = boson.direction();
    CHECK(std::abs(v.first.dot(v.second)) < 1e-12);
    CHECK(std::abs(v.first.dot(n)) < 1e-12);
    CHECK(std::abs(v.second.dot(n)) < 1e-12);
  }
}

TEST_CASE("photon field magnitudes follow the world lines") {
  auto spec = ParticleSpec::photon(1.0);
  spec.alpha_e = 2.0;
  spec.alpha_b = 0.5;
  const Event6 e(0.2, 0, 0, 0.7);
  const auto f = photon_field_vectors(spec, e);
  CHECK(f.first[0] == doctest::Approx(2.0 * photon_sigma(spec, 0.2, 0.7)));
  CHECK(f.second[1] == doctest::Approx(0.5 * photon_phi(spec, 0.2, 0.7)));
}

TEST_CASE("dirac components for motion along x3") {
  const auto spec = ParticleSpec::fermion(1.0, Vector3d(0, 0, 0.6));
  const auto d = dirac_components(spec, Event6(0.3, 0.1, -0.2, 0.5));
  CHECK(d.psi1 == Complex(0.0, 0.0));
  CHECK(std::abs(d.psi2) == doctest::Approx(oracle::kSinhHalf06).epsilon(1e-14));
  CHECK(std::abs(d.psi3 - 1.0) == doctest::Approx(oracle::kCoshHalf06).epsilon(1e-14));
}

TEST_CASE("dirac components at rest") {
  const double m0 = 1.3;
  const auto spec = ParticleSpec::fermion(m0);
  for (double t : {0.0, 0.4, 2.0}) {
    const auto d = dirac_components(spec, Event6(t, 1, 2, 3));
    CHECK(d.psi1 == Complex(0.0, 0.0));
    CHECK(d.psi2 == Complex(0.0, 0.0));
    const Complex expect = std::polar(1.0, m0 * t) + 1.0;
    CHECK(std::abs(d.psi3 - expect) < 1e-14);
  }
}

TEST_CASE("property: dirac ratio and norm") {
  for (int k = 0; k < 1000; ++k) {
    const Vector3d u = random_velocity(0.95);
    const auto spec = ParticleSpec::fermion(uniform(0.2, 3), u);
    const Event6 e = random_event();
    const auto d = dirac_components(spec, e);
    const auto a = rapidity(u.norm());
    const double r = std::abs(d.psi1) * std::abs(d.psi1) + std::abs(d.psi2) * std::abs(d.psi2);
    // |ψ1|² + |ψ2|² = sinh²(α/2)
    CHECK(std::abs(r - a.sinh_half * a.sinh_half) < 1e-12 * a.cosh_a);
    const double ratio = std::sqrt(r) / std::abs(d.psi3 - 1.0);
    CHECK(std::abs(ratio - std::tanh(std::atanh(u.norm()) / 2.0)) < 1e-12);
    CHECK(std::abs(d.norm_without_constant() - a.cosh_a) < 1e-12 * a.cosh_a);
  }
}

TEST_CASE("property: momentum form shares the component ratios") {
  for (int k = 0; k < 300; ++k) {
    const auto spec = ParticleSpec::fermion(uniform(0.2, 3), random_velocity(0.9));
    const Event6 e = random_event();
    const auto h = dirac_components(spec, e);
    const auto p = dirac_momentum_components(spec, e);
    // both spin parts point along (n1 + i n2, n3)
    const Complex a = h.psi1 * p.psi2;
    const Complex b = p.psi1 * h.psi2;
    CHECK(std::abs(a - b) < 1e-12 * (std::abs(a) + std::abs(b) + 1e-300));
    CHECK(std::abs(p.psi3 - 1.0) == doctest::Approx(spec.energy() / spec.m0).epsilon(1e-14));
  }
}

TEST_CASE("spin flip reverses the handedness of the sigma circle") {
  const auto up = ParticleSpec::fermion(1.0, Vector3d::Zero(), SpinOrientation::up);
  const auto down = ParticleSpec::fermion(1.0, Vector3d::Zero(), SpinOrientation::down);
  const Vector3d a = fermion_sigma_point(up, 0.3);
  const Vector3d b = fermion_sigma_point(down, 0.3);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == -b[1]);
  CHECK(fermion_phi_point(up, 1.0)[0] == -fermion_phi_point(down, 1.0)[0]);
}

TEST_CASE("fermion components reject other classes") {
  CHECK_THROWS_AS(dirac_components(ParticleSpec::boson(1.0), Event6()), ConfigurationError);
  CHECK_THROWS_AS(k_vector(ParticleSpec::spinless(1.0), Event6()), ConfigurationError);
}

TEST_CASE("k vector at rest") {
  const auto spec = ParticleSpec::fermion(1.0);
  const auto k = k_vector(spec, Event6());
  CHECK(k.K[0] == Complex(2.0, 0.0));
  CHECK(k.K[1] == Complex(0.0, 0.0));
  CHECK(k.K[3] == Complex(0.0, 0.0));
  CHECK(k.K5 == Complex(0.0, 0.0));

  SpinorOptions opts;
  opts.extended_normal = true;
  opts.C = 1.5;
  for (int j = 0; j < 100; ++j) {
    const auto ke = k_vector(spec, random_event(), opts);
    CHECK(std::abs(ke.K5) == doctest::Approx(1.5).epsilon(1e-14));
  }
}

TEST_CASE("property: k vector component relations") {
  for (int j = 0; j < 300; ++j) {
    const Vector3d u(uniform(0.05, 0.9), 0, uniform(0.05, 0.4));
    if (u.norm() >= 0.95) continue;
    const auto spec = ParticleSpec::fermion(uniform(0.3, 2), u);
    const Event6 e = random_event();
    const auto d = dirac_components(spec, e);
    const auto k = k_vector(spec, e);
    // K1/K3 = ψ1/ψ2 = (n1 + i n2)/n3
    const Complex ratio = k.K[1] / k.K[3];
    CHECK(std::abs(ratio - Complex(u[0] / u[2], 0.0)) < 1e-10 * std::abs(ratio));
    CHECK(std::abs(k.K[1] / k.K[3] - d.psi1 / d.psi2) < 1e-10 * std::abs(ratio));
    // the x5 phase is shared by every component
    const Complex f = std::polar(1.0, spec.m0 * e.x5());
    CHECK(std::abs(k.K[0] / f - d.psi3) < 1e-12);
    CHECK(std::abs(k.K[2] - Complex(0, 1) * d.psi1 * f) < 1e-12);
  }
}

TEST_CASE("k2 factor is configurable") {
  const auto spec = ParticleSpec::fermion(1.0, Vector3d(0.5, 0, 0));
  SpinorOptions opts;
  opts.k2_factor = Complex(0.0, -1.0);
  const Event6 e(0.1, 0.2, 0.3, 0.4, 0.0, 0.6);
  const auto a = k_vector(spec, e);
  const auto b = k_vector(spec, e, opts);
  CHECK(std::abs(b.K[2] - Complex(0.0, -1.0) * a.K[2]) < 1e-15);
  CHECK(b.K[1] == a.K[1]);
}

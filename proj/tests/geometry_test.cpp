#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "clifford/geometry/boundary.hpp"
#include "clifford/geometry/forms.hpp"
#include "clifford/geometry/hybrid.hpp"
#include "doctest.h"

using namespace clifford;

namespace {

constexpr double kPi = std::numbers::pi;

Paravector random_vector(const Signature& sig, Space space, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(sig.n() + 1);
  for (auto& z : c) z = space == Space::complex ? Complex(g(rng), g(rng)) : Complex(g(rng));
  return {sig, space, c};
}

}  // namespace

TEST_CASE("hybrid coordinates: fixed points") {
  const Signature s11(1, 1);
  HybridAngles a;
  a.phi = {0.0};
  auto x = hybrid_to_cartesian(a, s11).real_coords();
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(0.0));
  CHECK(x[2] == doctest::Approx(0.0));

  a.theta = kPi / 4;
  const auto cone = hybrid_to_cartesian(a, s11);
  x = cone.real_coords();
  CHECK(x[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(x[2] == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::abs(n_form(cone)) < 1e-15);
}

TEST_CASE("hybrid coordinates round trip") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const Signature sig(p, q);
    for (int k = 0; k < 10; ++k) {
      HybridAngles a;
      a.rho = 0.5 + u(rng);
      a.theta = u(rng) * kPi / 2;
      for (int j = 0; j < p; ++j) a.phi.push_back(u(rng) * (j + 1 == p ? 2 * kPi : kPi));
      for (int j = 0; j < q - 1; ++j) a.psi.push_back(u(rng) * (j + 1 == q - 1 ? 2 * kPi : kPi));
      a.sheet = (q == 1 && k % 2) ? -1 : 1;
      const auto x = hybrid_to_cartesian(a, sig);
      CHECK(norm_sq(x) == doctest::Approx(a.rho * a.rho));
      const auto b = cartesian_to_hybrid(x);
      const auto y = hybrid_to_cartesian(b, sig);
      CHECK(std::sqrt(norm_sq(x - y)) < 1e-12);
    }
  }
}

TEST_CASE("hybrid angle validation") {
  const Signature s21(2, 1);
  HybridAngles a;
  a.phi = {0.5};
  CHECK_THROWS_AS(validate(a, s21), AngleRangeError);
  a.phi = {0.5, 1.0};
  a.theta = 2.0;
  CHECK_THROWS_AS(validate(a, s21), AngleRangeError);
  a.theta = 0.3;
  CHECK_NOTHROW(validate(a, s21));
}

TEST_CASE("hybrid Jacobian: degenerate chart and a determinant oracle") {
  const Signature s22(2, 2);
  HybridAngles a;
  a.rho = 1.3;
  a.theta = kPi / 2;
  a.phi = {1.0, 2.0};
  a.psi = {0.7};
  CHECK(std::abs(hybrid_jacobian(a, s22)) < 1e-15);

  a.theta = 0.6;
  const auto cols = hybrid_partials(a, s22);
  Eigen::MatrixXd m(5, 5);
  for (int k = 0; k < 5; ++k)
    for (int j = 0; j < 5; ++j) m(j, k) = cols[k][j].real();
  CHECK(hybrid_jacobian(a, s22) == doctest::Approx(m.determinant()).epsilon(1e-12));
}

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * kPi));
  CHECK(sphere_volume(2) == doctest::Approx(4 * kPi));
  CHECK(sphere_volume(3) == doctest::Approx(2 * kPi * kPi));
  CHECK(sphere_volume(4) == doctest::Approx(8 * kPi * kPi / 3));
}

TEST_CASE("d_form: minors and the probe identity") {
  const Signature s20(2, 0);
  TangentFrame f{Paravector(s20, Space::complex),
                 {Paravector::unit(s20, Space::complex, 1), Paravector::unit(s20, Space::complex, 2)}};
  const auto d = d_form(f, Space::complex);
  CHECK(d[0] == Complex(1.0));
  CHECK(d[1] == Complex(0.0));
  CHECK(d[2] == Complex(0.0));

  f.vectors = {Paravector::unit(s20, Space::complex, 1), Paravector::unit(s20, Space::complex, 1)};
  CHECK(std::sqrt(norm_sq(d_form(f, Space::complex))) == 0.0);

  std::mt19937_64 rng(8);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}})
    for (Space space : {Space::real_pq, Space::complex}) {
      const Signature sig(p, q);
      TangentFrame fr{Paravector(sig, space), {}};
      for (int k = 0; k < sig.n(); ++k) fr.vectors.push_back(random_vector(sig, space, rng));
      const auto form = d_form(fr, space);
      const auto w = random_vector(sig, space, rng);
      std::vector<Paravector> all{w};
      all.insert(all.end(), fr.vectors.begin(), fr.vectors.end());
      CHECK(std::abs(bilinear(w, form) - dv(all)) < 1e-12);
    }

  TangentFrame bad{Paravector(s20, Space::complex), {Paravector::unit(s20, Space::complex, 1)}};
  CHECK_THROWS_AS(d_form(bad, Space::complex), FrameError);
}

TEST_CASE("h_eps map") {
  const Signature s11(1, 1);
  const Paravector origin(s11, Space::real_pq);
  const auto x = Paravector::real(s11, {1.0, 0.0, 1.0});
  const auto id = h_eps_map(x, 0.0, origin);
  CHECK(std::sqrt(norm_sq(id - x.embed())) == 0.0);
  CHECK(std::abs(n_form(h_eps_map(x, 0.2, origin)) - Complex(0.0, 0.8)) < 1e-14);

  std::mt19937_64 rng(1);
  const Signature s21(2, 1);
  for (int k = 0; k < 5; ++k) {
    const auto y = random_vector(s21, Space::real_pq, rng);
    const auto h = h_eps_map(y, 1.0, Paravector(s21, Space::real_pq));
    CHECK(std::abs(n_form(h) - Complex(0.0, 2.0 * norm_sq(y))) < 1e-12);
  }
}

TEST_CASE("pullback of D under h_eps equals D of the mapped frame") {
  std::mt19937_64 rng(6);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const Signature sig(p, q);
    TangentFrame fr{Paravector(sig, Space::real_pq), {}};
    for (int k = 0; k < sig.n(); ++k) fr.vectors.push_back(random_vector(sig, Space::real_pq, rng));
    for (double eps : {0.0, 0.1, 0.7}) {
      TangentFrame mapped{Paravector(sig, Space::complex), {}};
      const auto s = h_eps_scalings(sig, eps);
      for (const auto& v : fr.vectors) {
        Paravector w = v.embed();
        for (int j = 0; j <= sig.n(); ++j) w[j] *= s[j];
        mapped.vectors.push_back(w);
      }
      const auto fast = h_eps_pullback_form(fr, eps);
      const auto slow = d_form(mapped, Space::complex);
      CHECK(std::sqrt(norm_sq(fast - slow)) < 1e-12);
    }
  }
}

TEST_CASE("surface measure restriction factor") {
  const Signature s11(1, 1);
  const auto sphere = Boundary::sphere(Paravector(s11, Space::real_pq), 1.0);
  const auto at_e0 = surface_measure(sphere, Paravector::unit(s11, Space::real_pq, 0));
  CHECK((at_e0.restriction - Multivector::scalar(s11, Space::real_pq, 1.0)).norm() < 1e-15);
  const auto at_t2 = surface_measure(sphere, Paravector::unit(s11, Space::real_pq, 2));
  CHECK((at_t2.restriction + Multivector::generator(s11, Space::real_pq, 2)).norm() < 1e-15);
  CHECK(at_t2.ds_scale == Complex(0.0, 1.0));
  CHECK_THROWS_AS(surface_measure(sphere, Paravector::real(s11, {0.5, 0.0, 0.0})), NotOnSurfaceError);

  const auto box = Boundary::box(Paravector(s11, Space::real_pq), {1.0, 1.0, 1.0});
  const auto face = surface_measure(box, Paravector::real(s11, {0.2, 1.0, -0.3}));
  CHECK((face.restriction - Multivector::generator(s11, Space::real_pq, 1)).norm() < 1e-15);
}

TEST_CASE("boundary containment and charts") {
  const Signature s21(2, 1);
  const auto sphere = Boundary::sphere(Paravector(s21, Space::real_pq), 1.0);
  CHECK(sphere.contains(Paravector::real(s21, {0.3, 0.0, 0.0, 0.0})));
  CHECK_FALSE(sphere.contains(Paravector::real(s21, {2.0, 0.0, 0.0, 0.0})));
  CHECK(sphere.surface_distance(Paravector::real(s21, {2.0, 0.0, 0.0, 0.0})) == doctest::Approx(1.0));

  // Every chart point lies on the sphere with a positively oriented frame.
  for (const auto& chart : sphere.charts()) {
    std::vector<double> outer;
    for (const auto& iv : chart.outer) outer.push_back(iv.lo + 0.37 * iv.width());
    const auto cp = chart.eval(outer, chart.inner.lo + 0.61 * chart.inner.width());
    CHECK(norm_sq(cp.point) == doctest::Approx(1.0));
    std::vector<Paravector> cols{cp.normal};
    cols.insert(cols.end(), cp.tangents.begin(), cp.tangents.end());
    CHECK((dv(cols) / volume_form(s21, Space::real_pq)).real() > 0.0);
  }
}

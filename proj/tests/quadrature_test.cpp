#include <cmath>
#include <numbers>

#include "clifford/geometry/hybrid.hpp"
#include "clifford/quadrature/formulas.hpp"
#include "clifford/quadrature/gauss.hpp"
#include "doctest.h"

using namespace clifford;

namespace {

constexpr double kPi = std::numbers::pi;

Boundary unit_sphere(const Signature& sig) { return Boundary::sphere(Paravector(sig, Space::real_pq), 1.0); }

Multivector e0(const Signature& sig, Space space, Complex c = 1.0) { return Multivector::scalar(sig, space, c); }

Field constant_field(const Signature& sig, Space space) { return PolynomialField::constant(e0(sig, space)); }

}  // namespace

TEST_CASE("Gauss-Legendre is exact to degree 2n - 1") {
  for (int order : {1, 4, 9, 16}) {
    const auto& rule = gauss_legendre(order);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
    for (int d = 0; d <= 2 * order - 1; ++d) {
      double sum = 0.0;
      for (int k = 0; k < order; ++k) sum += rule.weights[k] * std::pow(rule.nodes[k], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("graded panels tile the range and shrink toward roots") {
  GridSpec g;
  const std::vector<GradedRoot> roots{{0.4, 1e-6}};
  const auto panels = graded_panels({0.0, 1.0}, roots, g);
  REQUIRE(!panels.empty());
  CHECK(panels.front().lo == 0.0);
  CHECK(panels.back().hi == 1.0);
  double smallest = 1.0;
  for (std::size_t k = 1; k < panels.size(); ++k) CHECK(panels[k].lo == panels[k - 1].hi);
  for (const auto& p : panels) smallest = std::min(smallest, p.width());
  CHECK(smallest <= 2e-6);

  // A log singularity at the root: what error remains sits in the innermost
  // panels and is O(delta).
  const double v = integrate_panels(panels, 16, [](double t) { return Complex(std::log(std::abs(t - 0.4))); }).real();
  const double exact = 0.6 * std::log(0.6) - 0.6 + 0.4 * std::log(0.4) - 0.4;
  CHECK(std::abs(v - exact) < 1e-8);
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.inner_order = 0;
  CHECK_THROWS_AS(g.validate(), ConfigError);
  EpsSchedule s;
  s.ratio = 1.5;
  CHECK_THROWS_AS(s.validate(), ConfigError);
}

TEST_CASE("sphere area and symmetric integrands") {
  const Signature s20(2, 0);
  GridSpec g;
  g.outer_nodes = {64};
  g.inner_order = 64;
  g.inner_panels = 1;
  const auto b = unit_sphere(s20);
  const auto area = integrate_boundary(b, [&](const ChartPoint& cp) { return e0(s20, Space::real_pq, cp.area_density); }, g);
  CHECK(area.scalar_part().real() == doctest::Approx(4 * kPi).epsilon(1e-10));
  const auto zero = integrate_boundary(b, [&](const ChartPoint&) { return Multivector(s20, Space::real_pq); }, g);
  CHECK(zero.norm() == 0.0);
  const auto odd = integrate_boundary(
      b, [&](const ChartPoint& cp) { return e0(s20, Space::real_pq, cp.point[1] * cp.area_density); }, g);
  CHECK(odd.norm() < 1e-12);

  const Signature s21(2, 1);
  const auto area21 = integrate_boundary(
      unit_sphere(s21), [&](const ChartPoint& cp) { return e0(s21, Space::real_pq, cp.area_density); }, GridSpec{});
  CHECK(area21.scalar_part().real() == doctest::Approx(sphere_volume(3)).epsilon(1e-10));
}

TEST_CASE("parallel and serial quadrature agree bit for bit") {
  const Signature sig(2, 1);
  const Field f = fueter_basis(sig, Space::real_pq)[0];
  const auto x0 = Paravector::real(sig, {0.3, 0.0, 0.0, 0.0});
  GridSpec g;
  g.outer_nodes = {12};
  const Integrand integrand = [&](const ChartPoint& cp) { return second_formula_integrand(f, x0, 0.05, Side::left, cp); };
  const ConeRefinement cone{x0, 0.05};
  const auto b = unit_sphere(sig);
  QuadratureStats sp, ss;
  const auto par = integrate_boundary(b, integrand, g, cone, Execution::parallel, &sp);
  const auto ser = integrate_boundary(b, integrand, g, cone, Execution::serial, &ss);
  for (Mask m = 0; m < sig.blade_count(); ++m) {
    CHECK(par.coeff(m).real() == ser.coeff(m).real());
    CHECK(par.coeff(m).imag() == ser.coeff(m).imag());
  }
  CHECK(sp.nodes == ss.nodes);
  CHECK(sp.cone_crossings == ss.cone_crossings);
}

TEST_CASE("non-finite integrands are reported") {
  const Signature sig(1, 1);
  const Integrand bad = [&](const ChartPoint&) { return e0(sig, Space::real_pq, std::nan("")); };
  CHECK_THROWS_AS(integrate_boundary(unit_sphere(sig), bad, GridSpec{}), NonFiniteIntegrand);
  CHECK_THROWS_AS(integrate_boundary(unit_sphere(sig), bad, GridSpec{}, std::nullopt, Execution::serial), NonFiniteIntegrand);
}

TEST_CASE("Richardson extrapolation removes polynomial error terms") {
  const Signature sig(1, 1);
  RichardsonTable t;
  for (double eps : {0.1, 0.05, 0.025, 0.0125}) {
    const double v = 2.0 + 3.0 * eps - 5.0 * eps * eps;
    t.add(eps, e0(sig, Space::real_pq, v));
  }
  const auto est = summarize(t, 1e-8);
  CHECK(est.limit.scalar_part().real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(est.converged);
  CHECK(est.extrapolated);
}

TEST_CASE("C constant: closed forms and quadrature") {
  CHECK(std::abs(c_constant_closed_form(Signature(1, 1)) - Complex(0.0, -1.0)) < 1e-14);
  CHECK(std::abs(c_constant_closed_form(Signature(2, 1)) - Complex(0.0, -kPi / 4)) < 1e-14);
  CHECK(std::abs(c_constant_closed_form(Signature(1, 2)) - Complex(-0.5, 0.0)) < 1e-14);
  CHECK(std::abs(c_constant_closed_form(Signature(2, 2)) - Complex(-1.0 / 3.0, 0.0)) < 1e-14);
  CHECK_THROWS_AS(c_constant_closed_form(Signature(1, 0)), ConfigError);

  const auto est = c_constant(Signature(1, 1), EpsSchedule{}, GridSpec{});
  CHECK(std::abs(est.limit.scalar_part() - Complex(0.0, -1.0)) < 5e-3);
}

TEST_CASE("second formula on the unit sphere in (1,1)") {
  const Signature sig(1, 1);
  const auto b = unit_sphere(sig);
  const Field f = constant_field(sig, Space::real_pq);
  const double omega = sphere_volume(2);
  EpsSchedule s;
  s.tolerance = 1e-4 * omega;

  const auto inside = cauchy_second(f, Paravector(sig, Space::real_pq), b, GridSpec{}, s, Side::left);
  CHECK((inside.limit - e0(sig, Space::real_pq, omega)).norm() <= 1e-2 * omega);

  s.sign = -1;
  const auto minus = cauchy_second(f, Paravector(sig, Space::real_pq), b, GridSpec{}, s, Side::left);
  CHECK((minus.limit + e0(sig, Space::real_pq, omega)).norm() <= 1e-2 * omega);

  s.sign = 1;
  const auto outside = cauchy_second(f, Paravector::real(sig, {2.0, 0.0, 0.0}), b, GridSpec{}, s, Side::right);
  CHECK(outside.limit.norm() <= 1e-2 * omega);
}

TEST_CASE("first formula on the unit sphere in (1,1)") {
  const Signature sig(1, 1);
  const auto b = unit_sphere(sig);
  const double omega = sphere_volume(2);

  const auto c = cauchy_first(constant_field(sig, Space::complex), Paravector(sig, Space::real_pq), b, GridSpec{}, 0.1,
                              Side::left);
  CHECK((c - e0(sig, Space::complex, omega)).norm() <= 1e-6);

  const Field fc = fueter_basis(sig, Space::complex)[0];
  const auto x0 = Paravector::real(sig, {0.3, 0.0, 0.0});
  const auto v = cauchy_first(fc, x0, b, GridSpec{}, 0.1, Side::left);
  const auto want = Multivector::generator(sig, Space::complex, 1, -0.3 * omega);
  CHECK((v - want).norm() <= 1e-4 * omega);

  const auto out = cauchy_first(fc, Paravector::real(sig, {2.0, 0.0, 0.0}), b, GridSpec{}, 0.1, Side::right);
  CHECK(out.norm() <= 1e-6);

  CHECK_THROWS_AS(cauchy_first(fc, x0, b, GridSpec{}, 1.5, Side::left), ConfigError);
}

TEST_CASE("Stokes identity on the unit box") {
  const Signature sig(1, 1);
  const auto box = Boundary::box(Paravector::real(sig, {0.5, 0.5, 0.5}), {0.5, 0.5, 0.5});
  GridSpec g;
  g.outer_nodes = {8};
  g.inner_order = 8;
  g.inner_panels = 1;
  const Field one = constant_field(sig, Space::real_pq);

  const auto closed = stokes_check(fueter_basis(sig, Space::real_pq)[0], one, box, g, 8);
  CHECK(closed.boundary.norm() < 1e-12);
  CHECK(closed.volume.norm() < 1e-12);

  PolynomialField x0(sig, Space::real_pq);
  x0.add_term(0, {1, 0, 0}, Complex(1.0));
  const auto lin = stokes_check(x0, one, box, g, 8);
  // Volume side: integral of e_0 against dV = i^q dx, box volume 1.
  CHECK((lin.volume - e0(sig, Space::real_pq, Complex(0.0, 1.0))).norm() < 1e-12);
  CHECK(lin.residual <= 1e-6);
}

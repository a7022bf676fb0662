#include <random>

#include "clifford/fields/dirac.hpp"
#include "clifford/fields/random.hpp"
#include "doctest.h"

using namespace clifford;

namespace {

ExactPolynomialField monomial(const Signature& sig, Space space, Exponents e, Mask blade = 0, long long c = 1) {
  ExactPolynomialField f(sig, space);
  f.add_term(blade, e, GaussianRational(c));
  return f;
}

}  // namespace

TEST_CASE("constant field is annihilated by every Dirac variant") {
  const Signature sig(2, 1);
  for (Space space : {Space::real_pq, Space::complex}) {
    const auto f = monomial(sig, space, {0, 0, 0, 0}, 0b101, 3);
    for (DiracKind k : {DiracKind::nabla, DiracKind::nabla_plus})
      for (Side side : {Side::left, Side::right}) CHECK(apply_dirac(f, k, side).is_zero());
  }
}

TEST_CASE("z0 e0 has complex Dirac image e0") {
  const Signature sig(1, 1);
  const auto f = monomial(sig, Space::complex, {1, 0, 0});
  const auto d = apply_dirac(f, DiracKind::nabla_plus, Side::left);
  CHECK(d.terms().size() == 1);
  CHECK(d.terms().begin()->first == Exponents{0, 0, 0});
  CHECK(d.terms().begin()->second == ExactMultivector::scalar(sig, Space::complex, 1));
}

TEST_CASE("wave operator signs") {
  const Signature sig(1, 1);
  const auto x0sq = monomial(sig, Space::real_pq, {2, 0, 0});
  const auto xtsq = monomial(sig, Space::real_pq, {0, 0, 2});
  const auto two = ExactMultivector::scalar(sig, Space::real_pq, 2);
  CHECK(apply_wave(x0sq).terms().at({0, 0, 0}) == two);
  CHECK(apply_wave(xtsq).terms().at({0, 0, 0}) == -two);
  CHECK(apply_wave(x0sq + xtsq).is_zero());
}

TEST_CASE("factorization of the wave operator is exact") {
  std::mt19937_64 rng(11);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const Signature sig(p, q);
    for (int k = 0; k < 10; ++k) {
      CHECK(factorization_residual(random_polynomial<GaussianRational>(sig, Space::real_pq, 3, 4, rng, 0.3),
                                   Space::real_pq) == 0.0);
    }
  }
  CHECK(factorization_residual(random_polynomial<GaussianRational>(Signature(2, 1), Space::complex, 2, 4, rng, 0.3),
                               Space::complex) == 0.0);
  CHECK(factorization_residual(ExactPolynomialField(Signature(1, 1), Space::real_pq), Space::real_pq) == 0.0);
  CHECK_THROWS_AS(factorization_residual(ExactPolynomialField(Signature(1, 1), Space::real_pq), Space::complex),
                  DomainMismatch);
}

TEST_CASE("Fueter basis is two-sided monogenic") {
  for (auto [p, q] : {std::pair{1, 1}, {2, 0}, {2, 1}, {1, 2}}) {
    const Signature sig(p, q);
    for (Space space : {Space::real_pq, Space::complex}) {
      const auto basis = fueter_basis(sig, space);
      REQUIRE(static_cast<int>(basis.size()) == sig.n());
      for (const auto& f : basis)
        for (Side side : {Side::left, Side::right})
          CHECK(apply_dirac(f, DiracKind::nabla_plus, side).max_coeff_magnitude() < 1e-15);
    }
  }
}

TEST_CASE("Fueter field k = 1 in (1,1) is x1 e0 - x0 e1") {
  const Signature sig(1, 1);
  const auto f = fueter_basis(sig, Space::real_pq)[0];
  const auto v = f.evaluate(Paravector::real(sig, {0.3, 0.7, -0.2}));
  CHECK(v.coeff(0).real() == doctest::Approx(0.7));
  CHECK(v.coeff(0b01).real() == doctest::Approx(-0.3));
}

TEST_CASE("complex Fueter fields restrict to the real ones") {
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const Signature sig(p, q);
    const auto real = fueter_basis(sig, Space::real_pq);
    const auto cplx = fueter_basis(sig, Space::complex);
    std::vector<double> c{0.3, -0.4, 0.5, 0.25};
    c.resize(sig.n() + 1);
    const auto x = Paravector::real(sig, c);
    for (int k = 0; k < sig.n(); ++k) {
      const auto lhs = cplx[k].evaluate(x.embed());
      const auto rhs = embed_iota(real[k].evaluate(x));
      CHECK((lhs - rhs).norm() < 1e-14);
    }
  }
}

TEST_CASE("finite differences agree with the exact Dirac operator") {
  std::mt19937_64 rng(21);
  const Signature sig(2, 1);
  const auto exact = random_polynomial<GaussianRational>(sig, Space::real_pq, 3, 5, rng, 0.4).to_complex();
  const Field poly = exact;
  const Field box = as_black_box(exact);
  const auto x = Paravector::real(sig, {0.2, -0.3, 0.4, 0.1});
  for (Side side : {Side::left, Side::right}) {
    const auto a = dirac(poly, x, DiracKind::nabla_plus, side, Space::real_pq);
    const auto b = dirac(box, x, DiracKind::nabla_plus, side, Space::real_pq);
    CHECK((a - b).norm() <= 1e-8 * std::max(1.0, a.norm()));
  }
}

TEST_CASE("monogenicity residual of a non-monogenic field") {
  const Signature sig(1, 1);
  PolynomialField f(sig, Space::real_pq);
  f.add_term(0, {1, 0, 0}, Complex(1.0));
  const std::vector<Paravector> pts{Paravector::real(sig, {0.1, 0.2, 0.3}), Paravector::real(sig, {1.0, -1.0, 0.5})};
  CHECK(monogenicity_residual(f, pts, Side::left, Space::real_pq) == doctest::Approx(1.0));
  CHECK_THROWS_AS(dirac(f, pts[0], DiracKind::nabla, Side::left, Space::real_pq, {-1.0}), StepError);
}

TEST_CASE("evaluation outside the field's domain throws") {
  const Signature sig(1, 1);
  const PolynomialField f(sig, Space::real_pq);
  CHECK_THROWS_AS(f.evaluate(Paravector(sig, Space::complex)), DomainMismatch);
}

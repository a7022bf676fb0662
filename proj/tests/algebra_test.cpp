#include <random>

#include "clifford/algebra/multivector.hpp"
#include "clifford/algebra/paravector.hpp"
#include "clifford/algebra/random.hpp"
#include "doctest.h"

using namespace clifford;

namespace {

Multivector e(const Signature& sig, Space space, Mask m, Complex c = 1.0) {
  return Multivector::blade(sig, space, m, c);
}

}  // namespace

TEST_CASE("generator squares follow v^2 = -Q(v)") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      if (p + q == 0) continue;
      const Signature sig(p, q);
      for (int j = 1; j <= sig.n(); ++j) {
        const Mask m = Mask{1} << (j - 1);
        const auto c = blade_product(m, m, sig, Space::complex);
        CHECK(c.sign == -1);
        CHECK(c.result == 0);
        const auto r = blade_product(m, m, sig, Space::real_pq);
        CHECK(r.sign == (sig.is_tilde(j) ? 1 : -1));
      }
    }
}

TEST_CASE("tilde generator in (1,1) squares to +e0") {
  const auto r = blade_product(0b10, 0b10, Signature(1, 1), Space::real_pq);
  CHECK(r.sign == 1);
  CHECK(r.result == 0);
}

TEST_CASE("identity and anticommutation") {
  const Signature sig(2, 2);
  for (Mask b = 0; b < sig.blade_count(); ++b) {
    CHECK(blade_product(0, b, sig, Space::real_pq).sign == 1);
    CHECK(blade_product(0, b, sig, Space::real_pq).result == b);
  }
  const auto ab = blade_product(0b01, 0b10, sig, Space::complex);
  const auto ba = blade_product(0b10, 0b01, sig, Space::complex);
  CHECK(ab.result == ba.result);
  CHECK(ab.sign == -ba.sign);
}

TEST_CASE("(e0 + e1)(e0 - e1) = 2 e0") {
  const Signature sig(2, 1);
  for (Space space : {Space::real_pq, Space::complex}) {
    const auto a = e(sig, space, 0) + e(sig, space, 1);
    const auto b = e(sig, space, 0) - e(sig, space, 1);
    CHECK(a * b == e(sig, space, 0, 2.0));
  }
}

TEST_CASE("exact products are associative and distributive") {
  std::mt19937_64 rng(7);
  const Signature sig(2, 2);
  for (Space space : {Space::real_pq, Space::complex})
    for (int k = 0; k < 20; ++k) {
      const auto a = random_multivector<GaussianRational>(sig, space, rng, 0.5);
      const auto b = random_multivector<GaussianRational>(sig, space, rng, 0.5);
      const auto c = random_multivector<GaussianRational>(sig, space, rng, 0.5);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * ExactMultivector::scalar(sig, space, 1) == a);
    }
}

TEST_CASE("mixing signatures or spaces throws") {
  const Multivector a(Signature(1, 1), Space::real_pq);
  CHECK_THROWS_AS(a + Multivector(Signature(2, 0), Space::real_pq), SignatureMismatch);
  CHECK_THROWS_AS(a * Multivector(Signature(1, 1), Space::complex), SignatureMismatch);
  CHECK_THROWS_AS(Signature(0, 0), InvalidSignature);
  CHECK_THROWS_AS(Signature(-1, 2), InvalidSignature);
}

TEST_CASE("sparse storage matches dense") {
  // n = 7 switches to sparse storage; compare against the explicit sign rule.
  const Signature sig(4, 3);
  const auto a = e(sig, Space::real_pq, 0b1010011, 2.0) + e(sig, Space::real_pq, 0b0000001);
  const auto b = e(sig, Space::real_pq, 0b1100001, 3.0);
  const auto prod = a * b;
  const auto bp1 = blade_product(0b1010011, 0b1100001, sig, Space::real_pq);
  const auto bp2 = blade_product(0b0000001, 0b1100001, sig, Space::real_pq);
  CHECK(prod.coeff(bp1.result) == Complex(6.0 * bp1.sign));
  CHECK(prod.coeff(bp2.result) == Complex(3.0 * bp2.sign));
}

TEST_CASE("iota embedding of generators") {
  const Signature s11(1, 1);
  const auto t = ExactMultivector::generator(s11, Space::real_pq, 2);
  CHECK(embed_iota(t) == ExactMultivector::generator(s11, Space::complex, 2, GaussianRational::i()));
  CHECK(embed_iota(ExactMultivector::scalar(s11, Space::real_pq, 1)) ==
        ExactMultivector::scalar(s11, Space::complex, 1));

  const Signature s12(1, 2);
  const auto t23 = ExactMultivector::blade(s12, Space::real_pq, 0b110);
  CHECK(embed_iota(t23) == ExactMultivector::blade(s12, Space::complex, 0b110, -1));
}

TEST_CASE("iota is multiplicative and project inverts it") {
  std::mt19937_64 rng(3);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const Signature sig(p, q);
    for (int k = 0; k < 50; ++k) {
      const auto x = random_multivector<GaussianRational>(sig, Space::real_pq, rng, 0.5, true);
      const auto y = random_multivector<GaussianRational>(sig, Space::real_pq, rng, 0.5, true);
      CHECK(embed_iota(x * y) == embed_iota(x) * embed_iota(y));
      CHECK(project_iota(embed_iota(x)) == x);
    }
  }
}

TEST_CASE("real image test") {
  const Signature sig(1, 1);
  const auto x = Multivector::generator(sig, Space::real_pq, 2, 3.0) + Multivector::scalar(sig, Space::real_pq, 1.0);
  CHECK(is_real_pq(embed_iota(x), 1e-14));
  CHECK_FALSE(is_real_pq(embed_iota(x) * Complex(0.0, 1.0), 1e-14));
}

TEST_CASE("conjugations") {
  const Signature sig(1, 1);
  const auto z = Paravector::real(sig, {1.0, 2.0, 3.0});
  const auto cc = conjugate(z, Conjugation::clifford);
  CHECK(cc[0] == Complex(1.0));
  CHECK(cc[1] == Complex(-2.0));
  CHECK(cc[2] == Complex(-3.0));
  const auto bar = conjugate(z, Conjugation::complex);
  CHECK(bar[0] == Complex(1.0));
  CHECK(bar[1] == Complex(2.0));
  CHECK(bar[2] == Complex(-3.0));
}

TEST_CASE("quadratic form and norm") {
  const Signature s11(1, 1);
  const auto x = Paravector::real(s11, {1.0, 0.0, 1.0});
  CHECK(n_form(x) == Complex(0.0));
  CHECK(norm_sq(x) == doctest::Approx(2.0));
  CHECK_THROWS_AS(invert(x), NullConeError);

  const Signature s2(2, 0);
  const auto z = Paravector::complex(s2, {Complex(0, 1), 1.0, 0.0});
  CHECK(std::abs(n_form(z)) < 1e-15);
  CHECK(norm_sq(z) == doctest::Approx(2.0));
  CHECK(bilinear(Paravector::unit(s2, Space::complex, 0), Paravector::unit(s2, Space::complex, 1)) == Complex(0.0));

  const auto inv = invert(Paravector::real(s2, {1.0, 1.0, 0.0}));
  CHECK(inv[0].real() == doctest::Approx(0.5));
  CHECK(inv[1].real() == doctest::Approx(-0.5));
  CHECK(inv[2] == Complex(0.0));
  CHECK(invert(Paravector::real(s2, {2.0, 0.0, 0.0}))[0].real() == doctest::Approx(0.5));
}

TEST_CASE("paravector times its Clifford conjugate is N") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const Signature sig(p, q);
    std::vector<double> c(sig.n() + 1);
    for (double& v : c) v = g(rng);
    const auto x = Paravector::real(sig, c);
    const auto prod = paravector_product(x, conjugate(x, Conjugation::clifford));
    CHECK(std::abs(prod.scalar_part() - n_form(x)) < 1e-12);
    CHECK((prod - Multivector::scalar(sig, Space::real_pq, n_form(x))).norm() < 1e-12);
    const auto via_mv = x.to_multivector() * conjugate(x, Conjugation::clifford).to_multivector();
    CHECK((via_mv - prod).norm() < 1e-12);
  }
}

TEST_CASE("blade names") {
  const Signature sig(1, 1);
  CHECK(blade_name(0, sig, Space::real_pq) == "e0");
  CHECK(blade_name(0b01, sig, Space::real_pq) == "e1");
  CHECK(blade_name(0b11, sig, Space::real_pq) == "e12~2");
  CHECK(blade_name(0b11, sig, Space::complex) == "e12");
}

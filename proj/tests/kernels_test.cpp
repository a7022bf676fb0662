#include <cmath>
#include <random>

#include "clifford/kernels/green.hpp"
#include "doctest.h"

using namespace clifford;

TEST_CASE("principal branch") {
  CHECK(principal_sqrt(Complex(4.0)) == Complex(2.0));
  CHECK(principal_sqrt(Complex(0.0, 1.0)).real() > 0.0);
  CHECK_THROWS_AS(principal_sqrt(Complex(-1.0)), BranchCutError);
  CHECK_THROWS_AS(principal_sqrt(Complex(0.0)), BranchCutError);
  const Complex w(0.3, -2.0);
  CHECK(std::abs(BranchedPower{w, 3}.value() - std::pow(principal_sqrt(w), 3)) < 1e-14);
  CHECK(std::abs(BranchedPower{w, -4}.value() - 1.0 / (w * w)) < 1e-14);
}

TEST_CASE("H kernel values and branch errors") {
  CHECK(h_kernel(Paravector::complex(Signature(2, 0), {1.0, 0.0, 0.0}), Space::complex) == Complex(1.0));
  CHECK_THROWS_AS(h_kernel(Paravector::real(Signature(1, 1), {1.0, 0.0, 1.0}), Space::real_pq), BranchCutError);
  CHECK_THROWS_AS(h_kernel(Paravector::complex(Signature(3, 0), {0.0, 0.0, 0.0, Complex(0.0, 1e-3)}), Space::complex),
                  BranchCutError);
}

TEST_CASE("G kernel closed forms") {
  const auto g1 = g_kernel(Paravector::complex(Signature(2, 0), {1.0, 0.0, 0.0}), Space::complex);
  CHECK((g1 - Multivector::scalar(Signature(2, 0), Space::complex, 1.0)).norm() < 1e-15);

  const Signature s20(2, 0);
  const auto g2 = g_kernel(Paravector::real(s20, {0.0, 1.0, 0.0}), Space::real_pq);
  CHECK((g2 + Multivector::generator(s20, Space::real_pq, 1)).norm() < 1e-15);

  const Signature s11(1, 1);
  const auto g3 = g_kernel(Paravector::real(s11, {2.0, 0.0, 1.0}), Space::real_pq);
  const auto want = (Multivector::scalar(s11, Space::real_pq, 2.0) - Multivector::generator(s11, Space::real_pq, 2)) *
                    Complex(std::pow(3.0, -1.5));
  CHECK((g3 - want).norm() < 1e-15);
}

TEST_CASE("kernel point classification") {
  const Signature s11(1, 1);
  CHECK(KernelPoint(Paravector::real(s11, {2.0, 0.0, 1.0})).region == Region::in_R_G);
  CHECK(KernelPoint(Paravector::real(s11, {1.0, 0.0, 1.0})).region == Region::excluded);
  CHECK(KernelPoint(Paravector::complex(s11, {Complex(1.0, 0.5), 0.0, 0.0})).region == Region::in_C_G);
  CHECK(KernelPoint(Paravector::complex(s11, {Complex(0.0, 1.0), 0.0, 0.0})).region == Region::excluded);
}

TEST_CASE("G is the restriction of the complex kernel") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Signature sig(2, 1);
  int tested = 0;
  while (tested < 20) {
    const auto x = Paravector::real(sig, {u(rng) + 2.0, u(rng), u(rng), u(rng)});
    if (n_form(x).real() < 0.5) continue;
    ++tested;
    CHECK((g_kernel(x.embed(), Space::complex) - embed_iota(g_kernel(x, Space::real_pq))).norm() < 1e-13);
  }
}

TEST_CASE("regularised kernel") {
  const Signature s11(1, 1);
  const auto on_cone = Paravector::real(s11, {1.0, 0.0, 1.0});
  const Complex root_i = std::sqrt(Complex(0.0, 1.0));
  const auto want = (Multivector::scalar(s11, Space::real_pq, 1.0) - Multivector::generator(s11, Space::real_pq, 2)) *
                    (1.0 / (root_i * root_i * root_i));
  CHECK((g_eps_kernel(on_cone, 0.5) - want).norm() < 1e-14);

  const auto x = Paravector::real(s11, {1.5, 0.0, 0.0});
  const auto g = g_kernel(x, Space::real_pq);
  double prev = 1.0;
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const double d = (g_eps_kernel(x, eps) - g).norm();
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-5);
  CHECK_THROWS_AS(g_eps_kernel(Paravector(s11, Space::real_pq), 0.1), OriginError);
}

TEST_CASE("Dirac of the regularised kernel") {
  const Signature s11(1, 1);
  CHECK(dirac_of_g_eps(Paravector::real(s11, {1.0, 0.0, 0.0}), 0.3, Side::left).norm() < 1e-15);

  const auto x = Paravector::real(s11, {1.0, 0.0, 1.0});
  const double eps = 0.3;
  const Field field = BlackBoxField{s11, Space::real_pq, [eps](const Paravector& y) { return g_eps_kernel(y, eps); }};
  for (Side side : {Side::left, Side::right}) {
    const auto closed = dirac_of_g_eps(x, eps, side);
    const auto fd = dirac(field, x, DiracKind::nabla_plus, side, Space::real_pq);
    CHECK((closed - fd).norm() <= 1e-6 * closed.norm());
  }
}

TEST_CASE("G is left and right monogenic") {
  const Signature s11(1, 1);
  std::vector<Paravector> pts;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  while (pts.size() < 20) {
    const auto x = Paravector::real(s11, {u(rng), u(rng), u(rng)});
    if (n_form(x).real() > 0.5) pts.push_back(x);
  }
  const Field g = BlackBoxField{s11, Space::real_pq, [](const Paravector& z) { return g_kernel(z, Space::real_pq); }};
  for (Side side : {Side::left, Side::right})
    CHECK(monogenicity_residual(g, pts, side, Space::real_pq, {1e-4}) <= 1e-8);
}

TEST_CASE("translated Green field") {
  const Signature s11(1, 1);
  const auto c = Paravector::real(s11, {0.5, 0.0, 0.0});
  const auto f = translated_green(c, Space::real_pq);
  const auto x = Paravector::real(s11, {2.5, 0.0, 0.0});
  CHECK((f(x) - g_kernel(x - c, Space::real_pq)).norm() < 1e-15);
}

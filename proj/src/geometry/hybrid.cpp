#include "clifford/geometry/hybrid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace clifford {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleSlack = 1e-12;

void check_range(double v, double lo, double hi, const char* name) {
  if (!(v >= lo - kAngleSlack && v <= hi + kAngleSlack))
    throw AngleRangeError(std::string(name) + " = " + std::to_string(v) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

void check_sphere_angles(std::span<const double> a, const char* name) {
  for (std::size_t i = 0; i < a.size(); ++i) check_range(a[i], 0.0, i + 1 == a.size() ? 2 * kPi : kPi, name);
}

}  // namespace

std::vector<double> spherical_to_cartesian(double r, std::span<const double> angles, int sheet) {
  const std::size_t k = angles.size();
  std::vector<double> x(k + 1);
  if (k == 0) {
    x[0] = sheet >= 0 ? r : -r;
    return x;
  }
  double s = r;
  for (std::size_t i = 0; i < k; ++i) {
    x[i] = s * std::cos(angles[i]);
    s *= std::sin(angles[i]);
  }
  x[k] = s;
  return x;
}

std::vector<std::vector<double>> spherical_angle_partials(double r, std::span<const double> angles) {
  const std::size_t k = angles.size();
  std::vector<std::vector<double>> d(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = a; j <= k; ++j) {
      // x_j = r prod_{i<j} sin(t_i) * (j < k ? cos(t_j) : 1)
      double v = r;
      for (std::size_t i = 0; i < j; ++i) v *= (i == a) ? std::cos(angles[i]) : std::sin(angles[i]);
      if (j < k) v *= (j == a) ? -std::sin(angles[j]) : std::cos(angles[j]);
      d[a][j] = v;
    }
  }
  return d;
}

double spherical_jacobian(double r, std::span<const double> angles, int sheet) {
  const std::size_t k = angles.size();
  if (k == 0) return sheet >= 0 ? 1.0 : -1.0;
  double det = std::pow(r, static_cast<double>(k));
  for (std::size_t i = 0; i + 1 < k; ++i) det *= std::pow(std::sin(angles[i]), static_cast<double>(k - 1 - i));
  return det;
}

std::vector<double> cartesian_to_spherical(std::span<const double> x, double* radius, int* sheet) {
  const std::size_t k = x.size() - 1;
  std::vector<double> a(k, 0.0);
  double tail = 0.0;
  for (double v : x) tail += v * v;
  if (radius) *radius = std::sqrt(tail);
  if (sheet) *sheet = (k == 0 && x[0] < 0.0) ? -1 : 1;
  if (k == 0) return a;
  // tail2[i] = x_i^2 + ... + x_k^2
  std::vector<double> tail2(k + 2, 0.0);
  for (std::size_t i = k + 1; i-- > 0;) tail2[i] = tail2[i + 1] + x[i] * x[i];
  for (std::size_t i = 0; i + 1 < k; ++i) a[i] = std::atan2(std::sqrt(tail2[i + 1]), x[i]);
  double last = std::atan2(x[k], x[k - 1]);
  if (last < 0.0) last += 2 * kPi;
  a[k - 1] = last;
  return a;
}

void validate(const HybridAngles& a, const Signature& sig) {
  if (sig.p() < 1 || sig.q() < 1) throw AngleRangeError("hybrid coordinates need p >= 1 and q >= 1");
  if (static_cast<int>(a.phi.size()) != sig.p() || static_cast<int>(a.psi.size()) != sig.q() - 1)
    throw AngleRangeError("hybrid angle counts do not match the signature");
  if (a.rho < 0.0) throw AngleRangeError("rho must be non-negative");
  check_range(a.theta, 0.0, kPi / 2, "theta");
  check_sphere_angles(a.phi, "phi");
  check_sphere_angles(a.psi, "psi");
  if (a.sheet != 1 && a.sheet != -1) throw AngleRangeError("sheet must be +1 or -1");
}

Paravector hybrid_to_cartesian(const HybridAngles& a, const Signature& sig) {
  validate(a, sig);
  const auto xb = spherical_to_cartesian(a.rho * std::cos(a.theta), a.phi);
  const auto tb = spherical_to_cartesian(a.rho * std::sin(a.theta), a.psi, a.sheet);
  std::vector<double> x(xb);
  x.insert(x.end(), tb.begin(), tb.end());
  return Paravector::real(sig, x);
}

HybridAngles cartesian_to_hybrid(const Paravector& x) {
  const Signature& sig = x.signature();
  if (x.space() != Space::real_pq) throw DomainMismatch("hybrid coordinates are defined on real-pq points");
  if (sig.p() < 1 || sig.q() < 1) throw AngleRangeError("hybrid coordinates need p >= 1 and q >= 1");
  const auto c = x.real_coords();
  const std::span<const double> xb(c.data(), sig.p() + 1);
  const std::span<const double> tb(c.data() + sig.p() + 1, sig.q());
  HybridAngles a;
  double ra = 0.0, rb = 0.0;
  a.phi = cartesian_to_spherical(xb, &ra);
  a.psi = cartesian_to_spherical(tb, &rb, &a.sheet);
  a.rho = std::hypot(ra, rb);
  a.theta = std::atan2(rb, ra);
  return a;
}

double hybrid_jacobian(const HybridAngles& a, const Signature& sig) {
  validate(a, sig);
  return a.rho * std::pow(std::cos(a.theta), sig.p()) * std::pow(std::sin(a.theta), sig.q() - 1) *
         spherical_jacobian(a.rho, a.phi) * spherical_jacobian(a.rho, a.psi, a.sheet);
}

std::vector<Paravector> hybrid_partials(const HybridAngles& a, const Signature& sig) {
  validate(a, sig);
  const int p = sig.p();
  const double ct = std::cos(a.theta), st = std::sin(a.theta);
  const auto ux = spherical_to_cartesian(1.0, a.phi);
  const auto ut = spherical_to_cartesian(1.0, a.psi, a.sheet);
  const auto dx = spherical_angle_partials(a.rho * ct, a.phi);
  const auto dt = spherical_angle_partials(a.rho * st, a.psi);

  auto assemble = [&](std::span<const double> xs, std::span<const double> ts) {
    std::vector<double> v(xs.begin(), xs.end());
    v.insert(v.end(), ts.begin(), ts.end());
    return Paravector::real(sig, v);
  };
  const std::vector<double> zx(p + 1, 0.0), zt(sig.q(), 0.0);

  std::vector<Paravector> cols;
  std::vector<double> drx(p + 1), drt(sig.q()), dthx(p + 1), dtht(sig.q());
  for (int j = 0; j <= p; ++j) {
    drx[j] = ct * ux[j];
    dthx[j] = -a.rho * st * ux[j];
  }
  for (int j = 0; j < sig.q(); ++j) {
    drt[j] = st * ut[j];
    dtht[j] = a.rho * ct * ut[j];
  }
  cols.push_back(assemble(drx, drt));
  for (const auto& d : dx) cols.push_back(assemble(d, zt));
  cols.push_back(assemble(dthx, dtht));
  for (const auto& d : dt) cols.push_back(assemble(zx, d));
  return cols;
}

double sphere_volume(int n) {
  if (n < 0) throw std::domain_error("sphere_volume: n must be non-negative");
  const double h = 0.5 * (n + 1);
  return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

}  // namespace clifford

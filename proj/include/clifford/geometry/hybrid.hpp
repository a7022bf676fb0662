#pragma once

#include <span>
#include <vector>

#include "clifford/algebra/paravector.hpp"

namespace clifford {

/// Standard spherical coordinates on R^{k+1} with k angles:
///   x_0 = r cos a_1, x_1 = r sin a_1 cos a_2, ..., x_k = r sin a_1 ... sin a_k.
/// With k = 0 the "sphere" is the two points {-1, +1}; `sheet` picks one.
std::vector<double> spherical_to_cartesian(double r, std::span<const double> angles, int sheet = 1);

/// d x / d a_i as a list of k column vectors (each of length k+1).
std::vector<std::vector<double>> spherical_angle_partials(double r, std::span<const double> angles);

/// det of the Jacobian of (r, a_1..a_k) -> x: r^k sin^{k-1} a_1 ... sin a_{k-1}
/// (times the sheet sign when k = 0).
double spherical_jacobian(double r, std::span<const double> angles, int sheet = 1);

/// Inverse of spherical_to_cartesian; last angle in [0, 2pi), the rest in [0, pi].
std::vector<double> cartesian_to_spherical(std::span<const double> x, double* radius = nullptr,
                                           int* sheet = nullptr);

/// Hybrid spherical coordinates for signature (p, q), p >= 1, q >= 1:
/// the x-block (x_0..x_p) is rho cos(theta) times a point of the p-sphere in
/// phi, the x~-block is rho sin(theta) times a point of the (q-1)-sphere in
/// psi. Then N(X) = rho^2 cos(2 theta) and ||X||^2 = rho^2, so the null cone
/// is theta = pi/4.
///
/// Ranges: rho >= 0, theta in [0, pi/2], phi_1..phi_{p-1} and
/// psi_1..psi_{q-2} in [0, pi], phi_p and psi_{q-1} in [0, 2pi]. For q = 1
/// the psi list is empty and `sheet` (+1/-1) selects the sign of x~_{p+1}.
struct HybridAngles {
  double rho = 1.0;
  double theta = 0.0;
  std::vector<double> phi;
  std::vector<double> psi;
  int sheet = 1;
};

void validate(const HybridAngles& a, const Signature& sig);

Paravector hybrid_to_cartesian(const HybridAngles& a, const Signature& sig);
HybridAngles cartesian_to_hybrid(const Paravector& x);

/// Closed-form determinant of the Jacobian with columns ordered
/// (rho, phi_1..phi_p, theta, psi_1..psi_{q-1}):
///   rho cos^p(theta) sin^{q-1}(theta) det S_{p,phi} det S_{q-1,psi}.
double hybrid_jacobian(const HybridAngles& a, const Signature& sig);

/// Partial derivatives of hybrid_to_cartesian in the column order above
/// (n + 1 vectors).
std::vector<Paravector> hybrid_partials(const HybridAngles& a, const Signature& sig);

/// omega_n = 2 pi^{(n+1)/2} / Gamma((n+1)/2), the volume of the unit n-sphere.
double sphere_volume(int n);

}  // namespace clifford

#pragma once

#include "clifford/algebra/paravector.hpp"
#include "clifford/fields/dirac.hpp"

namespace clifford {

/// base^(m/2) on the branch whose square root has positive real part.
/// Defined for base off the closed negative real axis; for even m this is the
/// ordinary integer power.
struct BranchedPower {
  Complex base;
  int half_exponent;

  Complex value() const;
};

/// Square root with strictly positive real part. Throws BranchCutError on the
/// closed negative real axis.
Complex principal_sqrt(Complex w);

enum class Region { in_C_G, in_R_G, excluded };

/// Classification of a kernel argument.
/// Complex points: in_C_G unless N(Z) is (numerically) real and <= 0.
/// Real-pq points: in_R_G iff N(X) > 0, otherwise excluded.
/// Both tests use tolerance 1e-12 * ||Z||^2.
struct KernelPoint {
  Paravector location;
  Region region;

  explicit KernelPoint(Paravector z);
  static constexpr double kTolerance = 1e-12;
};

/// H(Z) = N(Z)^{-(n-1)/2}. For real-pq input the value is real.
Complex h_kernel(const Paravector& z, Space space);

/// G(Z) = Z^+ / N(Z)^{(n+1)/2}, complex left- and right-monogenic on C_G.
Multivector g_kernel(const Paravector& z, Space space);
Paravector g_kernel_paravector(const Paravector& z);

/// G_eps(X) = X^+ / (N(X) + i eps ||X||^2)^{(p+q+1)/2} for real-pq X != 0.
Multivector g_eps_kernel(const Paravector& x, double eps);
Paravector g_eps_paravector(const Paravector& x, double eps);

/// Closed form of nabla_plus G_eps (left) or G_eps nabla_plus (right):
///   i eps (p+q+1) (||X||^2 - Xbar X^+) / (N + i eps ||X||^2)^{(p+q+3)/2}
/// with X^+ Xbar in place of Xbar X^+ on the right.
Multivector dirac_of_g_eps(const Paravector& x, double eps, Side side);

/// G_{p,q}(X - center) as a field on the given space (real-pq or complex).
BlackBoxField translated_green(const Paravector& center, Space space);

}  // namespace clifford

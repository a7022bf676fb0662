#pragma once

#include <span>
#include <vector>

#include "clifford/algebra/paravector.hpp"

namespace clifford {

/// Ordered tangent vectors at a base point. Forms are evaluated on frames
/// of exactly n = p + q vectors; orientation multiplies the result.
struct TangentFrame {
  Paravector base;
  std::vector<Paravector> vectors;
  int orientation = 1;
};

/// dV(e_0, ..., e_n): 1 on C^{n+1}, i^q on R^{p+q+1} with basis e_0..e~_n.
Complex volume_form(const Signature& sig, Space space);

/// dV on n + 1 vectors: det (complex) or i^q det (real-pq).
Complex dv(std::span<const Paravector> vectors);

/// Paravector value of D_n z (complex) or D_{p,q} x (real-pq) on the frame,
/// characterised by <Z_0, D(Z_1..Z_n)> = dV(Z_0, Z_1..Z_n) for every Z_0:
///   D_n z     = sum_j (-1)^j M_j e_j
///   D_{p,q} x = i^q ( sum_{j<=p} (-1)^j M_j e_j - sum_{j>p} (-1)^j M_j e~_j )
/// where M_j is the n x n minor of the coordinate matrix without row j.
Paravector d_form(const TangentFrame& frame, Space space);

/// Z_0 + h_eps(Z - Z_0) with h_eps scaling coordinates j <= p by (1 + i eps)
/// and j > p by (1 - i eps). Real-pq inputs are embedded first; the result
/// is always a complex-span paravector.
Paravector h_eps_map(const Paravector& z, double eps, const Paravector& center);

/// Per-coordinate factors s_j of h_eps.
std::vector<Complex> h_eps_scalings(const Signature& sig, double eps);

/// (h_eps)^* D_n z on the frame: minor j scaled by prod_{k != j} s_k.
/// Real-pq frames are embedded first.
Paravector h_eps_pullback_form(const TangentFrame& frame, double eps);

}  // namespace clifford

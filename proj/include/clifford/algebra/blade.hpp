#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "clifford/algebra/signature.hpp"

namespace clifford {

/// Basis blade e_B, B a subset of {1..n}; bit j-1 set means generator j is in B.
/// The empty mask is the identity e_0.
using Mask = std::uint32_t;

inline int grade(Mask m) { return std::popcount(m); }

/// Parity of the transpositions needed to sort the concatenated generator
/// list of a followed by b.
constexpr int reorder_sign(Mask a, Mask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
  int sign;
  Mask result;
};

/// e_a * e_b = sign * e_{a xor b}.
///
/// In A_n^C every generator squares to -e_0. In A_{p,q} the generators
/// p+1..p+q square to +e_0 and the rest to -e_0.
inline BladeProduct blade_product(Mask a, Mask b, const Signature& sig, Space space) {
  int sign = reorder_sign(a, b);
  const Mask common = a & b;
  const Mask squares_to_minus = space == Space::complex ? common : (common & sig.positive_mask());
  if (std::popcount(squares_to_minus) & 1) sign = -sign;
  return {sign, a ^ b};
}

/// Number of e~ generators in the blade (what the embedding multiplies by i^t).
inline int tilde_count(Mask m, const Signature& sig) { return std::popcount(m & sig.tilde_mask()); }

/// Human-readable blade name: "e0", "e1", "e12"; in real-pq space the tilde
/// generators are listed after a "~", e.g. "e12~2".
std::string blade_name(Mask m, const Signature& sig, Space space);

}  // namespace clifford

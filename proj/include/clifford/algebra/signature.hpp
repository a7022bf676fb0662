#pragma once

#include <cstdint>
#include <string>

#include "clifford/errors.hpp"

namespace clifford {

/// Which algebra a value lives in: the real algebra A_{p,q} (with complexified
/// coefficients) or the complex algebra A_n^C with n = p + q.
enum class Space { real_pq, complex };

/// Nondegenerate quadratic-form signature (p, q), n = p + q >= 1.
///
/// Sign convention: generators satisfy v^2 = -Q(v). So e_j^2 = -e_0 for the
/// p generators with Q = +1 and e~_j^2 = +e_0 for the q generators with
/// Q = -1. This is the opposite of the more common v^2 = +Q(v); swapping the
/// convention silently interchanges p and q.
class Signature {
 public:
  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw InvalidSignature("signature counts must be non-negative");
    if (p + q == 0) throw InvalidSignature("signature (0,0) has no generators");
    if (p + q > 30) throw InvalidSignature("at most 30 generators are supported");
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  /// Number of basis blades, 2^n.
  std::uint32_t blade_count() const { return std::uint32_t{1} << n(); }

  /// Bit mask of the generators e_1..e_p (bit j-1 is generator j).
  std::uint32_t positive_mask() const { return (std::uint32_t{1} << p_) - 1u; }
  std::uint32_t tilde_mask() const { return (blade_count() - 1u) & ~positive_mask(); }

  /// True for generator indices p+1..n (1-based), i.e. the e~_j.
  bool is_tilde(int j) const { return j > p_; }

  std::string to_string() const {
    return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

}  // namespace clifford

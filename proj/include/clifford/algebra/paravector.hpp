#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "clifford/algebra/multivector.hpp"

namespace clifford {

enum class Conjugation { clifford, complex };

/// Element of span{e_0, e_1, ..., e_n}.
///
/// Space::complex: coordinates z_0..z_n against e_0..e_n in A_n^C.
/// Space::real_pq: coordinates x_0..x_p, x~_{p+1}..x~_{p+q} against
/// e_0..e_p, e~_{p+1}..e~_{p+q}. Real points have real coordinates; the
/// coordinates are stored as complex so forms such as D_{p,q}x (which carry
/// a factor i^q) stay representable.
class Paravector {
 public:
  Paravector(Signature sig, Space space) : sig_(sig), space_(space), coords_(sig.n() + 1) {}
  Paravector(Signature sig, Space space, std::vector<Complex> coords);

  static Paravector real(Signature sig, std::span<const double> x);
  static Paravector real(Signature sig, std::initializer_list<double> x) {
    return real(sig, std::span<const double>(x.begin(), x.size()));
  }
  static Paravector complex(Signature sig, std::initializer_list<Complex> z) {
    return {sig, Space::complex, std::vector<Complex>(z)};
  }
  /// Unit vector along coordinate j (0..n).
  static Paravector unit(Signature sig, Space space, int j);

  const Signature& signature() const { return sig_; }
  Space space() const { return space_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  const Complex& operator[](int j) const { return coords_[j]; }
  Complex& operator[](int j) { return coords_[j]; }
  std::span<const Complex> coords() const { return coords_; }

  /// Real parts of the coordinates (for real-pq points).
  std::vector<double> real_coords() const;
  bool is_real(double tol = 0.0) const;

  Multivector to_multivector() const;

  /// iota: real-pq coordinates to complex-span ones, z_j = x_j (j <= p),
  /// z_j = i x~_j (j > p).
  Paravector embed() const;
  /// Inverse of embed.
  Paravector project() const;

  Paravector& operator+=(const Paravector& o);
  Paravector& operator-=(const Paravector& o);
  Paravector& operator*=(Complex k);
  friend Paravector operator+(Paravector a, const Paravector& b) { return a += b; }
  friend Paravector operator-(Paravector a, const Paravector& b) { return a -= b; }
  friend Paravector operator*(Paravector a, Complex k) { return a *= k; }
  friend Paravector operator*(Complex k, Paravector a) { return a *= k; }
  friend Paravector operator*(Paravector a, double k) { return a *= Complex(k); }
  friend Paravector operator*(double k, Paravector a) { return a *= Complex(k); }

  void check_compatible(const Paravector& o) const;

 private:
  Signature sig_;
  Space space_;
  std::vector<Complex> coords_;
};

/// Z^+ (negate coordinates 1..n) or complex conjugation. On real-pq values
/// the complex conjugation is the one induced through iota: x_j -> conj(x_j),
/// x~_j -> -conj(x~_j), which for real points negates only the x~ block.
Paravector conjugate(const Paravector& z, Conjugation mode);

/// N(Z) = Z Z^+ = sum z_j^2 (complex) or sum x_j^2 - sum x~_j^2 (real-pq).
Complex n_form(const Paravector& z);

/// <Z, W> = (Z^+ W + Z W^+)/2, the C-bilinear form associated with N.
Complex bilinear(const Paravector& z, const Paravector& w);

/// ||Z||^2 = sum |coordinate|^2 (>= 0, zero iff Z = 0).
double norm_sq(const Paravector& z);

/// Z^{-1} = Z^+ / N(Z). Throws NullConeError when |N(Z)| <= rel_threshold * ||Z||^2.
Paravector invert(const Paravector& z, double rel_threshold = 1e-12);

/// Product of two paravectors (scalar plus bivector part).
Multivector paravector_product(const Paravector& a, const Paravector& b);

/// Paravector (on the left) times multivector.
Multivector mul(const Paravector& a, const Multivector& m);
/// Multivector times paravector (on the right).
Multivector mul(const Multivector& m, const Paravector& a);

}  // namespace clifford

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "clifford/fields/polynomial_field.hpp"

namespace clifford {

/// nabla_plus = e_0 d_0 + sum e_j d_j - sum e~_j d~_j (real-pq) or
/// e_0 d_0 + sum e_j d_j (complex); nabla flips the signs of the generator terms.
enum class DiracKind { nabla, nabla_plus };
enum class Side { left, right };

/// Sign multiplying the basis element of coordinate j in the operator.
inline int dirac_coefficient(const Signature& sig, Space space, DiracKind which, int j) {
  if (j == 0) return 1;
  int c = which == DiracKind::nabla_plus ? 1 : -1;
  if (space == Space::real_pq && sig.is_tilde(j)) c = -c;
  return c;
}

/// Sign of d^2/d(coordinate j)^2 in the wave (real-pq) or Laplace (complex) operator.
inline int wave_coefficient(const Signature& sig, Space space, int j) {
  return (space == Space::real_pq && sig.is_tilde(j)) ? -1 : 1;
}

/// Dirac operator applied symbolically; exact for any coefficient type.
template <class S>
BasicPolynomialField<S> apply_dirac(const BasicPolynomialField<S>& f, DiracKind which, Side side) {
  const Signature& sig = f.signature();
  BasicPolynomialField<S> out(sig, f.domain());
  for (int j = 0; j <= sig.n(); ++j) {
    const int c = dirac_coefficient(sig, f.domain(), which, j);
    const auto e = BasicMultivector<S>::generator(sig, f.domain(), j, ScalarTraits<S>::from_int(c));
    const auto d = f.derivative(j);
    out += side == Side::left ? d.left_mul(e) : d.right_mul(e);
  }
  return out;
}

template <class S>
BasicPolynomialField<S> apply_wave(const BasicPolynomialField<S>& f) {
  const Signature& sig = f.signature();
  BasicPolynomialField<S> out(sig, f.domain());
  for (int j = 0; j <= sig.n(); ++j)
    out += f.derivative(j).derivative(j) * ScalarTraits<S>::from_int(wave_coefficient(sig, f.domain(), j));
  return out;
}

/// Multivector field given only through point evaluations. The evaluator
/// must be deterministic and reentrant.
struct BlackBoxField {
  Signature sig;
  Space domain;
  std::function<Multivector(const Paravector&)> evaluator;
  bool smooth = true;

  Multivector operator()(const Paravector& x) const { return evaluator(x); }
};

BlackBoxField as_black_box(const PolynomialField& f);

using Field = std::variant<PolynomialField, BlackBoxField>;

Multivector evaluate(const Field& f, const Paravector& x);
const Signature& field_signature(const Field& f);
Space field_domain(const Field& f);

/// Finite-difference settings. No step selects 1e-4 * max(1, ||point||);
/// an explicit step must be positive.
struct FdOptions {
  std::optional<double> step;
};

/// Dirac operator at a point: exact for polynomial fields, 4th-order central
/// differences for black-box fields.
Multivector dirac(const Field& f, const Paravector& point, DiracKind which, Side side, Space space,
                  FdOptions fd = {});

/// Wave operator (real-pq) or complex Laplacian at a point.
Multivector wave_op(const Field& f, const Paravector& point, Space space, FdOptions fd = {});

/// Max coefficient magnitude of nabla nabla_plus f - box f and
/// nabla_plus nabla f - box f, on both sides. Zero in exact arithmetic.
template <class S>
double factorization_residual(const BasicPolynomialField<S>& f, Space space) {
  if (f.domain() != space) throw DomainMismatch("factorization_residual: field/space mismatch");
  const auto box = apply_wave(f);
  double worst = 0.0;
  for (Side side : {Side::left, Side::right}) {
    const auto a = apply_dirac(apply_dirac(f, DiracKind::nabla_plus, side), DiracKind::nabla, side) - box;
    const auto b = apply_dirac(apply_dirac(f, DiracKind::nabla, side), DiracKind::nabla_plus, side) - box;
    worst = std::max({worst, a.max_coeff_magnitude(), b.max_coeff_magnitude()});
  }
  return worst;
}

/// max over points of || nabla_plus f || on the given side.
double monogenicity_residual(const Field& f, std::span<const Paravector> points, Side side, Space space,
                             FdOptions fd = {});

/// Degree-one two-sided monogenic fields, one per generator k = 1..n:
///   real-pq, k <= p : x_k e_0 - x_0 e_k
///   real-pq, k > p  : x~_k e_0 + x_0 e~_k
///   complex         : c_k (z_k e_0 - z_0 e_k), c_k = 1 (k <= p), -i (k > p)
/// The complex factor makes each complex field restrict exactly to the real
/// field with the same k.
std::vector<PolynomialField> fueter_basis(const Signature& sig, Space space);

/// Restriction of a complex-domain field to R^{p+q+1} through iota:
/// z_j = x_j (j <= p), z_j = i x~_j (j > p), values pulled back to A_{p,q}.
PolynomialField restrict_to_real(const PolynomialField& f);

}  // namespace clifford

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clifford/algebra/blade.hpp"
#include "clifford/algebra/scalar.hpp"
#include "clifford/algebra/signature.hpp"
#include "clifford/errors.hpp"

namespace clifford {

/// Element of A_{p,q} (Space::real_pq, complexified coefficients) or of
/// A_n^C (Space::complex), expanded over the 2^n basis blades.
///
/// Storage is a dense 2^n array for n <= 6 and a sorted sparse map above.
template <class S>
class BasicMultivector {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  static constexpr int kDenseMaxGenerators = 6;

  BasicMultivector(Signature sig, Space space) : sig_(sig), space_(space) {
    if (is_dense()) dense_.assign(sig_.blade_count(), Traits::zero());
  }

  static BasicMultivector zero(Signature sig, Space space) { return {sig, space}; }

  static BasicMultivector scalar(Signature sig, Space space, S value) {
    BasicMultivector m(sig, space);
    m.set(0, std::move(value));
    return m;
  }

  static BasicMultivector blade(Signature sig, Space space, Mask mask, S value = Traits::one()) {
    BasicMultivector m(sig, space);
    m.check_mask(mask);
    m.set(mask, std::move(value));
    return m;
  }

  /// Single generator e_j (1-based); in real-pq space j > p is e~_j.
  static BasicMultivector generator(Signature sig, Space space, int j, S value = Traits::one()) {
    if (j < 0 || j > sig.n()) throw std::out_of_range("generator index out of range");
    return blade(sig, space, j == 0 ? Mask{0} : Mask{1} << (j - 1), std::move(value));
  }

  const Signature& signature() const { return sig_; }
  Space space() const { return space_; }
  bool is_dense() const { return sig_.n() <= kDenseMaxGenerators; }

  S coeff(Mask mask) const {
    if (is_dense()) return mask < dense_.size() ? dense_[mask] : Traits::zero();
    auto it = sparse_.find(mask);
    return it == sparse_.end() ? Traits::zero() : it->second;
  }

  void set(Mask mask, S value) {
    if (is_dense()) {
      dense_[mask] = std::move(value);
    } else if (Traits::is_zero(value)) {
      sparse_.erase(mask);
    } else {
      sparse_[mask] = std::move(value);
    }
  }

  void add(Mask mask, const S& value) {
    if (is_dense()) {
      dense_[mask] += value;
      return;
    }
    if (Traits::is_zero(value)) return;
    auto [it, inserted] = sparse_.try_emplace(mask, value);
    if (!inserted) {
      it->second += value;
      if (Traits::is_zero(it->second)) sparse_.erase(it);
    }
  }

  /// Calls fn(mask, coeff) for every nonzero coefficient in increasing mask order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (is_dense()) {
      for (Mask m = 0; m < dense_.size(); ++m)
        if (!Traits::is_zero(dense_[m])) fn(m, dense_[m]);
    } else {
      for (const auto& [m, c] : sparse_) fn(m, c);
    }
  }

  /// Applies fn to every stored coefficient in place.
  template <class Fn>
  void transform(Fn&& fn) {
    if (is_dense()) {
      for (Mask m = 0; m < dense_.size(); ++m) dense_[m] = fn(m, dense_[m]);
    } else {
      std::map<Mask, S> out;
      for (const auto& [m, c] : sparse_) {
        S v = fn(m, c);
        if (!Traits::is_zero(v)) out.emplace(m, std::move(v));
      }
      sparse_ = std::move(out);
    }
  }

  bool is_zero() const {
    bool zero = true;
    for_each_nonzero([&](Mask, const S&) { zero = false; });
    return zero;
  }

  S scalar_part() const { return coeff(0); }

  /// Largest coefficient magnitude.
  double max_abs() const {
    double best = 0.0;
    for_each_nonzero([&](Mask, const S& c) { best = std::max(best, Traits::magnitude(c)); });
    return best;
  }

  /// Root sum of squared coefficient magnitudes.
  double norm() const {
    double acc = 0.0;
    for_each_nonzero([&](Mask, const S& c) {
      const double a = Traits::magnitude(c);
      acc += a * a;
    });
    return std::sqrt(acc);
  }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    check_compatible(o);
    o.for_each_nonzero([&](Mask m, const S& c) { add(m, c); });
    return *this;
  }

  BasicMultivector& operator-=(const BasicMultivector& o) {
    check_compatible(o);
    o.for_each_nonzero([&](Mask m, const S& c) { add(m, -c); });
    return *this;
  }

  BasicMultivector& operator*=(const S& k) {
    transform([&](Mask, const S& c) { return c * k; });
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator-(BasicMultivector a) {
    a.transform([](Mask, const S& c) { return -c; });
    return a;
  }
  friend BasicMultivector operator*(BasicMultivector a, const S& k) { return a *= k; }
  friend BasicMultivector operator*(const S& k, BasicMultivector a) { return a *= k; }

  /// Clifford product.
  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    return mv_mul(a, b);
  }

  friend BasicMultivector mv_mul(const BasicMultivector& a, const BasicMultivector& b) {
    a.check_compatible(b);
    BasicMultivector out(a.sig_, a.space_);
    a.for_each_nonzero([&](Mask ma, const S& ca) {
      b.for_each_nonzero([&](Mask mb, const S& cb) {
        const BladeProduct bp = blade_product(ma, mb, a.sig_, a.space_);
        S term = ca * cb;
        out.add(bp.result, bp.sign > 0 ? term : -term);
      });
    });
    return out;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    if (!(a.sig_ == b.sig_) || a.space_ != b.space_) return false;
    for (Mask m = 0; m < a.sig_.blade_count(); ++m)
      if (!(a.coeff(m) == b.coeff(m))) return false;
    return true;
  }

  void check_compatible(const BasicMultivector& o) const {
    if (!(sig_ == o.sig_)) {
      throw SignatureMismatch("multivector signatures differ: " + sig_.to_string() + " vs " +
                              o.sig_.to_string());
    }
    if (space_ != o.space_) throw SignatureMismatch("cannot combine real-pq and complex multivectors");
  }

 private:
  void check_mask(Mask mask) const {
    if (mask >= sig_.blade_count()) throw std::out_of_range("blade mask out of range");
  }

  Signature sig_;
  Space space_;
  std::vector<S> dense_;
  std::map<Mask, S> sparse_;
};

using Multivector = BasicMultivector<Complex>;
using ExactMultivector = BasicMultivector<GaussianRational>;

/// The homomorphism A_{p,q} -> A_{p+q}^C: e_j -> e_j (j <= p), e~_j -> i e_j,
/// extended multiplicatively and C-linearly. A blade with t tilde generators
/// picks up i^t.
template <class S>
BasicMultivector<S> embed_iota(const BasicMultivector<S>& x) {
  if (x.space() != Space::real_pq) throw DomainMismatch("embed_iota expects a real-pq multivector");
  BasicMultivector<S> out(x.signature(), Space::complex);
  x.for_each_nonzero([&](Mask m, const S& c) {
    out.set(m, c * imag_power<S>(tilde_count(m, x.signature())));
  });
  return out;
}

/// Left inverse of embed_iota on its image (C-linear): multiplies blade
/// coefficients by (-i)^t.
template <class S>
BasicMultivector<S> project_iota(const BasicMultivector<S>& z) {
  if (z.space() != Space::complex) throw DomainMismatch("project_iota expects a complex multivector");
  BasicMultivector<S> out(z.signature(), Space::real_pq);
  z.for_each_nonzero([&](Mask m, const S& c) {
    out.set(m, c * imag_power<S>(-tilde_count(m, z.signature())));
  });
  return out;
}

/// True iff z is the image under iota of an element of the real algebra
/// A_{p,q} (real coefficients), within absolute tolerance tol.
bool is_real_pq(const Multivector& z, double tol);

/// Readable expansion, e.g. "(1+0i)*e0 + (0-2i)*e12".
std::string to_string(const Multivector& m);

}  // namespace clifford

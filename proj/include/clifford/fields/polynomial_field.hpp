#pragma once

#include <map>
#include <vector>

#include "clifford/algebra/multivector.hpp"
#include "clifford/algebra/paravector.hpp"

namespace clifford {

/// Exponent vector over the n+1 coordinate variables (x_0..x~_n or z_0..z_n).
using Exponents = std::vector<int>;

/// Multivector-valued polynomial on R^{p+q+1} (Space::real_pq, variables
/// x_0..x_p, x~_{p+1}..x~_{p+q}) or on C^{n+1} (Space::complex, variables
/// z_0..z_n). Values lie in the algebra of the same space.
template <class S>
class BasicPolynomialField {
 public:
  using Scalar = S;
  using Coefficient = BasicMultivector<S>;
  using Terms = std::map<Exponents, Coefficient>;

  BasicPolynomialField(Signature sig, Space domain) : sig_(sig), domain_(domain) {}

  /// Constant field equal to c everywhere.
  static BasicPolynomialField constant(const Coefficient& c) {
    BasicPolynomialField f(c.signature(), c.space());
    f.add_term(Exponents(c.signature().n() + 1, 0), c);
    return f;
  }

  const Signature& signature() const { return sig_; }
  Space domain() const { return domain_; }
  int variable_count() const { return sig_.n() + 1; }
  const Terms& terms() const { return terms_; }

  void add_term(const Exponents& e, const Coefficient& c) {
    if (static_cast<int>(e.size()) != variable_count())
      throw DomainMismatch("exponent vector has wrong length");
    for (int k : e)
      if (k < 0) throw DomainMismatch("negative exponent");
    c.check_compatible(Coefficient(sig_, domain_));
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add_term(Mask blade, const Exponents& e, S value) {
    add_term(e, Coefficient::blade(sig_, domain_, blade, std::move(value)));
  }

  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  double max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, c.max_abs());
    return m;
  }

  /// d/d(variable var), exact.
  BasicPolynomialField derivative(int var) const {
    BasicPolynomialField out(sig_, domain_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      out.add_term(d, c * ScalarTraits<S>::from_int(e[var]));
    }
    return out;
  }

  /// a * f(x) pointwise.
  BasicPolynomialField left_mul(const Coefficient& a) const {
    BasicPolynomialField out(sig_, domain_);
    for (const auto& [e, c] : terms_) out.add_term(e, a * c);
    return out;
  }

  /// f(x) * a pointwise.
  BasicPolynomialField right_mul(const Coefficient& a) const {
    BasicPolynomialField out(sig_, domain_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * a);
    return out;
  }

  BasicPolynomialField& operator+=(const BasicPolynomialField& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPolynomialField& operator-=(const BasicPolynomialField& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicPolynomialField& operator*=(const S& k) {
    Terms out;
    for (auto& [e, c] : terms_) {
      Coefficient v = c * k;
      if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  friend BasicPolynomialField operator+(BasicPolynomialField a, const BasicPolynomialField& b) { return a += b; }
  friend BasicPolynomialField operator-(BasicPolynomialField a, const BasicPolynomialField& b) { return a -= b; }
  friend BasicPolynomialField operator*(BasicPolynomialField a, const S& k) { return a *= k; }
  friend BasicPolynomialField operator*(const S& k, BasicPolynomialField a) { return a *= k; }

  /// Value at a point of the field's domain (coefficients converted to double).
  Multivector evaluate(const Paravector& point) const {
    if (!(point.signature() == sig_) || point.space() != domain_)
      throw DomainMismatch("point does not lie in the field's domain");
    Multivector out(sig_, domain_);
    for (const auto& [e, c] : terms_) {
      Complex mono = 1.0;
      for (int j = 0; j < variable_count(); ++j)
        for (int k = 0; k < e[j]; ++k) mono *= point[j];
      if (mono == 0.0) continue;
      c.for_each_nonzero([&](Mask m, const S& v) { out.add(m, mono * ScalarTraits<S>::to_complex(v)); });
    }
    return out;
  }

  /// Same polynomial with double-precision coefficients.
  BasicPolynomialField<Complex> to_complex() const {
    BasicPolynomialField<Complex> out(sig_, domain_);
    for (const auto& [e, c] : terms_) {
      Multivector mc(sig_, domain_);
      c.for_each_nonzero([&](Mask m, const S& v) { mc.set(m, ScalarTraits<S>::to_complex(v)); });
      out.add_term(e, mc);
    }
    return out;
  }

  void check_compatible(const BasicPolynomialField& o) const {
    if (!(sig_ == o.sig_) || domain_ != o.domain_)
      throw DomainMismatch("polynomial fields live on different domains");
  }

 private:
  Signature sig_;
  Space domain_;
  Terms terms_;
};

using PolynomialField = BasicPolynomialField<Complex>;
using ExactPolynomialField = BasicPolynomialField<GaussianRational>;

}  // namespace clifford

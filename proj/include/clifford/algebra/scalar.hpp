#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace clifford {

using Complex = std::complex<double>;

/// Exact complex rational a + b i. Used where identities must vanish exactly
/// (operator factorizations on polynomial fields).
class GaussianRational {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Complex to_complex() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << "(" << z.re_ << "," << z.im_ << ")";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Operations the algebra needs from a coefficient type.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static bool is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static Complex from_int(long long k) { return {static_cast<double>(k), 0.0}; }
  static Complex to_complex(const Complex& z) { return z; }
};

template <>
struct ScalarTraits<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational imag_unit() { return GaussianRational::i(); }
  static bool is_zero(const GaussianRational& z) { return z.real() == 0 && z.imag() == 0; }
  static double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }
  static GaussianRational from_int(long long k) { return {k}; }
  static Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
};

/// i^k for integer k (k may be negative).
template <class S>
S imag_power(int k) {
  using T = ScalarTraits<S>;
  switch (((k % 4) + 4) % 4) {
    case 0: return T::one();
    case 1: return T::imag_unit();
    case 2: return -T::one();
    default: return -T::imag_unit();
  }
}

}  // namespace clifford

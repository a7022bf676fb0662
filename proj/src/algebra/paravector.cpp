#include "clifford/algebra/paravector.hpp"

#include <cmath>
#include <string>

namespace clifford {

namespace {

Mask generator_mask(int j) { return j == 0 ? Mask{0} : Mask{1} << (j - 1); }

}  // namespace

Paravector::Paravector(Signature sig, Space space, std::vector<Complex> coords)
    : sig_(sig), space_(space), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != sig_.n() + 1) {
    throw DomainMismatch("paravector needs " + std::to_string(sig_.n() + 1) + " coordinates, got " +
                         std::to_string(coords_.size()));
  }
}

Paravector Paravector::real(Signature sig, std::span<const double> x) {
  std::vector<Complex> c(x.begin(), x.end());
  return {sig, Space::real_pq, std::move(c)};
}

Paravector Paravector::unit(Signature sig, Space space, int j) {
  Paravector z(sig, space);
  z.coords_.at(j) = 1.0;
  return z;
}

std::vector<double> Paravector::real_coords() const {
  std::vector<double> x(coords_.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = coords_[j].real();
  return x;
}

bool Paravector::is_real(double tol) const {
  for (const Complex& c : coords_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

Multivector Paravector::to_multivector() const {
  Multivector m(sig_, space_);
  for (int j = 0; j < dim(); ++j) m.set(generator_mask(j), coords_[j]);
  return m;
}

Paravector Paravector::embed() const {
  if (space_ != Space::real_pq) throw DomainMismatch("embed expects a real-pq paravector");
  Paravector z(sig_, Space::complex);
  for (int j = 0; j < dim(); ++j) z.coords_[j] = sig_.is_tilde(j) ? Complex(0, 1) * coords_[j] : coords_[j];
  return z;
}

Paravector Paravector::project() const {
  if (space_ != Space::complex) throw DomainMismatch("project expects a complex paravector");
  Paravector x(sig_, Space::real_pq);
  for (int j = 0; j < dim(); ++j) x.coords_[j] = sig_.is_tilde(j) ? Complex(0, -1) * coords_[j] : coords_[j];
  return x;
}

void Paravector::check_compatible(const Paravector& o) const {
  if (!(sig_ == o.sig_)) throw SignatureMismatch("paravector signatures differ");
  if (space_ != o.space_) throw SignatureMismatch("cannot combine real-pq and complex paravectors");
}

Paravector& Paravector::operator+=(const Paravector& o) {
  check_compatible(o);
  for (int j = 0; j < dim(); ++j) coords_[j] += o.coords_[j];
  return *this;
}

Paravector& Paravector::operator-=(const Paravector& o) {
  check_compatible(o);
  for (int j = 0; j < dim(); ++j) coords_[j] -= o.coords_[j];
  return *this;
}

Paravector& Paravector::operator*=(Complex k) {
  for (Complex& c : coords_) c *= k;
  return *this;
}

Paravector conjugate(const Paravector& z, Conjugation mode) {
  Paravector out = z;
  const Signature& sig = z.signature();
  for (int j = 0; j < z.dim(); ++j) {
    if (mode == Conjugation::clifford) {
      if (j > 0) out[j] = -z[j];
    } else {
      out[j] = std::conj(z[j]);
      if (z.space() == Space::real_pq && sig.is_tilde(j)) out[j] = -out[j];
    }
  }
  return out;
}

Complex n_form(const Paravector& z) { return bilinear(z, z); }

Complex bilinear(const Paravector& z, const Paravector& w) {
  z.check_compatible(w);
  Complex acc = 0.0;
  for (int j = 0; j < z.dim(); ++j) {
    const Complex t = z[j] * w[j];
    if (z.space() == Space::real_pq && z.signature().is_tilde(j)) {
      acc -= t;
    } else {
      acc += t;
    }
  }
  return acc;
}

double norm_sq(const Paravector& z) {
  double acc = 0.0;
  for (int j = 0; j < z.dim(); ++j) acc += std::norm(z[j]);
  return acc;
}

Paravector invert(const Paravector& z, double rel_threshold) {
  const Complex n = n_form(z);
  const double scale = norm_sq(z);
  if (!(std::abs(n) > rel_threshold * scale)) {
    throw NullConeError("paravector is on the null cone (|N| = " + std::to_string(std::abs(n)) + ")");
  }
  return conjugate(z, Conjugation::clifford) * (1.0 / n);
}

Multivector paravector_product(const Paravector& a, const Paravector& b) {
  return mul(a, b.to_multivector());
}

Multivector mul(const Paravector& a, const Multivector& m) {
  Multivector out(a.signature(), a.space());
  if (!(m.signature() == a.signature()) || m.space() != a.space())
    throw SignatureMismatch("paravector/multivector mismatch");
  for (int j = 0; j < a.dim(); ++j) {
    if (a[j] == 0.0) continue;
    const Mask g = generator_mask(j);
    m.for_each_nonzero([&](Mask b, const Complex& c) {
      const BladeProduct bp = blade_product(g, b, a.signature(), a.space());
      out.add(bp.result, static_cast<double>(bp.sign) * a[j] * c);
    });
  }
  return out;
}

Multivector mul(const Multivector& m, const Paravector& a) {
  Multivector out(a.signature(), a.space());
  if (!(m.signature() == a.signature()) || m.space() != a.space())
    throw SignatureMismatch("paravector/multivector mismatch");
  for (int j = 0; j < a.dim(); ++j) {
    if (a[j] == 0.0) continue;
    const Mask g = generator_mask(j);
    m.for_each_nonzero([&](Mask b, const Complex& c) {
      const BladeProduct bp = blade_product(b, g, a.signature(), a.space());
      out.add(bp.result, static_cast<double>(bp.sign) * c * a[j]);
    });
  }
  return out;
}

}  // namespace clifford

#include "clifford/algebra/multivector.hpp"

#include <cmath>
#include <sstream>

namespace clifford {

std::string blade_name(Mask m, const Signature& sig, Space space) {
  if (m == 0) return "e0";
  std::string out = "e";
  bool tilde = false;
  for (int j = 1; j <= sig.n(); ++j) {
    if (!(m & (Mask{1} << (j - 1)))) continue;
    if (j > 9) out += "_";
    out += std::to_string(j);
    tilde = tilde || (space == Space::real_pq && sig.is_tilde(j));
  }
  // Tilde generators are marked with a trailing list, e.g. "e12~2".
  if (tilde) {
    out += "~";
    for (int j = sig.p() + 1; j <= sig.n(); ++j)
      if (m & (Mask{1} << (j - 1))) out += std::to_string(j);
  }
  return out;
}

bool is_real_pq(const Multivector& z, double tol) {
  if (z.space() != Space::complex) throw DomainMismatch("is_real_pq expects a complex multivector");
  bool real = true;
  z.for_each_nonzero([&](Mask m, const Complex& c) {
    const Complex pre = c * imag_power<Complex>(-tilde_count(m, z.signature()));
    if (std::abs(pre.imag()) > tol) real = false;
  });
  return real;
}

std::string to_string(const Multivector& m) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  m.for_each_nonzero([&](Mask b, const Complex& c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*"
       << blade_name(b, m.signature(), m.space());
  });
  if (first) os << "0";
  return os.str();
}

}  // namespace clifford

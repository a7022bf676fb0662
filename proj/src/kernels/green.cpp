#include "clifford/kernels/green.hpp"

#include <cmath>
#include <sstream>

namespace clifford {

namespace {

Complex int_power(Complex w, int k) {
  Complex result = 1.0;
  Complex base = w;
  unsigned int e = static_cast<unsigned int>(k < 0 ? -k : k);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return k < 0 ? 1.0 / result : result;
}

bool on_cut(Complex w) { return w.imag() == 0.0 && w.real() <= 0.0; }

std::string describe(const Paravector& z) {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < z.dim(); ++j) os << (j ? ", " : "") << z[j];
  os << ")";
  return os.str();
}

void require_kernel_domain(const Paravector& z, Space space) {
  if (z.space() != space) throw DomainMismatch("kernel space does not match the point's space");
  const KernelPoint kp(z);
  if (kp.region == Region::excluded) {
    throw BranchCutError("N(Z) is real and non-positive at " + describe(z) +
                         "; no right-half-plane square root");
  }
}

}  // namespace

Complex principal_sqrt(Complex w) {
  if (on_cut(w)) throw BranchCutError("square root requested on the closed negative real axis");
  return std::sqrt(w);
}

Complex BranchedPower::value() const {
  if (on_cut(base)) throw BranchCutError("branched power requested on the closed negative real axis");
  if (half_exponent % 2 == 0) return int_power(base, half_exponent / 2);
  return int_power(std::sqrt(base), half_exponent);
}

KernelPoint::KernelPoint(Paravector z) : location(std::move(z)), region(Region::excluded) {
  const Complex n = n_form(location);
  const double tol = kTolerance * norm_sq(location);
  if (location.space() == Space::real_pq) {
    region = (n.real() > tol && location.is_real()) ? Region::in_R_G : Region::excluded;
  } else {
    const bool cut = std::abs(n.imag()) <= tol && n.real() <= tol;
    region = cut ? Region::excluded : Region::in_C_G;
  }
}

Complex h_kernel(const Paravector& z, Space space) {
  require_kernel_domain(z, space);
  const Complex v = BranchedPower{n_form(z), -(z.signature().n() - 1)}.value();
  return space == Space::real_pq ? Complex(v.real(), 0.0) : v;
}

Paravector g_kernel_paravector(const Paravector& z) {
  require_kernel_domain(z, z.space());
  const Complex s = BranchedPower{n_form(z), -(z.signature().n() + 1)}.value();
  return conjugate(z, Conjugation::clifford) * s;
}

Multivector g_kernel(const Paravector& z, Space space) {
  if (z.space() != space) throw DomainMismatch("kernel space does not match the point's space");
  return g_kernel_paravector(z).to_multivector();
}

Paravector g_eps_paravector(const Paravector& x, double eps) {
  if (x.space() != Space::real_pq) throw DomainMismatch("G_eps is defined on real-pq points");
  const double r2 = norm_sq(x);
  if (r2 == 0.0) throw OriginError("G_eps is singular at the origin");
  const Complex base = n_form(x) + Complex(0.0, eps * r2);
  const Complex s = BranchedPower{base, -(x.signature().n() + 1)}.value();
  return conjugate(x, Conjugation::clifford) * s;
}

Multivector g_eps_kernel(const Paravector& x, double eps) { return g_eps_paravector(x, eps).to_multivector(); }

Multivector dirac_of_g_eps(const Paravector& x, double eps, Side side) {
  if (x.space() != Space::real_pq) throw DomainMismatch("G_eps is defined on real-pq points");
  const double r2 = norm_sq(x);
  if (r2 == 0.0) throw OriginError("G_eps is singular at the origin");
  const int n = x.signature().n();
  const Paravector xbar = conjugate(x, Conjugation::complex);
  const Paravector xplus = conjugate(x, Conjugation::clifford);
  Multivector num = side == Side::left ? paravector_product(xbar, xplus) : paravector_product(xplus, xbar);
  num = Multivector::scalar(x.signature(), Space::real_pq, r2) - num;
  const Complex base = n_form(x) + Complex(0.0, eps * r2);
  const Complex scale = Complex(0.0, eps * (n + 1)) * BranchedPower{base, -(n + 3)}.value();
  return num * scale;
}

BlackBoxField translated_green(const Paravector& center, Space space) {
  const Paravector c = (space == Space::complex && center.space() == Space::real_pq) ? center.embed() : center;
  if (c.space() != space) throw DomainMismatch("translated_green: center/space mismatch");
  return {c.signature(), space, [c, space](const Paravector& x) { return g_kernel(x - c, space); }, true};
}

}  // namespace clifford

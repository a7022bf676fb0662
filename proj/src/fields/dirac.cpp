#include "clifford/fields/dirac.hpp"

#include <algorithm>
#include <cmath>

namespace clifford {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double resolve_step(const FdOptions& fd, const Paravector& point) {
  if (fd.step) {
    if (!(*fd.step > 0.0)) throw StepError("finite-difference step must be positive");
    return *fd.step;
  }
  return 1e-4 * std::max(1.0, std::sqrt(norm_sq(point)));
}

void check_domain(const Signature& sig, Space domain, const Paravector& point, Space space) {
  if (domain != space) throw DomainMismatch("operator space does not match the field's domain");
  if (!(point.signature() == sig) || point.space() != domain)
    throw DomainMismatch("point does not lie in the field's domain");
}

Paravector shifted(const Paravector& x, int j, double delta) {
  Paravector y = x;
  y[j] += delta;
  return y;
}

// Fourth-order central first derivative along coordinate j.
Multivector fd_first(const BlackBoxField& f, const Paravector& x, int j, double h) {
  Multivector d = (f(shifted(x, j, h)) - f(shifted(x, j, -h))) * Complex(8.0);
  d -= f(shifted(x, j, 2 * h)) - f(shifted(x, j, -2 * h));
  return d * Complex(1.0 / (12.0 * h));
}

// Fourth-order central second derivative along coordinate j.
Multivector fd_second(const BlackBoxField& f, const Paravector& x, int j, double h) {
  Multivector d = (f(shifted(x, j, h)) + f(shifted(x, j, -h))) * Complex(16.0);
  d -= f(shifted(x, j, 2 * h)) + f(shifted(x, j, -2 * h));
  d -= f(x) * Complex(30.0);
  return d * Complex(1.0 / (12.0 * h * h));
}

}  // namespace

BlackBoxField as_black_box(const PolynomialField& f) {
  return {f.signature(), f.domain(), [f](const Paravector& x) { return f.evaluate(x); }, true};
}

Multivector evaluate(const Field& f, const Paravector& x) {
  return std::visit(Overloaded{[&](const PolynomialField& p) { return p.evaluate(x); },
                               [&](const BlackBoxField& b) { return b(x); }},
                    f);
}

const Signature& field_signature(const Field& f) {
  return std::visit(Overloaded{[](const PolynomialField& p) -> const Signature& { return p.signature(); },
                               [](const BlackBoxField& b) -> const Signature& { return b.sig; }},
                    f);
}

Space field_domain(const Field& f) {
  return std::visit(Overloaded{[](const PolynomialField& p) { return p.domain(); },
                               [](const BlackBoxField& b) { return b.domain; }},
                    f);
}

Multivector dirac(const Field& f, const Paravector& point, DiracKind which, Side side, Space space,
                  FdOptions fd) {
  const Signature& sig = field_signature(f);
  check_domain(sig, field_domain(f), point, space);
  Multivector out(sig, space);
  const auto* poly = std::get_if<PolynomialField>(&f);
  const double h = resolve_step(fd, point);
  for (int j = 0; j <= sig.n(); ++j) {
    const Multivector d = poly ? poly->derivative(j).evaluate(point)
                               : fd_first(std::get<BlackBoxField>(f), point, j, h);
    const Multivector e =
        Multivector::generator(sig, space, j, Complex(dirac_coefficient(sig, space, which, j)));
    out += side == Side::left ? e * d : d * e;
  }
  return out;
}

Multivector wave_op(const Field& f, const Paravector& point, Space space, FdOptions fd) {
  const Signature& sig = field_signature(f);
  check_domain(sig, field_domain(f), point, space);
  Multivector out(sig, space);
  const auto* poly = std::get_if<PolynomialField>(&f);
  const double h = poly ? 0.0 : resolve_step(fd, point);
  for (int j = 0; j <= sig.n(); ++j) {
    const Multivector d = poly ? poly->derivative(j).derivative(j).evaluate(point)
                               : fd_second(std::get<BlackBoxField>(f), point, j, h);
    out += d * Complex(wave_coefficient(sig, space, j));
  }
  return out;
}

double monogenicity_residual(const Field& f, std::span<const Paravector> points, Side side, Space space,
                             FdOptions fd) {
  double worst = 0.0;
  for (const Paravector& x : points)
    worst = std::max(worst, dirac(f, x, DiracKind::nabla_plus, side, space, fd).norm());
  return worst;
}

std::vector<PolynomialField> fueter_basis(const Signature& sig, Space space) {
  std::vector<PolynomialField> out;
  const int vars = sig.n() + 1;
  for (int k = 1; k <= sig.n(); ++k) {
    PolynomialField f(sig, space);
    Exponents ek(vars, 0), e0(vars, 0);
    ek[k] = 1;
    e0[0] = 1;
    const Mask gk = Mask{1} << (k - 1);
    if (space == Space::real_pq) {
      f.add_term(0, ek, 1.0);
      f.add_term(gk, e0, sig.is_tilde(k) ? 1.0 : -1.0);
    } else {
      const Complex c = sig.is_tilde(k) ? Complex(0, -1) : Complex(1);
      f.add_term(0, ek, c);
      f.add_term(gk, e0, -c);
    }
    out.push_back(std::move(f));
  }
  return out;
}

PolynomialField restrict_to_real(const PolynomialField& f) {
  if (f.domain() != Space::complex) throw DomainMismatch("restrict_to_real expects a complex-domain field");
  const Signature& sig = f.signature();
  PolynomialField out(sig, Space::real_pq);
  for (const auto& [e, c] : f.terms()) {
    int tilde_degree = 0;
    for (int j = sig.p() + 1; j <= sig.n(); ++j) tilde_degree += e[j];
    out.add_term(e, project_iota(c) * imag_power<Complex>(tilde_degree));
  }
  return out;
}

}  // namespace clifford

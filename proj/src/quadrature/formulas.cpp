#include "clifford/quadrature/formulas.hpp"

#include <cmath>
#include <numbers>

#include "clifford/geometry/forms.hpp"
#include "clifford/geometry/hybrid.hpp"
#include "clifford/kernels/green.hpp"
#include "clifford/quadrature/gauss.hpp"

namespace clifford {

namespace {

void require_real_point(const Paravector& x, const char* what) {
  if (x.space() != Space::real_pq || !x.is_real(0.0)) throw DomainMismatch(std::string(what) + " must be a real point");
}

void require_off_boundary(const Boundary& b, const Paravector& x0) {
  if (b.surface_distance(x0) < 1e-8) throw DomainMismatch("X0 lies on the integration boundary");
}

void check_signatures(const Field& f, const Paravector& x0, const Boundary& b) {
  if (!(field_signature(f) == x0.signature()) || !(b.signature() == x0.signature()))
    throw SignatureMismatch("field, X0 and boundary must share one signature");
}

}  // namespace

Multivector second_formula_integrand(const Field& f, const Paravector& x0, double eps, Side side,
                                     const ChartPoint& cp) {
  const Signature& sig = x0.signature();
  const Paravector kernel = g_eps_paravector(cp.point - x0, eps);
  const Paravector form =
      conjugate(cp.normal, Conjugation::complex) * (imag_power<Complex>(sig.q()) * cp.area_density);
  const Multivector fx = evaluate(f, cp.point);
  if (side == Side::left) return paravector_product(kernel, form) * fx;
  return fx * paravector_product(form, kernel);
}

IntegralEstimate cauchy_second(const Field& f, const Paravector& x0, const Boundary& b, const GridSpec& grid,
                               const EpsSchedule& sched, Side side, const FormulaOptions& opts) {
  sched.validate();
  grid.validate();
  check_signatures(f, x0, b);
  require_real_point(x0, "X0");
  if (field_domain(f) != Space::real_pq) throw DomainMismatch("second formula needs a real-pq field");
  require_off_boundary(b, x0);

  RichardsonTable table;
  std::size_t nodes = 0;
  double min_sine = 1.0;
  for (double eps : sched.values()) {
    const Integrand integrand = [&f, &x0, eps, side](const ChartPoint& cp) {
      return second_formula_integrand(f, x0, eps, side, cp);
    };
    QuadratureStats stats;
    table.add(eps, integrate_boundary(b, integrand, grid, ConeRefinement{x0, eps}, opts.exec, &stats));
    nodes += stats.nodes;
    min_sine = std::min(min_sine, stats.min_transversality);
  }
  IntegralEstimate est = summarize(table, sched.tolerance);
  est.nodes = nodes;
  est.min_transversality = min_sine;
  if (opts.require_convergence && !est.converged)
    throw NonConvergedError("eps-series not Cauchy: error estimate " + std::to_string(est.error) +
                            " exceeds tolerance " + std::to_string(sched.tolerance));
  return est;
}

Multivector cauchy_first(const Field& f, const Paravector& x0, const Boundary& b, const GridSpec& grid, double eps,
                         Side side, Execution exec, QuadratureStats* stats) {
  grid.validate();
  check_signatures(f, x0, b);
  require_real_point(x0, "X0");
  if (field_domain(f) != Space::complex) throw DomainMismatch("first formula needs a complex-domain field");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("first formula needs 0 < eps < 1");
  require_off_boundary(b, x0);

  const Paravector x0c = x0.embed();
  const Integrand integrand = [&f, &x0, &x0c, eps, side](const ChartPoint& cp) {
    const Paravector z = h_eps_map(cp.point, eps, x0);
    const Paravector kernel = g_kernel_paravector(z - x0c);
    const Paravector form = h_eps_pullback_form(TangentFrame{cp.point, cp.tangents}, eps);
    const Multivector fz = evaluate(f, z);
    if (side == Side::left) return paravector_product(kernel, form) * fz;
    return fz * paravector_product(form, kernel);
  };
  // N(h_eps Y) = (1 - eps^2) N(Y) + 2 i eps ||Y||^2: the kernel varies on the
  // scale 2 eps / (1 - eps^2) around the real cone.
  ConeRefinement cone{x0, 2.0 * eps / (1.0 - eps * eps)};
  cone.check_transversality = false;
  return integrate_boundary(b, integrand, grid, cone, exec, stats);
}

Complex c_integral(const Signature& sig, double eps, const GridSpec& grid) {
  const int p = sig.p(), q = sig.q();
  const Interval range{0.0, std::numbers::pi / 2};
  const GradedRoot root{std::numbers::pi / 4, grid.spacing * std::abs(eps) / 2.0};
  const auto panels = graded_panels(range, std::span(&root, 1), grid);
  return integrate_panels(panels, grid.inner_order, [&](double t) {
    const double weight = std::pow(std::cos(t), p) * std::pow(std::sin(t), q - 1);
    return weight * BranchedPower{Complex(std::cos(2 * t), eps), -(sig.n() + 1)}.value();
  });
}

IntegralEstimate c_constant(const Signature& sig, const EpsSchedule& sched, const GridSpec& grid,
                            bool require_convergence) {
  if (sig.q() < 1) throw ConfigError("the constant C_{p,q} needs q >= 1");
  sched.validate();
  grid.validate();
  RichardsonTable table;
  for (double eps : sched.values())
    table.add(eps, Multivector::scalar(sig, Space::complex, c_integral(sig, eps, grid)));
  IntegralEstimate est = summarize(table, sched.tolerance);
  if (require_convergence && !est.converged)
    throw NonConvergedError("C constant series not Cauchy: error estimate " + std::to_string(est.error));
  return est;
}

Complex c_constant_closed_form(const Signature& sig) {
  if (sig.q() < 1) throw ConfigError("the constant C_{p,q} needs q >= 1");
  return imag_power<Complex>(-sig.q()) * (sphere_volume(sig.n()) / (sphere_volume(sig.p()) * sphere_volume(sig.q() - 1)));
}

StokesResult stokes_check(const Field& f, const Field& g, const Boundary& box, const GridSpec& grid,
                          int volume_nodes, Execution exec) {
  if (box.kind() != BoundaryKind::box) throw ConfigError("stokes_check integrates over a box");
  if (volume_nodes < 4) throw ConfigError("stokes_check needs at least 4 volume nodes per axis");
  const Signature& sig = box.signature();
  if (!(field_signature(f) == sig) || !(field_signature(g) == sig))
    throw SignatureMismatch("stokes_check: fields and box must share one signature");
  if (field_domain(f) != Space::real_pq || field_domain(g) != Space::real_pq)
    throw DomainMismatch("stokes_check works on real-pq fields");

  const Integrand surface = [&](const ChartPoint& cp) {
    const Paravector form = d_form(TangentFrame{cp.point, cp.tangents}, Space::real_pq);
    return mul(evaluate(g, cp.point), form) * evaluate(f, cp.point);
  };
  Multivector boundary = integrate_boundary(box, surface, grid, std::nullopt, exec);

  // Exact Dirac fields for polynomials; finite differences otherwise.
  std::optional<PolynomialField> g_dirac, f_dirac;
  if (const auto* gp = std::get_if<PolynomialField>(&g)) g_dirac = apply_dirac(*gp, DiracKind::nabla_plus, Side::right);
  if (const auto* fp = std::get_if<PolynomialField>(&f)) f_dirac = apply_dirac(*fp, DiracKind::nabla_plus, Side::left);
  auto right_dirac_g = [&](const Paravector& x) {
    return g_dirac ? g_dirac->evaluate(x) : dirac(g, x, DiracKind::nabla_plus, Side::right, Space::real_pq);
  };
  auto left_dirac_f = [&](const Paravector& x) {
    return f_dirac ? f_dirac->evaluate(x) : dirac(f, x, DiracKind::nabla_plus, Side::left, Space::real_pq);
  };

  const int dim = sig.n() + 1;
  const GaussRule& rule = gauss_legendre(volume_nodes);
  const auto c = box.center().real_coords();
  const auto& h = box.extents();
  const Complex dv_scale = volume_form(sig, Space::real_pq);

  // One slab per node of the first axis, summed in order afterwards.
  std::vector<std::optional<Multivector>> slabs(volume_nodes);
  std::vector<std::exception_ptr> errors(volume_nodes);
  auto slab = [&](int i0) {
    Multivector acc(sig, Space::real_pq);
    std::vector<int> idx(dim, 0);
    idx[0] = i0;
    std::vector<double> x(dim);
    while (true) {
      double w = 1.0;
      for (int k = 0; k < dim; ++k) {
        x[k] = c[k] + h[k] * rule.nodes[idx[k]];
        w *= h[k] * rule.weights[idx[k]];
      }
      const Paravector pt = Paravector::real(sig, x);
      const Multivector fx = evaluate(f, pt), gx = evaluate(g, pt);
      acc += (right_dirac_g(pt) * fx + gx * left_dirac_f(pt)) * (dv_scale * w);
      int k = 1;
      for (; k < dim; ++k) {
        if (++idx[k] < volume_nodes) break;
        idx[k] = 0;
      }
      if (k == dim) break;
    }
    return acc;
  };
  if (exec == Execution::serial) {
    for (int i = 0; i < volume_nodes; ++i) slabs[i] = slab(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < volume_nodes; ++i) {
      try {
        slabs[i] = slab(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Multivector volume(sig, Space::real_pq);
  for (auto& s : slabs) volume += *s;

  StokesResult out{std::move(boundary), std::move(volume), 0.0};
  out.residual = (out.boundary - out.volume).norm();
  return out;
}

}  // namespace clifford

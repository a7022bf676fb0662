#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "clifford/algebra/random.hpp"
#include "clifford/fields/random.hpp"
#include "clifford/geometry/forms.hpp"
#include "clifford/geometry/hybrid.hpp"
#include "clifford/harness/field_selector.hpp"
#include "clifford/harness/registry.hpp"
#include "clifford/harness/report.hpp"
#include "clifford/kernels/green.hpp"
#include "clifford/quadrature/formulas.hpp"

namespace clifford::harness {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const Multivector& m) { return to_string(m); }

std::uint64_t seed_of(const ExperimentConfig& c, const RunOptions& o) { return o.seed.value_or(c.seed); }

double scaled(const ExperimentConfig& c, const RunOptions& o) { return c.tolerance * o.tolerance_scale; }

void require_single_signature(const ExperimentConfig& c) {
  if (c.signatures.size() != 1) throw ConfigError("field 'signature': this kind takes exactly one signature");
}

std::vector<Signature> signatures_or(const ExperimentConfig& c, std::vector<Signature> fallback) {
  return c.signatures.empty() ? fallback : c.signatures;
}

CsvRow summary_row(const Signature& sig, double metric, const std::string& expected, bool pass) {
  return {sig, "", std::nullopt, metric, expected, pass};
}

// ---------------------------------------------------------------- algebra

void run_algebra(const ExperimentConfig& c, const RunOptions&, Report& r) {
  long checks = 0, violations = 0;
  for (int n = 1; n <= c.max_n; ++n) {
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      for (Space space : {Space::real_pq, Space::complex}) {
        const Mask count = sig.blade_count();
        for (int i = 1; i <= n; ++i) {
          const Mask ei = Mask{1} << (i - 1);
          const BladeProduct sq = blade_product(ei, ei, sig, space);
          const int want = (space == Space::real_pq && sig.is_tilde(i)) ? 1 : -1;
          ++checks;
          if (sq.result != 0 || sq.sign != want) ++violations;
          for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const Mask ej = Mask{1} << (j - 1);
            ++checks;
            if (blade_product(ei, ej, sig, space).sign != -blade_product(ej, ei, sig, space).sign) ++violations;
          }
        }
        for (Mask a = 0; a < count; ++a) {
          ++checks;
          const BladeProduct l = blade_product(0, a, sig, space), rr = blade_product(a, 0, sig, space);
          if (l.sign != 1 || l.result != a || rr.sign != 1 || rr.result != a) ++violations;
          for (Mask b = 0; b < count; ++b) {
            const BladeProduct ab = blade_product(a, b, sig, space);
            for (Mask cc = 0; cc < count; ++cc) {
              const BladeProduct bc = blade_product(b, cc, sig, space);
              const BladeProduct ab_c = blade_product(ab.result, cc, sig, space);
              const BladeProduct a_bc = blade_product(a, bc.result, sig, space);
              ++checks;
              if (ab_c.result != a_bc.result || ab.sign * ab_c.sign != bc.sign * a_bc.sign) ++violations;
            }
          }
        }
      }
    }
  }
  r.metrics["checks"] = checks;
  r.metrics["violations"] = violations;
  r.deviation = static_cast<double>(violations);
  r.provenance = Provenance::exact;
  r.expected_note = "zero violations of e_j^2 = -e_0 / e~_j^2 = e_0, anticommutation, unit and associativity";
  r.pass = violations == 0;
  r.rows.push_back(summary_row(Signature(c.max_n, 0), static_cast<double>(violations), "0", r.pass));
}

// ---------------------------------------------------------------- embedding

void run_embedding(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  std::mt19937_64 rng(seed_of(c, o));
  long violations = 0;
  for (const Signature& sig : signatures_or(c, {{1, 1}, {2, 1}, {1, 2}, {2, 2}})) {
    long bad = 0;
    for (int s = 0; s < c.samples; ++s) {
      const auto x = random_multivector<GaussianRational>(sig, Space::real_pq, rng, 0.5, true);
      const auto y = random_multivector<GaussianRational>(sig, Space::real_pq, rng, 0.5, true);
      if (!(embed_iota(x * y) == embed_iota(x) * embed_iota(y))) ++bad;
      if (!(project_iota(embed_iota(x)) == x)) ++bad;
      const Multivector ix = [&] {
        Multivector m(sig, Space::complex);
        embed_iota(x).for_each_nonzero([&](Mask b, const GaussianRational& v) { m.set(b, v.to_complex()); });
        return m;
      }();
      if (!is_real_pq(ix, 1e-12)) ++bad;
      if (!x.is_zero() && is_real_pq(ix * Complex(0.0, 1.0), 1e-12)) ++bad;
    }
    violations += bad;
    r.rows.push_back(summary_row(sig, static_cast<double>(bad), "0", bad == 0));
    r.metrics["violations_" + sig.to_string()] = bad;
  }
  r.deviation = static_cast<double>(violations);
  r.provenance = Provenance::exact;
  r.expected_note = "iota(xy) = iota(x) iota(y) exactly; iota is injective and lands in the real image";
  r.pass = violations == 0;
}

// ---------------------------------------------------------------- factorization

void run_factorization(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  std::mt19937_64 rng(seed_of(c, o));
  double worst = 0.0;
  for (const Signature& sig : signatures_or(c, {{1, 1}, {2, 1}, {1, 2}, {3, 0}})) {
    double sig_worst = 0.0;
    for (Space space : {Space::real_pq, Space::complex}) {
      for (int s = 0; s < c.samples; ++s) {
        const auto f = random_polynomial<GaussianRational>(sig, space, c.degree, 4, rng, 0.3);
        sig_worst = std::max(sig_worst, factorization_residual(f, space));
      }
    }
    worst = std::max(worst, sig_worst);
    r.rows.push_back(summary_row(sig, sig_worst, "0", sig_worst == 0.0));
    r.metrics["residual_" + sig.to_string()] = sig_worst;
  }
  r.deviation = worst;
  r.provenance = Provenance::theorem;
  r.expected_note = "nabla nabla_plus = nabla_plus nabla = wave operator (complex: Laplacian), exact arithmetic";
  r.pass = worst == 0.0;
}

// ---------------------------------------------------------------- jacobian

// Independent oracle: determinant of a finite-difference Jacobian of the
// coordinate map, columns (rho, phi..., theta, psi...).
double numerical_jacobian(const HybridAngles& a, const Signature& sig, double h) {
  const int dim = sig.n() + 1;
  auto eval = [&](const HybridAngles& b) { return hybrid_to_cartesian(b, sig).real_coords(); };
  auto slot = [](HybridAngles& b, int k, int p) -> double& {
    if (k == 0) return b.rho;
    if (k <= p) return b.phi[k - 1];
    if (k == p + 1) return b.theta;
    return b.psi[k - p - 2];
  };
  Eigen::MatrixXd m(dim, dim);
  for (int k = 0; k < dim; ++k) {
    std::vector<double> d(dim, 0.0);
    for (auto [step, w] : {std::pair{1.0, 8.0}, {-1.0, -8.0}, {2.0, -1.0}, {-2.0, 1.0}}) {
      HybridAngles b = a;
      slot(b, k, sig.p()) += step * h;
      const auto x = eval(b);
      for (int j = 0; j < dim; ++j) d[j] += w * x[j];
    }
    for (int j = 0; j < dim; ++j) m(j, k) = d[j] / (12.0 * h);
  }
  return m.determinant();
}

HybridAngles random_interior_angles(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto in = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
  HybridAngles a;
  a.rho = in(0.5, 2.0);
  a.theta = in(0.05, kPi / 2 - 0.05);
  for (int k = 1; k <= sig.p(); ++k) a.phi.push_back(k == sig.p() ? in(0.05, 2 * kPi - 0.05) : in(0.1, kPi - 0.1));
  for (int k = 1; k <= sig.q() - 1; ++k)
    a.psi.push_back(k == sig.q() - 1 ? in(0.05, 2 * kPi - 0.05) : in(0.1, kPi - 0.1));
  a.sheet = (sig.q() == 1 && u(rng) < 0.5) ? -1 : 1;
  return a;
}

void run_jacobian(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  std::mt19937_64 rng(seed_of(c, o));
  const double tol = scaled(c, o);
  double worst = 0.0;
  for (const Signature& sig : signatures_or(c, {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}})) {
    double sig_worst = 0.0;
    for (int s = 0; s < c.samples; ++s) {
      const HybridAngles a = random_interior_angles(sig, rng);
      const double closed = hybrid_jacobian(a, sig);
      const double numeric = numerical_jacobian(a, sig, c.fd_step.value_or(1e-3));
      sig_worst = std::max(sig_worst, std::abs(closed - numeric) / std::abs(closed));
    }
    worst = std::max(worst, sig_worst);
    r.rows.push_back(summary_row(sig, sig_worst, "0", sig_worst <= tol));
    r.metrics["max_relative_error_" + sig.to_string()] = sig_worst;
  }
  r.deviation = worst;
  r.tolerance = tol;
  r.provenance = Provenance::theorem;
  r.expected_note = "det = rho cos^p(theta) sin^{q-1}(theta) det S_{p,phi} det S_{q-1,psi}";
  r.pass = worst <= tol;
}

// ---------------------------------------------------------------- kernel Dirac

Paravector random_real_point(const Signature& sig, std::mt19937_64& rng, double rmin, double rmax) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(rmin, rmax);
  std::vector<double> x(sig.n() + 1);
  double len = 0.0;
  for (double& v : x) {
    v = g(rng);
    len += v * v;
  }
  const double scale = u(rng) / std::sqrt(len);
  for (double& v : x) v *= scale;
  return Paravector::real(sig, x);
}

void run_kernel_dirac(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  std::mt19937_64 rng(seed_of(c, o));
  std::uniform_real_distribution<double> eps_dist(0.05, 0.5);
  const double tol = scaled(c, o);
  double worst = 0.0;
  for (const Signature& sig : signatures_or(c, {{1, 1}, {2, 1}, {1, 2}})) {
    double sig_worst = 0.0;
    for (int s = 0; s < c.samples; ++s) {
      const Paravector x = random_real_point(sig, rng, 0.5, 2.0);
      const double eps = eps_dist(rng);
      const Field field = BlackBoxField{sig, Space::real_pq,
                                        [eps](const Paravector& y) { return g_eps_kernel(y, eps); }, true};
      for (Side side : {Side::left, Side::right}) {
        const Multivector closed = dirac_of_g_eps(x, eps, side);
        const Multivector fd = dirac(field, x, DiracKind::nabla_plus, side, Space::real_pq, {c.fd_step});
        const double rel = (closed - fd).norm() / std::max(closed.norm(), 1e-300);
        sig_worst = std::max(sig_worst, rel);
      }
    }
    worst = std::max(worst, sig_worst);
    r.rows.push_back(summary_row(sig, sig_worst, "0", sig_worst <= tol));
    r.metrics["max_relative_error_" + sig.to_string()] = sig_worst;
  }
  r.deviation = worst;
  r.tolerance = tol;
  r.provenance = Provenance::theorem;
  r.expected_note = "nabla_plus G_eps = i eps (n+1) (|X|^2 - Xbar X^+) / (N + i eps |X|^2)^{(n+3)/2}";
  r.pass = worst <= tol;
}

// ---------------------------------------------------------------- Green monogenicity

std::vector<Paravector> kernel_points(const Signature& sig, Space space, int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), v(-0.3, 0.3);
  std::vector<Paravector> pts;
  while (static_cast<int>(pts.size()) < count) {
    std::vector<Complex> z(sig.n() + 1);
    for (auto& zj : z) zj = space == Space::complex ? Complex(u(rng), v(rng)) : Complex(u(rng), 0.0);
    const Paravector p(sig, space, z);
    const Complex n = n_form(p);
    if (n.real() < 0.5) continue;
    if (KernelPoint(p).region == Region::excluded) continue;
    pts.push_back(p);
  }
  return pts;
}

void run_green_monogenicity(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  std::mt19937_64 rng(seed_of(c, o));
  const double tol = scaled(c, o);
  double worst = 0.0, restriction = 0.0;
  for (const Signature& sig : signatures_or(c, {{1, 1}, {2, 1}, {1, 2}})) {
    for (Space space : {Space::real_pq, Space::complex}) {
      const auto pts = kernel_points(sig, space, c.samples, rng);
      const Field g = BlackBoxField{sig, space, [space](const Paravector& z) { return g_kernel(z, space); }, true};
      double res = 0.0;
      for (Side side : {Side::left, Side::right})
        res = std::max(res, monogenicity_residual(g, pts, side, space, {c.fd_step.value_or(5e-5)}));
      worst = std::max(worst, res);
      r.rows.push_back(summary_row(sig, res, "0", res <= tol));
      r.metrics[std::string(space == Space::real_pq ? "real_" : "complex_") + sig.to_string()] = res;
      if (space == Space::real_pq) {
        for (const auto& x : pts) {
          const Multivector lhs = g_kernel(x.embed(), Space::complex);
          const Multivector rhs = embed_iota(g_kernel(x, Space::real_pq));
          restriction = std::max(restriction, (lhs - rhs).norm() / rhs.norm());
        }
      }
    }
  }
  r.metrics["restriction_relative_error"] = restriction;
  r.deviation = worst;
  r.tolerance = tol;
  r.provenance = Provenance::theorem;
  r.expected_note = "G is left and right monogenic; G(iota X) = iota G_{p,q}(X)";
  r.pass = worst <= tol && restriction <= 1e-12;
}

// ---------------------------------------------------------------- C constant

void run_c_constant(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  const Signature& sig = c.signature();
  const double tol = scaled(c, o);
  const IntegralEstimate est = c_constant(sig, c.eps, c.grid, false);
  const Complex closed = c_constant_closed_form(sig);
  r.eps = est.eps;
  r.series = est.series;
  r.extrapolants = est.extrapolants;
  r.limit = est.limit;
  r.expected = Multivector::scalar(sig, Space::complex, closed);
  r.provenance = Provenance::derived;
  r.expected_note = "(-i)^q omega_{p+q} / (omega_p omega_{q-1})";
  r.error_estimate = est.error;
  r.deviation = std::abs(est.limit.scalar_part() - closed) / std::abs(closed);
  r.tolerance = tol;
  r.metrics["converged"] = est.converged;
  r.metrics["extrapolated"] = est.extrapolated;
  r.pass = est.converged && r.deviation <= tol;
  for (std::size_t k = 0; k < est.series.size(); ++k)
    r.rows.push_back({sig, std::to_string(est.eps[k]), est.series[k], 0.0, "", r.pass});
  r.rows.push_back({sig, "limit", est.limit, est.error, describe(*r.expected), r.pass});
}

// ---------------------------------------------------------------- Cauchy formulas

struct Scenario {
  Signature sig;
  Paravector x0;
  Boundary boundary;
  bool inside;
  double omega;
};

Scenario scenario(const ExperimentConfig& c) {
  const Signature& sig = c.signature();
  Paravector x0 = c.x0_point(sig);
  Boundary b = c.boundary.build(sig);
  const bool inside = b.contains(x0);
  return {sig, x0, b, inside, sphere_volume(sig.n())};
}

Multivector expected_second(const Scenario& s, const Field& f, int sign) {
  if (!s.inside) return Multivector(s.sig, Space::real_pq);
  const double factor = (sign < 0 && s.sig.q() % 2 == 1) ? -s.omega : s.omega;
  return evaluate(f, s.x0) * Complex(factor);
}

IntegralEstimate second_estimate(const ExperimentConfig& c, const RunOptions& o, const Scenario& s, const Field& f,
                                 double tol) {
  EpsSchedule sched = c.eps;
  if (!c.source.contains("eps") || !c.source["eps"].contains("tolerance")) sched.tolerance = 0.1 * tol * s.omega;
  return cauchy_second(f, s.x0, s.boundary, c.grid, sched, c.side, {o.exec, false});
}

void run_second(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  const Scenario s = scenario(c);
  const double tol = scaled(c, o);
  const Field f = make_field(c.field, s.sig, Space::real_pq, seed_of(c, o));
  const IntegralEstimate est = second_estimate(c, o, s, f, tol);
  const Multivector expected = expected_second(s, f, c.eps.sign);
  r.eps = est.eps;
  r.series = est.series;
  r.extrapolants = est.extrapolants;
  r.limit = est.limit;
  r.expected = expected;
  r.provenance = Provenance::theorem;
  r.expected_note = s.inside ? (c.eps.sign > 0 ? "omega_{p+q} f(X0), X0 inside"
                                               : "(-1)^q omega_{p+q} f(X0), X0 inside, eps -> 0-")
                             : "0, X0 outside the closed region";
  r.error_estimate = est.error;
  r.deviation = (est.limit - expected).norm() / s.omega;
  r.tolerance = tol;
  r.nodes = est.nodes;
  r.metrics["converged"] = est.converged;
  r.metrics["extrapolated"] = est.extrapolated;
  r.metrics["raw_difference"] = est.raw_difference;
  r.metrics["min_transversality"] = est.min_transversality;
  r.metrics["omega"] = s.omega;
  r.pass = est.converged && r.deviation <= tol;
  if (!est.converged) r.message = "eps-series not Cauchy within tolerance";
  for (std::size_t k = 0; k < est.series.size(); ++k)
    r.rows.push_back({s.sig, std::to_string(est.eps[k]), est.series[k], 0.0, "", r.pass});
  r.rows.push_back({s.sig, "limit", est.limit, est.error, describe(expected), r.pass});
}

Multivector expected_first(const Scenario& s, const Field& fc) {
  if (!s.inside) return Multivector(s.sig, Space::complex);
  return evaluate(fc, s.x0.embed()) * Complex(s.omega);
}

void run_first(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  const Scenario s = scenario(c);
  const double tol = scaled(c, o);
  const Field fc = make_field(c.field, s.sig, Space::complex, seed_of(c, o));
  const Multivector expected = expected_first(s, fc);
  double worst = 0.0;
  std::vector<Multivector> values;
  for (double eps : c.eps_values) {
    QuadratureStats stats;
    values.push_back(cauchy_first(fc, s.x0, s.boundary, c.grid, eps, c.side, o.exec, &stats));
    r.nodes += stats.nodes;
    worst = std::max(worst, (values.back() - expected).norm() / s.omega);
  }
  // Grid error at the smallest eps: compare against the grid with all node
  // counts doubled.
  const auto smallest = std::min_element(c.eps_values.begin(), c.eps_values.end()) - c.eps_values.begin();
  const Multivector fine = cauchy_first(fc, s.x0, s.boundary, c.grid.refined(), c.eps_values[smallest], c.side, o.exec);
  const double grid_error = std::max((fine - values[smallest]).norm(), 1e-9 * s.omega);
  double spread = 0.0;
  for (const auto& v : values) spread = std::max(spread, (v - values.front()).norm());

  r.eps = c.eps_values;
  r.series = values;
  r.limit = values[smallest];
  r.expected = expected;
  r.provenance = Provenance::theorem;
  r.expected_note = s.inside ? "omega_{p+q} f(X0), X0 inside" : "0, X0 outside the closed region";
  r.error_estimate = grid_error;
  r.deviation = worst;
  r.tolerance = tol;
  r.metrics["grid_error"] = grid_error;
  r.metrics["eps_spread"] = spread;
  r.metrics["eps_agreement_limit"] = 10.0 * grid_error;
  r.metrics["omega"] = s.omega;
  const bool plateau = spread <= 10.0 * grid_error;
  r.pass = worst <= tol && plateau;
  if (!plateau) r.message = "values at different eps disagree beyond 10x the grid error";
  for (std::size_t k = 0; k < values.size(); ++k)
    r.rows.push_back({s.sig, std::to_string(c.eps_values[k]), values[k], grid_error, describe(expected), r.pass});
}

void run_classical(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  const Scenario s = scenario(c);
  const double tol = scaled(c, o);
  const Field f = make_field(c.field, s.sig, Space::real_pq, seed_of(c, o));
  const Integrand integrand = [&](const ChartPoint& cp) {
    return second_formula_integrand(f, s.x0, 0.0, c.side, cp);
  };
  QuadratureStats stats;
  const Multivector value = integrate_boundary(s.boundary, integrand, c.grid, std::nullopt, o.exec, &stats);
  const Multivector expected = s.inside ? evaluate(f, s.x0) * Complex(s.omega) : Multivector(s.sig, Space::real_pq);
  const Multivector coarse = [&] {
    GridSpec g = c.grid;
    for (int& k : g.outer_nodes) k = std::max(4, k / 2);
    g.inner_order = std::max(4, g.inner_order / 2);
    return integrate_boundary(s.boundary, integrand, g, std::nullopt, o.exec);
  }();
  r.series = {value};
  r.limit = value;
  r.expected = expected;
  r.provenance = Provenance::theorem;
  r.expected_note = s.inside ? "omega_n f(X0), definite signature" : "0, X0 outside";
  r.error_estimate = (value - coarse).norm();
  r.deviation = (value - expected).norm() / s.omega;
  r.tolerance = tol;
  r.nodes = stats.nodes;
  r.pass = r.deviation <= tol;
  r.rows.push_back({s.sig, "0", value, r.error_estimate, describe(expected), r.pass});
}

void run_stokes(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  const Signature& sig = c.signature();
  const double tol = scaled(c, o);
  const Field f = make_field(c.field, sig, Space::real_pq, seed_of(c, o));
  const Field g = make_field(c.g_field, sig, Space::real_pq, seed_of(c, o) + 1);
  const Boundary box = c.boundary.build(sig);
  const StokesResult res = stokes_check(f, g, box, c.grid, c.volume_nodes, o.exec);
  r.series = {res.boundary};
  r.limit = res.boundary;
  r.expected = res.volume;
  r.provenance = Provenance::theorem;
  r.expected_note = "volume integral of (g nabla_plus) f + g (nabla_plus f) against dV_{p,q}";
  r.error_estimate = res.residual;
  r.deviation = res.residual;
  r.tolerance = tol;
  r.metrics["boundary_norm"] = res.boundary.norm();
  r.metrics["volume_norm"] = res.volume.norm();
  r.pass = res.residual <= tol;
  r.rows.push_back({sig, "", res.boundary, res.residual, describe(res.volume), r.pass});
}

void run_cross(const ExperimentConfig& c, const RunOptions& o, Report& r) {
  const Scenario s = scenario(c);
  const double tol = scaled(c, o);
  const Field f = make_field(c.field, s.sig, Space::real_pq, seed_of(c, o));
  const Field fc = make_field(c.field, s.sig, Space::complex, seed_of(c, o));
  EpsSchedule sched = c.eps;
  sched.sign = 1;
  if (!c.source.contains("eps") || !c.source["eps"].contains("tolerance")) sched.tolerance = 0.1 * tol * s.omega;
  const IntegralEstimate second = cauchy_second(f, s.x0, s.boundary, c.grid, sched, c.side, {o.exec, false});
  QuadratureStats stats;
  const Multivector first = cauchy_first(fc, s.x0, s.boundary, c.grid, c.eps_values.front(), c.side, o.exec, &stats);
  const Multivector second_c = embed_iota(second.limit);
  r.series = {second_c, first};
  r.limit = second_c;
  r.expected = first;
  r.provenance = Provenance::theorem;
  r.expected_note = "first-formula value; both formulas equal omega_{p+q} f(X0) (or 0 outside)";
  r.error_estimate = second.error;
  r.deviation = (second_c - first).norm() / s.omega;
  r.tolerance = tol;
  r.nodes = second.nodes + stats.nodes;
  r.metrics["second_converged"] = second.converged;
  r.pass = second.converged && r.deviation <= tol;
  r.rows.push_back({s.sig, "limit", second_c, second.error, describe(first), r.pass});
}

// ---------------------------------------------------------------- validation

void validate_quadrature(const ExperimentConfig& c) {
  require_single_signature(c);
  const Signature& sig = c.signature();
  check_selector(c.field, sig);
  c.boundary.build(sig);
  c.x0_point(sig);
  const Boundary b = c.boundary.build(sig);
  if (b.surface_distance(c.x0_point(sig)) < 1e-8) throw ConfigError("field 'x0': lies on the boundary");
}

void validate_first(const ExperimentConfig& c) {
  validate_quadrature(c);
  if (c.eps_values.empty()) throw ConfigError("field 'eps_values': must not be empty");
  for (double e : c.eps_values)
    if (!(e > 0.0 && e < 1.0)) throw ConfigError("field 'eps_values': entries must lie in (0, 1)");
}

std::vector<ExperimentKind> build_registry() {
  auto none = [](const ExperimentConfig&) {};
  auto sigs_only = none;
  std::vector<ExperimentKind> k;
  k.push_back({"algebra-exactness", "exhaustive blade relations and associativity for n <= max_n", false, none,
               run_algebra});
  k.push_back({"embedding", "iota multiplicativity and real-image test on random pairs", false, sigs_only,
               run_embedding});
  k.push_back({"factorization", "exact nabla nabla_plus = wave operator on random polynomial fields", false,
               sigs_only, run_factorization});
  k.push_back({"jacobian", "hybrid-coordinate Jacobian closed form vs numerical determinant", false,
               [](const ExperimentConfig& c) {
                 for (const auto& s : c.signatures)
                   if (s.p() < 1 || s.q() < 1) throw ConfigError("field 'signatures': jacobian needs p, q >= 1");
               },
               run_jacobian});
  k.push_back({"kernel-dirac", "closed-form nabla_plus G_eps vs 4th-order finite differences", false, sigs_only,
               run_kernel_dirac});
  k.push_back({"green-monogenicity", "finite-difference monogenicity of G, both sides, real and complex", false,
               sigs_only, run_green_monogenicity});
  k.push_back({"c-constant", "eps -> 0 limit of the C_{p,q} integral vs its closed form", true,
               [](const ExperimentConfig& c) {
                 require_single_signature(c);
                 if (c.signature().q() < 1) throw ConfigError("field 'signature': c-constant requires q >= 1");
               },
               run_c_constant});
  k.push_back({"second-formula", "regularised Cauchy integral with eps -> 0 extrapolation", true,
               validate_quadrature, run_second});
  k.push_back({"first-formula", "Cauchy integral over the h_eps-deformed contour", true, validate_first, run_first});
  k.push_back({"classical", "Cauchy integral in definite signature (q = 0)", true,
               [](const ExperimentConfig& c) {
                 validate_quadrature(c);
                 if (c.signature().q() != 0) throw ConfigError("field 'signature': classical requires q = 0");
               },
               run_classical});
  k.push_back({"stokes", "boundary integral of g D f vs volume integral of the product rule", true,
               [](const ExperimentConfig& c) {
                 require_single_signature(c);
                 check_selector(c.field, c.signature());
                 check_selector(c.g_field, c.signature());
                 if (c.boundary.type != "box") throw ConfigError("field 'boundary.type': stokes needs a box");
                 c.boundary.build(c.signature());
               },
               run_stokes});
  k.push_back({"cross-method", "first and second formula agree on the same scenario", true, validate_first,
               run_cross});
  return k;
}

}  // namespace

const std::vector<ExperimentKind>& registry() {
  static const std::vector<ExperimentKind> kinds = build_registry();
  return kinds;
}

const ExperimentKind* find_kind(const std::string& name) {
  for (const auto& k : registry())
    if (k.name == name) return &k;
  return nullptr;
}

}  // namespace clifford::harness

#include "clifford/quadrature/integrate.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <exception>
#include <sstream>

#include "clifford/quadrature/gauss.hpp"

namespace clifford {

void GridSpec::validate() const {
  if (outer_nodes.empty()) throw ConfigError("grid.outer_nodes must not be empty");
  for (int k : outer_nodes)
    if (k < 4) throw ConfigError("grid.outer_nodes entries must be >= 4");
  if (inner_order < 4) throw ConfigError("grid.inner_order must be >= 4");
  if (inner_panels < 1) throw ConfigError("grid.inner_panels must be >= 1");
  if (depth < 0) throw ConfigError("grid.depth must be >= 0");
  if (!(band > 0.0)) throw ConfigError("grid.band must be positive");
  if (!(spacing > 0.0)) throw ConfigError("grid.spacing must be positive");
}

GridSpec GridSpec::refined() const {
  GridSpec g = *this;
  for (int& k : g.outer_nodes) k *= 2;
  g.inner_order *= 2;
  return g;
}

std::vector<Interval> graded_panels(Interval range, std::span<const GradedRoot> roots, const GridSpec& grid) {
  const double width = range.width();
  std::vector<double> cuts;
  for (int k = 0; k <= grid.inner_panels; ++k) cuts.push_back(range.lo + width * k / grid.inner_panels);
  for (const auto& r : roots) {
    cuts.push_back(r.position);
    if (!(r.delta > 0.0)) continue;
    double d = std::min(r.delta, grid.band);
    for (int level = 0; level <= grid.depth && d <= grid.band; ++level, d *= 2.0) {
      cuts.push_back(r.position - d);
      cuts.push_back(r.position + d);
    }
  }
  for (double& c : cuts) c = std::clamp(c, range.lo, range.hi);
  std::sort(cuts.begin(), cuts.end());
  const double min_gap = 1e-15 * std::max(1.0, std::max(std::abs(range.lo), std::abs(range.hi)));
  std::vector<Interval> panels;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] - cuts[i - 1] > min_gap) panels.push_back({cuts[i - 1], cuts[i]});
  return panels;
}

Complex integrate_panels(std::span<const Interval> panels, int order, const std::function<Complex(double)>& f) {
  const GaussRule& rule = gauss_legendre(order);
  Complex sum(0.0);
  for (const auto& p : panels) {
    const double mid = 0.5 * (p.lo + p.hi), half = 0.5 * p.width();
    Complex part(0.0);
    for (int i = 0; i < order; ++i) part += rule.weights[i] * f(mid + half * rule.nodes[i]);
    sum += half * part;
  }
  return sum;
}

namespace {

struct LineJob {
  std::size_t chart = 0;
  std::vector<double> outer;
  double weight = 1.0;
};

bool finite(const Multivector& m) {
  bool ok = true;
  m.for_each_nonzero([&](Mask, const Complex& c) { ok = ok && std::isfinite(c.real()) && std::isfinite(c.imag()); });
  return ok;
}

std::string describe_node(std::span<const double> outer, double inner) {
  std::ostringstream os;
  os.precision(17);
  os << "outer = (";
  for (std::size_t k = 0; k < outer.size(); ++k) os << (k ? ", " : "") << outer[k];
  os << "), inner = " << inner;
  return os.str();
}

int outer_count(const GridSpec& grid, std::size_t k) {
  return grid.outer_nodes[std::min(k, grid.outer_nodes.size() - 1)];
}

// Level function N(X - apex) and the quantities derived from it.
struct ConeGeometry {
  const ConeRefinement& cone;
  std::vector<double> apex;
  int p;

  explicit ConeGeometry(const ConeRefinement& c) : cone(c), apex(c.apex.real_coords()), p(c.apex.signature().p()) {}

  double level(const Paravector& x) const {
    double n = 0.0;
    for (int j = 0; j < x.dim(); ++j) {
      const double y = x[j].real() - apex[j];
      n += j <= p ? y * y : -y * y;
    }
    return n;
  }

  double dist_sq(const Paravector& x) const {
    double r = 0.0;
    for (int j = 0; j < x.dim(); ++j) {
      const double y = x[j].real() - apex[j];
      r += y * y;
    }
    return r;
  }

  // Sine of the angle between grad N and the surface normal's complement,
  // i.e. |P_T grad N| / |grad N|.
  double transversality(const ChartPoint& cp) const {
    double g2 = 0.0, gn = 0.0;
    for (int j = 0; j < cp.point.dim(); ++j) {
      const double y = cp.point[j].real() - apex[j];
      const double g = j <= p ? y : -y;
      g2 += g * g;
      gn += g * cp.normal[j].real();
    }
    if (g2 == 0.0) return 0.0;
    return std::sqrt(std::max(0.0, 1.0 - gn * gn / g2));
  }
};

// Locates the cone crossings on one inner line and returns graded roots.
std::vector<GradedRoot> find_crossings(const Chart& chart, std::span<const double> outer, const ConeGeometry& geo,
                                       const GridSpec& grid, QuadratureStats& stats) {
  const Interval range = chart.inner;
  const int samples = std::max(64, 8 * grid.inner_panels);
  auto level_at = [&](double t) { return geo.level(chart.eval(outer, t).point); };

  std::vector<double> ts(samples + 1), gs(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    ts[i] = range.lo + range.width() * i / samples;
    gs[i] = level_at(ts[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i < samples; ++i) {
    if (gs[i] == 0.0) {
      roots.push_back(ts[i]);
      continue;
    }
    if (gs[i] * gs[i + 1] >= 0.0) continue;
    boost::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(level_at, ts[i], ts[i + 1], gs[i], gs[i + 1],
                                                           boost::math::tools::eps_tolerance<double>(52), iters);
    roots.push_back(0.5 * (bracket.first + bracket.second));
  }
  if (gs[samples] == 0.0) roots.push_back(ts[samples]);

  const double h = 1e-7 * range.width();
  std::vector<GradedRoot> out;
  for (double r : roots) {
    const ChartPoint cp = chart.eval(outer, r);
    const double sine = geo.transversality(cp);
    stats.min_transversality = std::min(stats.min_transversality, sine);
    ++stats.cone_crossings;
    if (geo.cone.check_transversality && sine < geo.cone.min_sine)
      throw TransversalityError("boundary meets the null cone tangentially (sine " + std::to_string(sine) +
                                ") at " + describe_node(outer, r));
    const double lo = std::max(range.lo, r - h), hi = std::min(range.hi, r + h);
    const double slope = std::abs(level_at(hi) - level_at(lo)) / (hi - lo);
    double delta = 0.0;
    if (geo.cone.eps != 0.0 && slope > 0.0) delta = grid.spacing * std::abs(geo.cone.eps) * geo.dist_sq(cp.point) / slope;
    out.push_back({r, delta});
  }

  // A sampled local minimum of |N| close to zero without a sign change means
  // the line grazes the cone.
  if (geo.cone.check_transversality) {
    for (int i = 1; i < samples; ++i) {
      const double a = std::abs(gs[i]);
      if (a > std::abs(gs[i - 1]) || a > std::abs(gs[i + 1])) continue;
      if (gs[i - 1] * gs[i] <= 0.0 || gs[i] * gs[i + 1] <= 0.0) continue;
      const ChartPoint cp = chart.eval(outer, ts[i]);
      if (a < 1e-6 * geo.dist_sq(cp.point) && geo.transversality(cp) < geo.cone.min_sine)
        throw TransversalityError("boundary grazes the null cone at " + describe_node(outer, ts[i]));
    }
  }
  return out;
}

Multivector integrate_line(const Chart& chart, std::span<const double> outer, double outer_weight,
                           const Integrand& integrand, const GridSpec& grid, const ConeGeometry* geo,
                           const Signature& sig, QuadratureStats& stats) {
  std::vector<GradedRoot> roots;
  if (geo) roots = find_crossings(chart, outer, *geo, grid, stats);
  const auto panels = graded_panels(chart.inner, roots, grid);
  const GaussRule& rule = gauss_legendre(grid.inner_order);
  Multivector sum(sig, Space::complex);
  bool first = true;
  for (const auto& panel : panels) {
    const double mid = 0.5 * (panel.lo + panel.hi), half = 0.5 * panel.width();
    for (int i = 0; i < grid.inner_order; ++i) {
      const double t = mid + half * rule.nodes[i];
      const ChartPoint cp = chart.eval(outer, t);
      Multivector v = integrand(cp);
      if (!finite(v)) throw NonFiniteIntegrand("integrand is not finite at " + describe_node(outer, t));
      v *= Complex(outer_weight * half * rule.weights[i]);
      if (first) {
        sum = std::move(v);
        first = false;
      } else {
        sum += v;
      }
      ++stats.nodes;
    }
  }
  ++stats.lines;
  return sum;
}

void merge(QuadratureStats& into, const QuadratureStats& s) {
  into.nodes += s.nodes;
  into.lines += s.lines;
  into.cone_crossings += s.cone_crossings;
  into.min_transversality = std::min(into.min_transversality, s.min_transversality);
}

std::vector<LineJob> enumerate_lines(const std::vector<Chart>& charts, const GridSpec& grid) {
  std::vector<LineJob> jobs;
  for (std::size_t c = 0; c < charts.size(); ++c) {
    const auto& outer = charts[c].outer;
    const std::size_t dims = outer.size();
    std::vector<int> idx(dims, 0);
    while (true) {
      LineJob job{c, std::vector<double>(dims), 1.0};
      for (std::size_t k = 0; k < dims; ++k) {
        const GaussRule& rule = gauss_legendre(outer_count(grid, k));
        const double mid = 0.5 * (outer[k].lo + outer[k].hi), half = 0.5 * outer[k].width();
        job.outer[k] = mid + half * rule.nodes[idx[k]];
        job.weight *= half * rule.weights[idx[k]];
      }
      jobs.push_back(std::move(job));
      std::size_t k = 0;
      for (; k < dims; ++k) {
        if (++idx[k] < outer_count(grid, k)) break;
        idx[k] = 0;
      }
      if (k == dims) break;
    }
  }
  return jobs;
}

Multivector start_sum(const Boundary& b) { return Multivector(b.signature(), Space::complex); }

// Integrands may return either space; the accumulator adopts the first one.
void accumulate(Multivector& total, bool& empty, Multivector part) {
  if (empty) {
    total = std::move(part);
    empty = false;
  } else {
    total += part;
  }
}

}  // namespace

Multivector integrate_boundary(const Boundary& b, const Integrand& integrand, const GridSpec& grid,
                               const std::optional<ConeRefinement>& cone, Execution exec, QuadratureStats* stats) {
  if (exec == Execution::serial) return integrate_boundary_serial(b, integrand, grid, cone, stats);
  grid.validate();
  const auto charts = b.charts();
  const auto jobs = enumerate_lines(charts, grid);
  std::optional<ConeGeometry> geo;
  if (cone) geo.emplace(*cone);

  std::vector<std::optional<Multivector>> parts(jobs.size());
  std::vector<QuadratureStats> line_stats(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const long count = static_cast<long>(jobs.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      const auto& job = jobs[i];
      parts[i] = integrate_line(charts[job.chart], job.outer, job.weight, integrand, grid, geo ? &*geo : nullptr,
                                b.signature(), line_stats[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Multivector total = start_sum(b);
  bool empty = true;
  QuadratureStats agg;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    accumulate(total, empty, std::move(*parts[i]));
    merge(agg, line_stats[i]);
  }
  if (stats) *stats = agg;
  return total;
}

Multivector integrate_boundary_serial(const Boundary& b, const Integrand& integrand, const GridSpec& grid,
                                      const std::optional<ConeRefinement>& cone, QuadratureStats* stats) {
  grid.validate();
  std::optional<ConeGeometry> geo;
  if (cone) geo.emplace(*cone);
  Multivector total = start_sum(b);
  bool empty = true;
  QuadratureStats agg;

  for (const Chart& chart : b.charts()) {
    const std::size_t dims = chart.outer.size();
    std::vector<int> idx(dims, 0);
    std::vector<double> outer(dims);
    while (true) {
      double weight = 1.0;
      for (std::size_t k = 0; k < dims; ++k) {
        const GaussRule& rule = gauss_legendre(outer_count(grid, k));
        const double mid = 0.5 * (chart.outer[k].lo + chart.outer[k].hi), half = 0.5 * chart.outer[k].width();
        outer[k] = mid + half * rule.nodes[idx[k]];
        weight *= half * rule.weights[idx[k]];
      }
      QuadratureStats s;
      accumulate(total, empty,
                 integrate_line(chart, outer, weight, integrand, grid, geo ? &*geo : nullptr, b.signature(), s));
      merge(agg, s);
      std::size_t k = 0;
      for (; k < dims; ++k) {
        if (++idx[k] < outer_count(grid, k)) break;
        idx[k] = 0;
      }
      if (k == dims) break;
    }
  }
  if (stats) *stats = agg;
  return total;
}

}  // namespace clifford

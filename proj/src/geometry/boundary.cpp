#include "clifford/geometry/boundary.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "clifford/geometry/forms.hpp"
#include "clifford/geometry/hybrid.hpp"

namespace clifford {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> relative(const Paravector& x, const Paravector& c) {
  const auto a = x.real_coords();
  const auto b = c.real_coords();
  std::vector<double> d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
  return d;
}

double real_det(std::span<const std::vector<double>> cols) {
  const int n = static_cast<int>(cols.size());
  Eigen::MatrixXd m(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m(j, k) = cols[k][j];
  return m.determinant();
}

// Fixes orientation so det[normal, tangents] > 0 and fills area_density.
ChartPoint make_point(const Signature& sig, std::vector<double> point, std::vector<double> normal,
                      std::vector<std::vector<double>> tangents, std::optional<double> known_det = {}) {
  std::vector<std::vector<double>> cols;
  cols.reserve(tangents.size() + 1);
  cols.push_back(normal);
  for (const auto& t : tangents) cols.push_back(t);
  const double det = known_det ? *known_det : real_det(cols);
  if (det < 0.0 && !tangents.empty())
    for (double& v : tangents.front()) v = -v;
  ChartPoint cp{Paravector::real(sig, point), Paravector::real(sig, normal), {}, std::abs(det)};
  cp.tangents.reserve(tangents.size());
  for (const auto& t : tangents) cp.tangents.push_back(Paravector::real(sig, t));
  return cp;
}

// Angle layout for a standard-spherical chart of the unit n-sphere: the
// first angle is the inner coordinate.
Interval first_angle_range(int n) { return n == 1 ? Interval{0.0, 2 * kPi} : Interval{0.0, kPi}; }

std::vector<Interval> remaining_angle_ranges(int n) {
  std::vector<Interval> r;
  for (int k = 2; k <= n; ++k) r.push_back(k == n ? Interval{0.0, 2 * kPi} : Interval{0.0, kPi});
  return r;
}

}  // namespace

Boundary::Boundary(BoundaryKind kind, Paravector center, std::vector<double> extents)
    : kind_(kind), center_(std::move(center)), extents_(std::move(extents)) {
  if (center_.space() != Space::real_pq || !center_.is_real())
    throw DomainMismatch("boundary center must be a real-pq point");
  for (double e : extents_)
    if (!(e > 0.0) || !std::isfinite(e)) throw std::invalid_argument("boundary extents must be positive");
}

Boundary Boundary::sphere(Paravector center, double radius) {
  const int dim = center.dim();
  return {BoundaryKind::sphere, std::move(center), std::vector<double>(dim, radius)};
}

Boundary Boundary::box(Paravector center, std::vector<double> half_widths) {
  if (static_cast<int>(half_widths.size()) != center.dim())
    throw std::invalid_argument("box needs one half-width per coordinate");
  return {BoundaryKind::box, std::move(center), std::move(half_widths)};
}

Boundary Boundary::ellipsoid(Paravector center, std::vector<double> semi_axes) {
  if (static_cast<int>(semi_axes.size()) != center.dim())
    throw std::invalid_argument("ellipsoid needs one semi-axis per coordinate");
  return {BoundaryKind::ellipsoid, std::move(center), std::move(semi_axes)};
}

bool Boundary::contains(const Paravector& x) const {
  const auto d = relative(x, center_);
  switch (kind_) {
    case BoundaryKind::box:
      for (std::size_t j = 0; j < d.size(); ++j)
        if (std::abs(d[j]) >= extents_[j]) return false;
      return true;
    case BoundaryKind::sphere:
    case BoundaryKind::ellipsoid: {
      double level = 0.0;
      for (std::size_t j = 0; j < d.size(); ++j) level += (d[j] / extents_[j]) * (d[j] / extents_[j]);
      return level < 1.0;
    }
  }
  return false;
}

double Boundary::surface_distance(const Paravector& x) const {
  const auto d = relative(x, center_);
  switch (kind_) {
    case BoundaryKind::sphere: {
      double r2 = 0.0;
      for (double v : d) r2 += v * v;
      return std::abs(std::sqrt(r2) - radius());
    }
    case BoundaryKind::box: {
      // Distance to the surface of the box, inside or outside.
      double outside = 0.0, inside = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < d.size(); ++j) {
        const double g = std::abs(d[j]) - extents_[j];
        if (g > 0.0) outside += g * g;
        inside = std::min(inside, -g);
      }
      return outside > 0.0 ? std::sqrt(outside) : std::max(inside, 0.0);
    }
    case BoundaryKind::ellipsoid: {
      double level = 0.0, grad2 = 0.0;
      for (std::size_t j = 0; j < d.size(); ++j) {
        const double a2 = extents_[j] * extents_[j];
        level += d[j] * d[j] / a2;
        grad2 += 4.0 * d[j] * d[j] / (a2 * a2);
      }
      return grad2 > 0.0 ? std::abs(level - 1.0) / std::sqrt(grad2) : std::numeric_limits<double>::infinity();
    }
  }
  return 0.0;
}

Paravector Boundary::outward_normal(const Paravector& x) const {
  const auto d = relative(x, center_);
  std::vector<double> nrm(d.size(), 0.0);
  switch (kind_) {
    case BoundaryKind::sphere:
      nrm = d;
      break;
    case BoundaryKind::ellipsoid:
      for (std::size_t j = 0; j < d.size(); ++j) nrm[j] = d[j] / (extents_[j] * extents_[j]);
      break;
    case BoundaryKind::box: {
      std::size_t face = 0;
      for (std::size_t j = 1; j < d.size(); ++j)
        if (std::abs(d[j]) / extents_[j] > std::abs(d[face]) / extents_[face]) face = j;
      nrm[face] = d[face] >= 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  double len = 0.0;
  for (double v : nrm) len += v * v;
  len = std::sqrt(len);
  if (len == 0.0) throw NotOnSurfaceError("normal undefined at the boundary center");
  for (double& v : nrm) v /= len;
  return Paravector::real(signature(), nrm);
}

std::vector<Chart> Boundary::charts() const {
  return kind_ == BoundaryKind::box ? box_charts() : sphere_charts();
}

std::vector<Chart> Boundary::sphere_charts() const {
  const Signature sig = signature();
  const int n = sig.n();
  const auto c = center_.real_coords();
  const auto axes = extents_;
  const bool round = kind_ == BoundaryKind::sphere;

  // Maps a unit-sphere point u and its angle partials onto the surface.
  auto finish = [sig, c, axes, round](const std::vector<double>& u, std::vector<std::vector<double>> du,
                                      std::optional<double> unit_det) {
    const std::size_t dim = u.size();
    std::vector<double> point(dim), normal(dim);
    double len = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      point[j] = c[j] + axes[j] * u[j];
      normal[j] = u[j] / axes[j];
      len += normal[j] * normal[j];
    }
    len = std::sqrt(len);
    for (double& v : normal) v /= len;
    for (auto& t : du)
      for (std::size_t j = 0; j < dim; ++j) t[j] *= axes[j];
    std::optional<double> det;
    if (round && unit_det) det = *unit_det * std::pow(axes[0], static_cast<double>(du.size()));
    return make_point(sig, std::move(point), std::move(normal), std::move(du), det);
  };

  std::vector<Chart> out;
  if (sig.p() >= 1 && sig.q() >= 1) {
    const int p = sig.p(), q = sig.q();
    std::vector<Interval> outer;
    for (int k = 1; k <= p; ++k) outer.push_back(k == p ? Interval{0.0, 2 * kPi} : Interval{0.0, kPi});
    for (int k = 1; k <= q - 1; ++k) outer.push_back(k == q - 1 ? Interval{0.0, 2 * kPi} : Interval{0.0, kPi});
    for (int sheet : q == 1 ? std::vector<int>{1, -1} : std::vector<int>{1}) {
      Chart chart;
      chart.outer = outer;
      chart.inner = {0.0, kPi / 2};
      chart.eval = [sig, p, sheet, finish](std::span<const double> o, double theta) {
        HybridAngles a;
        a.rho = 1.0;
        a.theta = theta;
        a.phi.assign(o.begin(), o.begin() + p);
        a.psi.assign(o.begin() + p, o.end());
        a.sheet = sheet;
        const auto cols = hybrid_partials(a, sig);
        const auto u = hybrid_to_cartesian(a, sig).real_coords();
        std::vector<std::vector<double>> du;
        for (std::size_t k = 1; k < cols.size(); ++k) du.push_back(cols[k].real_coords());
        return finish(u, std::move(du), hybrid_jacobian(a, sig));
      };
      out.push_back(std::move(chart));
    }
    return out;
  }

  // Standard spherical coordinates (q = 0 or p = 0).
  Chart chart;
  chart.outer = remaining_angle_ranges(n);
  chart.inner = first_angle_range(n);
  chart.eval = [n, finish](std::span<const double> o, double first) {
    std::vector<double> angles(n);
    angles[0] = first;
    std::copy(o.begin(), o.end(), angles.begin() + 1);
    const auto u = spherical_to_cartesian(1.0, angles);
    auto du = spherical_angle_partials(1.0, angles);
    return finish(u, std::move(du), spherical_jacobian(1.0, angles));
  };
  out.push_back(std::move(chart));
  return out;
}

std::vector<Chart> Boundary::box_charts() const {
  const Signature sig = signature();
  const int dim = sig.n() + 1;
  const auto c = center_.real_coords();
  const auto h = extents_;
  std::vector<Chart> out;
  for (int axis = 0; axis < dim; ++axis) {
    std::vector<int> free;
    for (int j = 0; j < dim; ++j)
      if (j != axis) free.push_back(j);
    for (int side : {-1, 1}) {
      Chart chart;
      for (std::size_t k = 0; k + 1 < free.size(); ++k)
        chart.outer.push_back({c[free[k]] - h[free[k]], c[free[k]] + h[free[k]]});
      chart.inner = {c[free.back()] - h[free.back()], c[free.back()] + h[free.back()]};
      // det[side e_axis, e_free...] = side * (-1)^axis
      const double det = side * ((axis % 2 == 0) ? 1.0 : -1.0);
      chart.eval = [sig, dim, axis, side, free, c, h, det](std::span<const double> o, double inner) {
        std::vector<double> point(dim), normal(dim, 0.0);
        point[axis] = c[axis] + side * h[axis];
        for (std::size_t k = 0; k + 1 < free.size(); ++k) point[free[k]] = o[k];
        point[free.back()] = inner;
        normal[axis] = side;
        std::vector<std::vector<double>> tangents;
        for (int j : free) {
          std::vector<double> t(dim, 0.0);
          t[j] = 1.0;
          tangents.push_back(std::move(t));
        }
        return make_point(sig, std::move(point), std::move(normal), std::move(tangents), det);
      };
      out.push_back(std::move(chart));
    }
  }
  return out;
}

SurfaceMeasure surface_measure(const Boundary& b, const Paravector& x, double tol) {
  if (!(x.signature() == b.signature())) throw SignatureMismatch("surface_measure: signature mismatch");
  if (x.space() != Space::real_pq || !x.is_real(1e-14)) throw DomainMismatch("surface_measure: real point expected");
  const double dist = b.surface_distance(x);
  if (!(dist <= tol)) throw NotOnSurfaceError("point is " + std::to_string(dist) + " away from the surface");
  Paravector normal = b.outward_normal(x);
  Multivector restriction = conjugate(normal, Conjugation::complex).to_multivector();
  return {std::move(normal), volume_form(b.signature(), Space::real_pq), std::move(restriction)};
}

}  // namespace clifford

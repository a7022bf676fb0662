#pragma once

#include <functional>
#include <span>
#include <vector>

#include "clifford/algebra/paravector.hpp"

namespace clifford {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// A surface point produced by a chart. The tangents are the chart partial
/// derivatives, reordered/sign-fixed so {normal, tangents...} is positively
/// oriented against e_0, ..., e~_n. area_density = det[normal, tangents] is
/// the Euclidean (n-dimensional) area per unit chart volume.
struct ChartPoint {
  Paravector point;
  Paravector normal;
  std::vector<Paravector> tangents;
  double area_density = 0.0;
};

/// Parametrisation of one smooth piece of a boundary over a box
/// outer[0] x ... x outer[k-1] x inner. The inner coordinate is the one
/// quadrature refines near the null cone.
struct Chart {
  std::vector<Interval> outer;
  Interval inner;
  std::function<ChartPoint(std::span<const double> outer, double inner)> eval;
};

enum class BoundaryKind { sphere, box, ellipsoid };

/// Boundary of a sphere, axis-aligned box or axis-aligned ellipsoid in
/// R^{p+q+1} (real-pq coordinates), oriented by the outward normal.
class Boundary {
 public:
  static Boundary sphere(Paravector center, double radius);
  static Boundary box(Paravector center, std::vector<double> half_widths);
  static Boundary ellipsoid(Paravector center, std::vector<double> semi_axes);

  BoundaryKind kind() const { return kind_; }
  const Paravector& center() const { return center_; }
  const Signature& signature() const { return center_.signature(); }
  /// Radius (sphere) or half-widths / semi-axes (box, ellipsoid), one per coordinate.
  const std::vector<double>& extents() const { return extents_; }
  double radius() const { return extents_.front(); }

  /// Strictly inside the enclosed region.
  bool contains(const Paravector& x) const;
  /// Approximate Euclidean distance from x to the surface.
  double surface_distance(const Paravector& x) const;
  /// Unit outward normal at a surface point (the dominant face on box edges).
  Paravector outward_normal(const Paravector& x) const;

  std::vector<Chart> charts() const;

 private:
  Boundary(BoundaryKind kind, Paravector center, std::vector<double> extents);

  std::vector<Chart> sphere_charts() const;
  std::vector<Chart> box_charts() const;

  BoundaryKind kind_;
  Paravector center_;
  std::vector<double> extents_;
};

/// Restriction of D_{p,q}x to the surface at X: D_{p,q}x = nbar dS_{p,q},
/// dS_{p,q} = i^q dS_Euclid. `restriction` is nbar (complex conjugation of
/// the unit normal, i.e. the x~ block negated); on S_r this is (X - c)bar / r.
struct SurfaceMeasure {
  Paravector normal;
  Complex ds_scale;
  Multivector restriction;
};

/// Throws NotOnSurfaceError if X is farther than tol from the surface.
SurfaceMeasure surface_measure(const Boundary& b, const Paravector& x, double tol = 1e-10);

}  // namespace clifford

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "clifford/geometry/boundary.hpp"

namespace clifford {

/// Tensor-product Gauss-Legendre grid over chart coordinates.
///
/// Each outer chart coordinate gets a single Gauss-Legendre rule with
/// outer_nodes[k] nodes (the last entry is reused for extra coordinates).
/// The inner coordinate is split into inner_panels equal panels plus, around
/// every null-cone crossing, geometrically graded panels: widths
/// delta * 2^k out to `band`, at most `depth` levels, with delta chosen so
/// the innermost panel is spacing * |eps| (in units of the local kernel
/// scale). Every panel carries an inner_order-point rule.
struct GridSpec {
  std::vector<int> outer_nodes{32};
  int inner_order = 16;
  int inner_panels = 8;
  double band = 0.25;
  int depth = 48;
  double spacing = 0.25;

  void validate() const;
  /// The same grid with every node count doubled.
  GridSpec refined() const;
};

/// Refinement around the shifted null cone N(X - apex) = 0 at kernel scale eps.
/// With check_transversality the integrator raises TransversalityError where
/// the surface meets the cone at an angle whose sine is below min_sine.
struct ConeRefinement {
  Paravector apex;
  double eps = 0.0;
  bool check_transversality = true;
  double min_sine = 1e-3;
};

/// A root of the refinement function on an inner line, with the width of
/// the innermost graded panel.
struct GradedRoot {
  double position = 0.0;
  double delta = 0.0;
};

/// Panel decomposition of [range.lo, range.hi] for the given roots.
std::vector<Interval> graded_panels(Interval range, std::span<const GradedRoot> roots, const GridSpec& grid);

/// Gauss-Legendre integral of a complex function over the panels.
Complex integrate_panels(std::span<const Interval> panels, int order, const std::function<Complex(double)>& f);

enum class Execution { parallel, serial };

using Integrand = std::function<Multivector(const ChartPoint&)>;

struct QuadratureStats {
  std::size_t nodes = 0;
  std::size_t lines = 0;
  std::size_t cone_crossings = 0;
  double min_transversality = 1.0;
};

/// Sum over all charts of the boundary of integrand(point) times the
/// Gauss-Legendre weights in chart coordinates. The chart Jacobian is not
/// applied here; integrands read ChartPoint::area_density or evaluate forms
/// on ChartPoint::tangents. Lines are reduced in a fixed order, so the
/// parallel and serial paths return identical bits.
Multivector integrate_boundary(const Boundary& b, const Integrand& integrand, const GridSpec& grid,
                               const std::optional<ConeRefinement>& cone = std::nullopt,
                               Execution exec = Execution::parallel, QuadratureStats* stats = nullptr);

/// Straightforward nested-loop version of integrate_boundary with no
/// threading, kept as the reference for the parallel path.
Multivector integrate_boundary_serial(const Boundary& b, const Integrand& integrand, const GridSpec& grid,
                                      const std::optional<ConeRefinement>& cone = std::nullopt,
                                      QuadratureStats* stats = nullptr);

}  // namespace clifford

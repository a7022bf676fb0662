#pragma once

#include "clifford/fields/dirac.hpp"
#include "clifford/geometry/boundary.hpp"
#include "clifford/quadrature/extrapolation.hpp"
#include "clifford/quadrature/integrate.hpp"

namespace clifford {

struct FormulaOptions {
  Execution exec = Execution::parallel;
  /// Throw NonConvergedError when the eps-series is not Cauchy within the
  /// schedule tolerance. When false the estimate is returned with
  /// converged = false.
  bool require_convergence = true;
};

/// Regularised integral over the boundary, for each eps in the schedule:
///   left : int G_eps(X - X0) D_{p,q}x f(X)
///   right: int f(X) D_{p,q}x G_eps(X - X0)
/// followed by extrapolation eps -> 0. D_{p,q}x is evaluated as nbar i^q dS.
/// The boundary must meet the shifted cone transversally.
IntegralEstimate cauchy_second(const Field& f, const Paravector& x0, const Boundary& b, const GridSpec& grid,
                               const EpsSchedule& sched, Side side, const FormulaOptions& opts = {});

/// int over h_{eps,X0}(boundary) of G(Z - X0) D z f(Z) (left) or
/// f(Z) D z G(Z - X0) (right), for a complex-domain field, evaluated by
/// pulling the form back to the real boundary. Result lives in A_n^C.
Multivector cauchy_first(const Field& f, const Paravector& x0, const Boundary& b, const GridSpec& grid, double eps,
                         Side side, Execution exec = Execution::parallel, QuadratureStats* stats = nullptr);

/// The integrand of the second formula at one chart point (exposed for tests).
Multivector second_formula_integrand(const Field& f, const Paravector& x0, double eps, Side side,
                                     const ChartPoint& cp);

/// I(eps) = int_0^{pi/2} cos^p t sin^{q-1} t (cos 2t + i eps)^{-(p+q+1)/2} dt.
Complex c_integral(const Signature& sig, double eps, const GridSpec& grid);

/// Extrapolated limit of c_integral as eps -> 0 along the schedule; q >= 1.
IntegralEstimate c_constant(const Signature& sig, const EpsSchedule& sched, const GridSpec& grid,
                            bool require_convergence = true);

/// (-i)^q omega_{p+q} / (omega_p omega_{q-1}).
Complex c_constant_closed_form(const Signature& sig);

struct StokesResult {
  Multivector boundary;
  Multivector volume;
  double residual = 0.0;
};

/// Compares int_{boundary} g D_{p,q}x f with
/// int_box [(g nabla_plus) f + g (nabla_plus f)] dV_{p,q} on a box.
/// Volume integration is a Gauss-Legendre tensor grid with volume_nodes
/// points per axis.
StokesResult stokes_check(const Field& f, const Field& g, const Boundary& box, const GridSpec& grid,
                          int volume_nodes, Execution exec = Execution::parallel);

}  // namespace clifford

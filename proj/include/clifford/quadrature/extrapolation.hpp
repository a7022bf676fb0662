#pragma once

#include <cstddef>
#include <vector>

#include "clifford/algebra/multivector.hpp"

namespace clifford {

/// Geometric regularisation sequence eps_k = sign * eps0 * ratio^k, k < steps.
struct EpsSchedule {
  double eps0 = 0.1;
  double ratio = 0.5;
  int steps = 6;
  int sign = 1;
  /// Absolute tolerance on the Cauchy test of the extrapolated sequence.
  double tolerance = 1e-3;

  void validate() const;
  std::vector<double> values() const;
};

/// Neville table for extrapolation to eps = 0 of a sequence assumed smooth
/// (power series) in eps. Row k holds the extrapolants built from samples
/// 0..k; the diagonal entry of row k uses all of them.
class RichardsonTable {
 public:
  void add(double eps, Multivector value);

  std::size_t size() const { return eps_.size(); }
  const std::vector<double>& eps() const { return eps_; }
  const std::vector<Multivector>& samples() const { return samples_; }
  /// Diagonal extrapolants, one per sample.
  const std::vector<Multivector>& diagonal() const { return diagonal_; }

 private:
  std::vector<double> eps_;
  std::vector<Multivector> samples_;
  std::vector<std::vector<Multivector>> rows_;
  std::vector<Multivector> diagonal_;
};

/// Quadrature value per eps plus the eps -> 0 limit.
struct IntegralEstimate {
  std::vector<double> eps;
  std::vector<Multivector> series;
  std::vector<Multivector> extrapolants;
  Multivector limit;
  double error = 0.0;
  /// Distance between the last two raw samples, kept next to the
  /// extrapolation error so a misleading extrapolant is visible.
  double raw_difference = 0.0;
  bool extrapolated = true;
  bool converged = false;
  std::size_t nodes = 0;
  double min_transversality = 1.0;

  Multivector value() const { return series.empty() ? limit : series.back(); }
};

/// Builds the estimate from a finished table: the limit is the last
/// diagonal extrapolant and the error the norm of the difference of the last
/// two. If the extrapolants move more than the raw samples, extrapolation is
/// abandoned for the last raw value and the raw difference.
IntegralEstimate summarize(const RichardsonTable& table, double tolerance);

}  // namespace clifford

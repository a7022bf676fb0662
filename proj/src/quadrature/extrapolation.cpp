#include "clifford/quadrature/extrapolation.hpp"

#include <cmath>
#include <limits>

namespace clifford {

void EpsSchedule::validate() const {
  if (!(eps0 > 0.0)) throw ConfigError("eps schedule: eps0 must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw ConfigError("eps schedule: ratio must lie in (0, 1)");
  if (steps < 2) throw ConfigError("eps schedule: at least two steps are needed");
  if (sign != 1 && sign != -1) throw ConfigError("eps schedule: sign must be +1 or -1");
  if (!(tolerance > 0.0)) throw ConfigError("eps schedule: tolerance must be positive");
}

std::vector<double> EpsSchedule::values() const {
  std::vector<double> v(steps);
  double e = eps0;
  for (int k = 0; k < steps; ++k, e *= ratio) v[k] = sign * e;
  return v;
}

void RichardsonTable::add(double eps, Multivector value) {
  eps_.push_back(eps);
  samples_.push_back(value);
  const std::size_t k = eps_.size() - 1;
  std::vector<Multivector> row;
  row.reserve(k + 1);
  row.push_back(std::move(value));
  // Neville: T[k][j] = T[k][j-1] + (T[k][j-1] - T[k-1][j-1]) * eps_k / (eps_{k-j} - eps_k)
  for (std::size_t j = 1; j <= k; ++j) {
    const Multivector& cur = row[j - 1];
    const Multivector& prev = rows_[k - 1][j - 1];
    const double factor = eps_[k] / (eps_[k - j] - eps_[k]);
    row.push_back(cur + (cur - prev) * Complex(factor));
  }
  diagonal_.push_back(row.back());
  rows_.push_back(std::move(row));
}

IntegralEstimate summarize(const RichardsonTable& table, double tolerance) {
  if (table.size() == 0) throw NonConvergedError("no samples to extrapolate");
  IntegralEstimate est{table.eps(), table.samples(), table.diagonal(), table.diagonal().back()};
  const std::size_t k = table.size();
  if (k >= 2) {
    est.raw_difference = (table.samples()[k - 1] - table.samples()[k - 2]).norm();
    est.error = (table.diagonal()[k - 1] - table.diagonal()[k - 2]).norm();
    if (est.error > est.raw_difference) {
      est.limit = table.samples().back();
      est.error = est.raw_difference;
      est.extrapolated = false;
    }
  } else {
    est.error = std::numeric_limits<double>::infinity();
  }
  est.converged = std::isfinite(est.error) && est.error <= tolerance;
  return est;
}

}  // namespace clifford

#include "clifford/quadrature/gauss.hpp"

#include <gsl/gsl_integration.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace clifford {

namespace {

GaussRule build_rule(int order) {
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(order);
  if (!table) throw std::runtime_error("GSL could not allocate a Gauss-Legendre table");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i)
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule.nodes[i], &rule.weights[i], table);
  gsl_integration_glfixed_table_free(table);
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(order));
  return *slot;
}

}  // namespace clifford

#pragma once

#include <vector>

namespace clifford {

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (>= 1); safe to call concurrently.
const GaussRule& gauss_legendre(int order);

}  // namespace clifford

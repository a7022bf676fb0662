#pragma once

#include <random>

#include "clifford/algebra/random.hpp"
#include "clifford/fields/polynomial_field.hpp"

namespace clifford {

/// Polynomial field with `terms` random monomials of total degree
/// <= max_degree, each carrying a random multivector coefficient with small
/// Gaussian-integer entries.
template <class S>
BasicPolynomialField<S> random_polynomial(const Signature& sig, Space space, int max_degree, int terms,
                                          std::mt19937_64& rng, double density = 0.5) {
  BasicPolynomialField<S> f(sig, space);
  std::uniform_int_distribution<int> var(0, sig.n());
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    Exponents e(sig.n() + 1, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    f.add_term(e, random_multivector<S>(sig, space, rng, density));
  }
  return f;
}

}  // namespace clifford

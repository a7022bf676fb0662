#pragma once

#include <random>

#include "clifford/algebra/multivector.hpp"

namespace clifford {

/// Small Gaussian integer a + b i with a, b uniform in [-bound, bound].
template <class S>
S random_gaussian_integer(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  const int re = d(rng), im = d(rng);
  return ScalarTraits<S>::from_int(re) + ScalarTraits<S>::from_int(im) * ScalarTraits<S>::imag_unit();
}

/// Multivector with each blade coefficient drawn by random_gaussian_integer
/// (kept with probability `density`). Real-valued coefficients only when
/// real_only is set.
template <class S>
BasicMultivector<S> random_multivector(const Signature& sig, Space space, std::mt19937_64& rng,
                                       double density = 1.0, bool real_only = false, int bound = 3) {
  BasicMultivector<S> m(sig, space);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (Mask b = 0; b < sig.blade_count(); ++b) {
    if (!keep(rng)) continue;
    m.set(b, real_only ? ScalarTraits<S>::from_int(d(rng)) : random_gaussian_integer<S>(rng, bound));
  }
  return m;
}

}  // namespace clifford

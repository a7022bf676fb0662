#pragma once

#include <cstdint>
#include <string>

#include "clifford/fields/dirac.hpp"

namespace clifford::harness {

/// Resolves a field selector:
///   constant              e_0
///   fueter:k              k-th degree-one monogenic field (k = 1..n)
///   translated-green:c    G(X - c), c given as comma-separated real coordinates
///   coordinate:j          x_j e_0 (not monogenic)
///   random:d              random polynomial of degree <= d drawn from seed
/// in the requested space (complex selectors use the complex versions, which
/// restrict to the real ones).
Field make_field(const std::string& selector, const Signature& sig, Space space, std::uint64_t seed = 1);

/// Checks that the selector is well formed for the signature (throws ConfigError).
void check_selector(const std::string& selector, const Signature& sig);

}  // namespace clifford::harness

#include "clifford/harness/field_selector.hpp"

#include <random>
#include <sstream>

#include "clifford/fields/random.hpp"
#include "clifford/kernels/green.hpp"

namespace clifford::harness {

namespace {

struct Parsed {
  std::string head;
  std::string arg;
};

Parsed split(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {s, ""};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

int parse_int(const std::string& selector, const std::string& arg) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(arg, &used);
    if (used == arg.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("field selector '" + selector + "': expected an integer argument");
}

std::vector<double> parse_point(const std::string& selector, const std::string& arg, const Signature& sig) {
  std::vector<double> c;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      c.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("field selector '" + selector + "': bad coordinate '" + item + "'");
    }
  }
  if (static_cast<int>(c.size()) != sig.n() + 1)
    throw ConfigError("field selector '" + selector + "': center needs p + q + 1 coordinates");
  return c;
}

}  // namespace

void check_selector(const std::string& selector, const Signature& sig) {
  const auto [head, arg] = split(selector);
  if (head == "constant") {
    if (!arg.empty()) throw ConfigError("field selector 'constant' takes no argument");
  } else if (head == "fueter") {
    const int k = parse_int(selector, arg);
    if (k < 1 || k > sig.n()) throw ConfigError("field selector '" + selector + "': k must lie in 1..n");
  } else if (head == "coordinate") {
    const int j = parse_int(selector, arg);
    if (j < 0 || j > sig.n()) throw ConfigError("field selector '" + selector + "': j must lie in 0..n");
  } else if (head == "random") {
    if (parse_int(selector, arg) < 0) throw ConfigError("field selector '" + selector + "': negative degree");
  } else if (head == "translated-green") {
    parse_point(selector, arg, sig);
  } else {
    throw ConfigError("unknown field selector '" + selector + "'");
  }
}

Field make_field(const std::string& selector, const Signature& sig, Space space, std::uint64_t seed) {
  check_selector(selector, sig);
  const auto [head, arg] = split(selector);
  if (head == "constant") return PolynomialField::constant(Multivector::scalar(sig, space, 1.0));
  if (head == "fueter") return fueter_basis(sig, space)[parse_int(selector, arg) - 1];
  if (head == "coordinate") {
    PolynomialField f(sig, space);
    Exponents e(sig.n() + 1, 0);
    e[parse_int(selector, arg)] = 1;
    f.add_term(Mask{0}, e, Complex(1.0));
    return f;
  }
  if (head == "random") {
    std::mt19937_64 rng(seed);
    return random_polynomial<Complex>(sig, space, parse_int(selector, arg), 6, rng);
  }
  return translated_green(Paravector::real(sig, parse_point(selector, arg, sig)), space);
}

}  // namespace clifford::harness

#include "clifford/geometry/forms.hpp"

#include <Eigen/Dense>

namespace clifford {

namespace {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

void check_frame(const TangentFrame& frame) {
  const Signature& sig = frame.base.signature();
  if (static_cast<int>(frame.vectors.size()) != sig.n())
    throw FrameError("frame has " + std::to_string(frame.vectors.size()) + " vectors, expected " +
                     std::to_string(sig.n()));
  for (const auto& v : frame.vectors) {
    if (!(v.signature() == sig)) throw SignatureMismatch("frame vector signature differs from base point");
    if (v.space() != frame.vectors.front().space()) throw FrameError("frame mixes real-pq and complex vectors");
  }
}

// Coordinate matrix: row j = coordinate j, column k = vector k.
CMatrix coordinate_matrix(std::span<const Paravector> vectors) {
  const int rows = vectors.front().dim();
  CMatrix m(rows, static_cast<int>(vectors.size()));
  for (int k = 0; k < m.cols(); ++k)
    for (int j = 0; j < rows; ++j) m(j, k) = vectors[k][j];
  return m;
}

// Signed cofactors c_j = (-1)^j det(minor without row j), j = 0..n.
std::vector<Complex> signed_minors(const CMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int n = rows - 1;
  std::vector<Complex> c(rows);
  CMatrix minor(n, n);
  for (int j = 0; j < rows; ++j) {
    for (int r = 0, out = 0; r < rows; ++r) {
      if (r == j) continue;
      minor.row(out++) = m.row(r);
    }
    const Complex det = n == 0 ? Complex(1.0) : minor.determinant();
    c[j] = (j % 2 == 0) ? det : -det;
  }
  return c;
}

std::vector<Paravector> embedded(const std::vector<Paravector>& v) {
  std::vector<Paravector> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.space() == Space::real_pq ? x.embed() : x);
  return out;
}

}  // namespace

Complex volume_form(const Signature& sig, Space space) {
  return space == Space::real_pq ? imag_power<Complex>(sig.q()) : Complex(1.0);
}

Complex dv(std::span<const Paravector> vectors) {
  if (vectors.empty()) throw FrameError("dv needs n + 1 vectors");
  const Signature& sig = vectors.front().signature();
  if (static_cast<int>(vectors.size()) != sig.n() + 1) throw FrameError("dv needs n + 1 vectors");
  const Space space = vectors.front().space();
  return volume_form(sig, space) * coordinate_matrix(vectors).determinant();
}

Paravector d_form(const TangentFrame& frame, Space space) {
  check_frame(frame);
  const Signature& sig = frame.base.signature();
  if (frame.vectors.front().space() != space) throw DomainMismatch("d_form: frame space differs from form space");
  const auto c = signed_minors(coordinate_matrix(frame.vectors));
  Paravector out(sig, space);
  const Complex scale = volume_form(sig, space) * static_cast<double>(frame.orientation);
  for (int j = 0; j <= sig.n(); ++j) {
    const bool flip = space == Space::real_pq && sig.is_tilde(j);
    out[j] = scale * (flip ? -c[j] : c[j]);
  }
  return out;
}

std::vector<Complex> h_eps_scalings(const Signature& sig, double eps) {
  std::vector<Complex> s(sig.n() + 1);
  for (int j = 0; j <= sig.n(); ++j) s[j] = sig.is_tilde(j) ? Complex(1.0, -eps) : Complex(1.0, eps);
  return s;
}

Paravector h_eps_map(const Paravector& z, double eps, const Paravector& center) {
  if (!(z.signature() == center.signature())) throw SignatureMismatch("h_eps_map: center signature differs");
  const Paravector zc = z.space() == Space::real_pq ? z.embed() : z;
  const Paravector cc = center.space() == Space::real_pq ? center.embed() : center;
  const auto s = h_eps_scalings(z.signature(), eps);
  Paravector out(z.signature(), Space::complex);
  for (int j = 0; j < out.dim(); ++j) out[j] = cc[j] + s[j] * (zc[j] - cc[j]);
  return out;
}

Paravector h_eps_pullback_form(const TangentFrame& frame, double eps) {
  check_frame(frame);
  const Signature& sig = frame.base.signature();
  const auto vectors = embedded(frame.vectors);
  const auto c = signed_minors(coordinate_matrix(vectors));
  const auto s = h_eps_scalings(sig, eps);
  Complex all(1.0);
  for (const auto& v : s) all *= v;
  Paravector out(sig, Space::complex);
  for (int j = 0; j <= sig.n(); ++j) out[j] = static_cast<double>(frame.orientation) * (all / s[j]) * c[j];
  return out;
}

}  // namespace clifford

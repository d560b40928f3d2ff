#include "jgate/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "jgate/errors.hpp"

namespace jgate {

std::string_view to_string(MoebiusClass cls) {
  switch (cls) {
    case MoebiusClass::Identity: return "Identity";
    case MoebiusClass::Parabolic: return "Parabolic";
    case MoebiusClass::Elliptic: return "Elliptic";
    case MoebiusClass::Loxodromic: return "Loxodromic";
  }
  return "?";
}

MoebiusClass classify(const UnimodularMatrix& m) {
  if (is_plus_minus_identity(m, kClassifyTolerance)) return MoebiusClass::Identity;
  const Complex tr = trace(m);
  const Complex t = tr * tr;
  if (std::abs(t - 4.0) <= kClassifyTolerance) return MoebiusClass::Parabolic;
  const bool real = std::abs(t.imag()) <= kClassifyTolerance * std::max(1.0, std::abs(t));
  if (real && t.real() >= -kClassifyTolerance && t.real() < 4.0) return MoebiusClass::Elliptic;
  return MoebiusClass::Loxodromic;
}

std::vector<BoundaryPoint> fixed_points(const UnimodularMatrix& m) {
  const MoebiusClass cls = classify(m);
  if (cls == MoebiusClass::Identity) throw IsIdentity();
  const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();

  // c = 0: infinity is fixed; the finite one solves (d - a) z = b.
  if (std::abs(c) <= kClassifyTolerance * std::max(1.0, m.max_abs())) {
    if (cls == MoebiusClass::Parabolic) return {Infinity{}};
    return {Complex{b / (d - a)}, Infinity{}};
  }

  // Roots of c z^2 + (d - a) z - b = 0; discriminant is tr^2 - 4.
  const Complex p = a - d;
  if (cls == MoebiusClass::Parabolic) return {Complex{p / (2.0 * c)}};
  const Complex tr = a + d;
  Complex s = std::sqrt(tr * tr - 4.0);
  if (std::abs(p - s) > std::abs(p + s)) s = -s;
  const Complex z1 = (p + s) / (2.0 * c);
  // Product of the roots is -b/c.
  const Complex z2 = -b / (c * z1);
  return {z1, z2};
}

BoundaryPoint apply(const UnimodularMatrix& m, const BoundaryPoint& z) {
  if (is_infinity(z)) {
    if (m.c() == Complex{0.0}) return Infinity{};
    return Complex{m.a() / m.c()};
  }
  const Complex w = std::get<Complex>(z);
  const Complex den = m.c() * w + m.d();
  if (den == Complex{0.0}) return Infinity{};
  return Complex{(m.a() * w + m.b()) / den};
}

double mg_of(Complex lambda) {
  if (lambda == Complex{0.0}) throw ZeroLambda();
  return std::abs(lambda - 1.0) + std::abs(1.0 / lambda - 1.0);
}

namespace {

// Eigenvector of m for eigenvalue mu: pick the better conditioned of the two
// null vectors read off the rows of (m - mu I).
std::array<Complex, 2> eigenvector(const UnimodularMatrix& m, Complex mu) {
  const std::array<Complex, 2> from_row1{m.b(), mu - m.a()};
  const std::array<Complex, 2> from_row2{mu - m.d(), m.c()};
  const double n1 = std::hypot(std::abs(from_row1[0]), std::abs(from_row1[1]));
  const double n2 = std::hypot(std::abs(from_row2[0]), std::abs(from_row2[1]));
  return n1 >= n2 ? from_row1 : from_row2;
}

}  // namespace

LoxodromicNormalization diagonalize_loxodromic(const UnimodularMatrix& m) {
  if (classify(m) != MoebiusClass::Loxodromic) throw NotLoxodromic();

  const Complex tr = trace(m);
  const Complex s = std::sqrt(tr * tr - 4.0);
  Complex mu = (tr + s) / 2.0;
  if (std::abs(mu) < 1.0) mu = (tr - s) / 2.0;
  if (!(std::abs(mu) > 1.0)) throw NotLoxodromic();

  // Lifts +-m have expanding eigenvalues +-mu; keep the one with smaller M_g.
  int sign = 1;
  if (mg_of(-mu) < mg_of(mu)) sign = -1;
  const Complex lambda = static_cast<double>(sign) * mu;
  const UnimodularMatrix lifted = sign > 0 ? m : -m;

  // Columns of conjugator^-1 are the eigenvectors u (lambda) and w (1/lambda).
  // w has unit length with first nonzero component real positive; u is scaled
  // so that det [u w] = 1.
  auto w = eigenvector(lifted, 1.0 / lambda);
  auto u = eigenvector(lifted, lambda);
  const double wn = std::hypot(std::abs(w[0]), std::abs(w[1]));
  const Complex lead = std::abs(w[0]) > kClassifyTolerance * wn ? w[0] : w[1];
  const Complex phase = std::conj(lead) / std::abs(lead);
  w = {w[0] * phase / wn, w[1] * phase / wn};
  const Complex det = u[0] * w[1] - w[0] * u[1];
  u = {u[0] / det, u[1] / det};

  // conjugator = [u w]^-1 = [[w1, -w0], [-u1, u0]].
  const UnimodularMatrix conj = trusted_unimodular(w[1], -w[0], -u[1], u[0]);
  return {lambda, conj, sign, mg_of(lambda)};
}

bool is_axis_preserving(const UnimodularMatrix& h, double tol) {
  return std::max(std::abs(h.b()), std::abs(h.c())) <= tol ||
         std::max(std::abs(h.a()), std::abs(h.d())) <= tol;
}

}  // namespace jgate

#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "jgate/mat2c.hpp"

namespace jgate {

enum class MoebiusClass { Identity, Parabolic, Elliptic, Loxodromic };

std::string_view to_string(MoebiusClass cls);

/// The point at infinity of the Riemann sphere.
struct Infinity {
  friend bool operator==(Infinity, Infinity) = default;
};

/// A point of the Riemann sphere: a finite complex number or infinity.
using BoundaryPoint = std::variant<Complex, Infinity>;

inline bool is_infinity(const BoundaryPoint& p) { return std::holds_alternative<Infinity>(p); }

/// Tolerances used by classify.
inline constexpr double kClassifyTolerance = 1e-9;

/// Data of a loxodromic element brought to diagonal form:
/// conjugator * (lift_sign * A) * conjugator^-1 = diag(lambda, 1/lambda).
struct LoxodromicNormalization {
  Complex lambda;
  UnimodularMatrix conjugator;
  int lift_sign = 1;
  double mg = 0.0;
};

/// Trace-squared trichotomy with t = tr^2(A):
///   Identity   A = +-I
///   Parabolic  t = 4
///   Elliptic   t real, 0 <= t < 4
///   Loxodromic otherwise
MoebiusClass classify(const UnimodularMatrix& m);

/// Fixed points of z -> (az + b)/(cz + d). One point for parabolic elements,
/// two otherwise. Throws IsIdentity for +-I.
std::vector<BoundaryPoint> fixed_points(const UnimodularMatrix& m);

/// Image of a boundary point under the Moebius action of m.
BoundaryPoint apply(const UnimodularMatrix& m, const BoundaryPoint& z);

/// Conjugates A (or -A, whichever gives the smaller M_g) to diag(lambda, 1/lambda)
/// with |lambda| > 1. Throws NotLoxodromic.
LoxodromicNormalization diagonalize_loxodromic(const UnimodularMatrix& m);

/// M_g = |lambda - 1| + |1/lambda - 1|. Throws ZeroLambda.
double mg_of(Complex lambda);

/// Whether h preserves the set {0, infinity}: either diagonal or antidiagonal.
bool is_axis_preserving(const UnimodularMatrix& h, double tol = 1e-9);

}  // namespace jgate

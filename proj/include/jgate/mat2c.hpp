#pragma once

#include <array>
#include <complex>

namespace jgate {

using Complex = std::complex<double>;

/// Default absolute tolerance on |det - 1| accepted by make_unimodular.
inline constexpr double kUnimodularTolerance = 1e-9;

/// A 2x2 complex matrix [[a, b], [c, d]] with determinant 1.
///
/// Instances are only created through make_unimodular (validated) or by the
/// group operations below, which preserve the determinant up to rounding.
class UnimodularMatrix {
 public:
  /// The identity matrix.
  UnimodularMatrix() = default;

  const Complex& a() const noexcept { return a_; }
  const Complex& b() const noexcept { return b_; }
  const Complex& c() const noexcept { return c_; }
  const Complex& d() const noexcept { return d_; }

  /// Row-major entries a, b, c, d.
  std::array<Complex, 4> entries() const { return {a_, b_, c_, d_}; }

  Complex det() const { return a_ * d_ - b_ * c_; }

  /// Largest entry modulus.
  double max_abs() const;

  UnimodularMatrix operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

  friend UnimodularMatrix make_unimodular(Complex, Complex, Complex, Complex, double);
  friend UnimodularMatrix diagonal(Complex);
  friend UnimodularMatrix mul(const UnimodularMatrix&, const UnimodularMatrix&);
  friend UnimodularMatrix inverse(const UnimodularMatrix&);
  friend UnimodularMatrix trusted_unimodular(Complex, Complex, Complex, Complex);

 private:
  UnimodularMatrix(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {}

  Complex a_{1.0};
  Complex b_{0.0};
  Complex c_{0.0};
  Complex d_{1.0};
};

/// Validating constructor. Throws NonFiniteEntry or NotUnimodular.
UnimodularMatrix make_unimodular(Complex a, Complex b, Complex c, Complex d,
                                 double tolerance = kUnimodularTolerance);

/// Builds a matrix whose determinant is 1 by construction (closed forms,
/// products). Only finiteness is checked; the determinant is not.
UnimodularMatrix trusted_unimodular(Complex a, Complex b, Complex c, Complex d);

/// diag(lambda, 1/lambda). Throws ZeroLambda for lambda = 0.
UnimodularMatrix diagonal(Complex lambda);

UnimodularMatrix identity();

UnimodularMatrix mul(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);

/// Adjugate (d, -b, -c, a); exact inverse for determinant 1.
UnimodularMatrix inverse(const UnimodularMatrix& m);

Complex trace(const UnimodularMatrix& m);

/// g h g^-1 h^-1.
UnimodularMatrix commutator(const UnimodularMatrix& g, const UnimodularMatrix& h);

/// g h g^-1.
UnimodularMatrix conjugate_by(const UnimodularMatrix& g, const UnimodularMatrix& h);

/// Largest entrywise modulus of (lhs - rhs).
double max_entry_diff(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);

/// True when m equals the identity or its negative within tol entrywise.
bool is_plus_minus_identity(const UnimodularMatrix& m, double tol = 1e-9);

}  // namespace jgate

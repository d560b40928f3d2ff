#include "jgate/mat2c.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jgate/errors.hpp"

namespace jgate {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string describe_det(double re, double im) {
  std::string s = "determinant is " + std::to_string(re);
  if (im != 0.0) s += (im < 0 ? " - " : " + ") + std::to_string(std::abs(im)) + "i";
  return s + ", expected 1";
}

}  // namespace

NotUnimodular::NotUnimodular(double det_re, double det_im)
    : Error(describe_det(det_re, det_im)), det_re_(det_re), det_im_(det_im) {}

MgOutOfRange::MgOutOfRange(double mg)
    : Error("M_g = " + std::to_string(mg) + " is outside (0, 1)"), mg_(mg) {}

double UnimodularMatrix::max_abs() const {
  return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

UnimodularMatrix make_unimodular(Complex a, Complex b, Complex c, Complex d, double tolerance) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) throw NonFiniteEntry();
  const Complex det = a * d - b * c;
  if (!finite(det) || std::abs(det - 1.0) > tolerance) throw NotUnimodular(det.real(), det.imag());
  return {a, b, c, d};
}

UnimodularMatrix trusted_unimodular(Complex a, Complex b, Complex c, Complex d) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) throw NonFiniteEntry();
  return {a, b, c, d};
}

UnimodularMatrix diagonal(Complex lambda) {
  if (lambda == Complex{0.0}) throw ZeroLambda();
  return trusted_unimodular(lambda, 0.0, 0.0, 1.0 / lambda);
}

UnimodularMatrix identity() { return {}; }

UnimodularMatrix mul(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

UnimodularMatrix inverse(const UnimodularMatrix& m) { return {m.d_, -m.b_, -m.c_, m.a_}; }

Complex trace(const UnimodularMatrix& m) { return m.a() + m.d(); }

UnimodularMatrix commutator(const UnimodularMatrix& g, const UnimodularMatrix& h) {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

UnimodularMatrix conjugate_by(const UnimodularMatrix& g, const UnimodularMatrix& h) {
  return mul(mul(g, h), inverse(g));
}

double max_entry_diff(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return std::max({std::abs(x.a() - y.a()), std::abs(x.b() - y.b()), std::abs(x.c() - y.c()),
                   std::abs(x.d() - y.d())});
}

bool is_plus_minus_identity(const UnimodularMatrix& m, double tol) {
  return max_entry_diff(m, identity()) <= tol || max_entry_diff(m, -identity()) <= tol;
}

}  // namespace jgate

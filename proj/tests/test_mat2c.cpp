#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "jgate/errors.hpp"
#include "jgate/mat2c.hpp"
#include "test_support.hpp"

namespace jgate {
namespace {

constexpr double kTight = 1e-12;

UnimodularMatrix M(Complex a, Complex b, Complex c, Complex d) { return make_unimodular(a, b, c, d); }

void expect_entries(const UnimodularMatrix& m, Complex a, Complex b, Complex c, Complex d,
                    double tol = kTight) {
  EXPECT_LE(std::abs(m.a() - a), tol);
  EXPECT_LE(std::abs(m.b() - b), tol);
  EXPECT_LE(std::abs(m.c() - c), tol);
  EXPECT_LE(std::abs(m.d() - d), tol);
}

TEST(MakeUnimodular, AcceptsIdentity) {
  const auto m = M(1, 0, 0, 1);
  EXPECT_EQ(m, identity());
}

TEST(MakeUnimodular, AcceptsDeterminantOne) {
  const auto m = M(1, 1, 1, 2);
  EXPECT_EQ(m.det(), Complex(1.0));
}

TEST(MakeUnimodular, RejectsDeterminantFour) {
  try {
    M(2, 0, 0, 2);
    FAIL() << "expected NotUnimodular";
  } catch (const NotUnimodular& e) {
    EXPECT_DOUBLE_EQ(e.det_re(), 4.0);
    EXPECT_DOUBLE_EQ(e.det_im(), 0.0);
  }
}

TEST(MakeUnimodular, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(M({nan, 0}, 0, 0, 1), NonFiniteEntry);
  EXPECT_THROW(M(1, {0, inf}, 0, 1), NonFiniteEntry);
}

TEST(MakeUnimodular, ToleranceIsAbsoluteOnDeterminant) {
  EXPECT_NO_THROW(M(1.0 + 5e-10, 0, 0, 1));
  EXPECT_THROW(M(1.0 + 5e-9, 0, 0, 1), NotUnimodular);
  EXPECT_NO_THROW(make_unimodular(1.0 + 5e-9, 0, 0, 1, 1e-8));
}

TEST(Mul, IdentityIsNeutral) {
  const auto a = M(1, 1, 1, 2);
  EXPECT_EQ(mul(a, identity()), a);
  EXPECT_EQ(mul(identity(), a), a);
}

TEST(Mul, DiagonalClosure) {
  const Complex l{1.3, 0.4}, u{-0.7, 2.0};
  const auto p = mul(diagonal(l), diagonal(u));
  expect_entries(p, l * u, 0, 0, 1.0 / (l * u));
}

TEST(Mul, HandComputedProduct) {
  expect_entries(mul(M(1, 1, 0, 1), M(0, -1, 1, 0)), 1, -1, 1, 0);
}

TEST(Inverse, Adjugate) {
  EXPECT_EQ(inverse(identity()), identity());
  expect_entries(inverse(M(1, 1, 1, 2)), 2, -1, -1, 1);
  expect_entries(inverse(M(0, -1, 1, 0)), 0, 1, -1, 0);
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(identity()), Complex(2.0));
  EXPECT_NEAR(trace(diagonal(1.2)).real(), 2.033333333333333, kTight);
  EXPECT_EQ(trace(M(0, -1, 1, 0)), Complex(0.0));
}

TEST(Commutator, Examples) {
  const auto a = M(1, 1, 1, 2);
  expect_entries(commutator(a, a), 1, 0, 0, 1);
  expect_entries(commutator(diagonal({1.2, 0.5}), diagonal({-0.3, 2.0})), 1, 0, 0, 1);
  expect_entries(commutator(M(1, 1, 0, 1), M(0, -1, 1, 0)), 2, 1, 1, 1);
}

TEST(Diagonal, RejectsZero) { EXPECT_THROW(diagonal(0.0), ZeroLambda); }

TEST(Mat2cProperties, DeterminantPreserved) {
  testing::Sampler s(20261018);
  for (int i = 0; i < 10000; ++i) {
    const auto a = s.unimodular();
    const auto b = s.unimodular();
    ASSERT_LE(std::abs(mul(a, b).det() - 1.0), 1e-9);
    ASSERT_LE(std::abs(inverse(a).det() - 1.0), 1e-9);
    ASSERT_LE(std::abs(commutator(a, b).det() - 1.0), 1e-8);
  }
}

TEST(Mat2cProperties, InverseAndTraceIdentities) {
  testing::Sampler s(7);
  for (int i = 0; i < 10000; ++i) {
    const auto a = s.unimodular();
    const auto b = s.unimodular();
    ASSERT_LE(max_entry_diff(mul(a, inverse(a)), identity()) / std::max(1.0, a.max_abs()),
              1e-10);
    const Complex t1 = trace(mul(a, b)), t2 = trace(mul(b, a));
    ASSERT_LE(std::abs(t1 - t2), 1e-10 * std::max(1.0, std::abs(t1)));
    const Complex c1 = trace(commutator(a, b)), c2 = trace(commutator(b, a));
    ASSERT_LE(std::abs(c1 - c2), 1e-9 * std::max(1.0, std::abs(c1)));
  }
}

}  // namespace
}  // namespace jgate

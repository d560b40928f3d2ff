#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jgate/mat2c.hpp"
#include "jgate/moebius.hpp"

namespace jgate {

enum class GateKind { ClassicalJorgensen, WJC, CorollaryBC, CorollaryOnePlusBC, CorollarySum };
enum class Comparison { LessEq, Less, GreaterEq };

std::string_view to_string(GateKind kind);
std::string_view to_string(Comparison cmp);

/// Slack allowed when a gate compares lhs against its bound with <=. Inputs on
/// the bound (up to rounding) fire: equality is excluded for discrete
/// non-elementary groups just like the strict side.
inline constexpr double kEqualitySlack = 1e-12;

/// |lhs - 1| within this counts as equality in the classical inequality.
inline constexpr double kJorgensenEqualityTolerance = 1e-9;

/// Equality case of the classical inequality. Discrete non-elementary groups
/// reach it only when g is elliptic or parabolic.
struct JorgensenEquality {
  MoebiusClass g_class;
  bool consistent;  // g elliptic or parabolic
};

struct GateReport {
  GateKind gate;
  double lhs = 0.0;
  double bound = 0.0;
  bool fired = false;
  Comparison comparison = Comparison::LessEq;
  std::optional<JorgensenEquality> equality;  // classical gate only
};

enum class VerdictTag { NotApplicable, Inconclusive, ElementaryOrNonDiscrete, Elementary, NonDiscrete };
enum class NotApplicableReason { MgNotLessThanOne, NotLoxodromic, LambdaNotExpanding };

std::string_view to_string(VerdictTag tag);
std::string_view to_string(NotApplicableReason reason);

struct Verdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  std::optional<NotApplicableReason> reason;
  std::vector<GateReport> fired_gates;
};

struct ChainInequality {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Slack used by ProofChainReport when judging the chain inequalities.
inline constexpr double kChainSlack = 1e-10;

/// Every quantity of the strictness argument evaluated for one (lambda, h).
struct ProofChainReport {
  bool hypothesis_holds = false;  // |abcd|^(1/2) <= (1 - M_g)/M_g^2
  double abcd_sqrt = 0.0;
  double bound = 0.0;
  double mg = 0.0;
  UnimodularMatrix h1;
  ChainInequality ineq11;  // |a1 d1|^(1/2) <= 1/M_g
  ChainInequality ineq12;  // |b1 c1|^(1/2) <= (1 - M_g)/M_g
  ChainInequality ineq3;   // M_g (1 + |b1 c1|^(1/2)) < 1
  double eq4_residual = 0.0;              // |(lambda - 1/lambda)^2 (1 + |b1 c1|) - 1|
  double trace_identity_residual = 0.0;   // |tr^2 g - 4 - (lambda - 1/lambda)^2|
  double b1c1_identity_residual = 0.0;    // |b1 c1 + (lambda - 1/lambda)^2 bc (1 + bc)|
  double commutator_identity_residual = 0.0;  // |tr[g, h1] - 2 + (lambda - 1/lambda)^2 b1 c1|
  double h1_abcd_sqrt = 0.0;              // |a1 b1 c1 d1|^(1/2)
  /// Hypothesis holds but a chain inequality failed: an arithmetic bug.
  bool chain_violation = false;
};

struct IterationStep {
  int n = 0;
  UnimodularMatrix h;
  double off_diag = 0.0;     // |b_n| + |c_n|
  double comm_defect = 0.0;  // max entry of |h_n g - g h_n|
  double det_defect = 0.0;   // |det h_n - 1|
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  bool overflowed = false;
};

inline constexpr int kMaxIterations = 10000;
inline constexpr double kOverflowMagnitude = 1e150;

/// |tr^2 g - 4| + |tr[g, h] - 2|, fired when < 1. Equality within 1e-9 does
/// not fire and carries a Jorgensen-Kiikka cross-check against classify(g).
GateReport classical_jorgensen(const UnimodularMatrix& g, const UnimodularMatrix& h);

/// (1 - mg)/mg^2. Throws MgOutOfRange unless 0 < mg < 1.
double wjc_bound(double mg);

/// The generalized gate's report alone. Throws MgOutOfRange when M_g >= 1.
GateReport wjc_report(Complex lambda, const UnimodularMatrix& h);

/// Generalized gate for g = diag(lambda, 1/lambda): fires when
/// |abcd|^(1/2) <= wjc_bound(M_g), equality included.
/// Throws LambdaNotExpanding for |lambda| <= 1.
Verdict wjc_gate(Complex lambda, const UnimodularMatrix& h);

/// The three consequences in terms of bc alone:
///   |bc|^(1/2)        <= (1 - M_g)/M_g
///   |1 + bc|^(1/2)    <= (1 - M_g)/M_g
///   |1 + bc| + |bc|   <= 2(1 - M_g)/M_g^2
std::vector<GateReport> corollary_gates(Complex lambda, const UnimodularMatrix& h);

/// h diag(lambda, 1/lambda) h^-1 by its closed form.
UnimodularMatrix conjugate_step(Complex lambda, const UnimodularMatrix& h);

ProofChainReport proof_chain_report(Complex lambda, const UnimodularMatrix& h);

/// h_0 = h, h_{k+1} = conjugate_step(lambda, h_k) for k < steps. Stops early
/// and sets overflowed once an entry would exceed 1e150.
IterationTrace iterate_conjugation(Complex lambda, const UnimodularMatrix& h, int steps);

/// Splits a fired family of gates into Elementary / NonDiscrete using the
/// normal-form test on h; Inconclusive when nothing fired.
Verdict refine_verdict(std::vector<GateReport> reports, const UnimodularMatrix& h);

/// Classical gate alone for an arbitrary pair. A loxodromic g is normalized so
/// the verdict can be refined; otherwise a firing gate yields
/// ElementaryOrNonDiscrete.
Verdict classical_verdict(const UnimodularMatrix& g, const UnimodularMatrix& h);

}  // namespace jgate

#include "jgate/gates.hpp"

#include <algorithm>
#include <cmath>

#include "jgate/errors.hpp"

namespace jgate {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::ClassicalJorgensen: return "ClassicalJorgensen";
    case GateKind::WJC: return "WJC";
    case GateKind::CorollaryBC: return "CorollaryBC";
    case GateKind::CorollaryOnePlusBC: return "CorollaryOnePlusBC";
    case GateKind::CorollarySum: return "CorollarySum";
  }
  return "?";
}

std::string_view to_string(Comparison cmp) {
  switch (cmp) {
    case Comparison::LessEq: return "<=";
    case Comparison::Less: return "<";
    case Comparison::GreaterEq: return ">=";
  }
  return "?";
}

std::string_view to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::NotApplicable: return "NotApplicable";
    case VerdictTag::Inconclusive: return "Inconclusive";
    case VerdictTag::ElementaryOrNonDiscrete: return "ElementaryOrNonDiscrete";
    case VerdictTag::Elementary: return "Elementary";
    case VerdictTag::NonDiscrete: return "NonDiscrete";
  }
  return "?";
}

std::string_view to_string(NotApplicableReason reason) {
  switch (reason) {
    case NotApplicableReason::MgNotLessThanOne: return "MgNotLessThanOne";
    case NotApplicableReason::NotLoxodromic: return "NotLoxodromic";
    case NotApplicableReason::LambdaNotExpanding: return "LambdaNotExpanding";
  }
  return "?";
}

namespace {

void require_expanding(Complex lambda) {
  if (!(std::abs(lambda) > 1.0)) throw LambdaNotExpanding();
}

GateReport at_most(GateKind kind, double lhs, double bound) {
  return {kind, lhs, bound, lhs <= bound + kEqualitySlack, Comparison::LessEq, std::nullopt};
}

struct Entries {
  Complex a, b, c, d;
};

Entries conjugate_entries(Complex lambda, const UnimodularMatrix& h) {
  const Complex inv = 1.0 / lambda;
  const Complex gap = lambda - inv;
  // ad is taken as 1 + bc: with the literal product, det h1 = (det h)^2 and
  // rounding in the determinant doubles at every iteration.
  const Complex bc = h.b() * h.c();
  const Complex ad = 1.0 + bc;
  return {ad * lambda - bc * inv, -gap * h.a() * h.b(), gap * h.c() * h.d(), ad * inv - bc * lambda};
}

}  // namespace

GateReport classical_jorgensen(const UnimodularMatrix& g, const UnimodularMatrix& h) {
  const Complex tg = trace(g);
  const double lhs = std::abs(tg * tg - 4.0) + std::abs(trace(commutator(g, h)) - 2.0);
  GateReport report{GateKind::ClassicalJorgensen, lhs, 1.0, false, Comparison::Less, std::nullopt};
  if (std::abs(lhs - 1.0) <= kJorgensenEqualityTolerance) {
    const MoebiusClass cls = classify(g);
    report.equality = JorgensenEquality{
        cls, cls == MoebiusClass::Elliptic || cls == MoebiusClass::Parabolic};
  } else {
    report.fired = lhs < 1.0;
  }
  return report;
}

double wjc_bound(double mg) {
  if (!(mg > 0.0 && mg < 1.0)) throw MgOutOfRange(mg);
  return (1.0 - mg) / (mg * mg);
}

Verdict refine_verdict(std::vector<GateReport> reports, const UnimodularMatrix& h) {
  Verdict verdict;
  for (auto& r : reports)
    if (r.fired) verdict.fired_gates.push_back(r);
  if (verdict.fired_gates.empty()) {
    verdict.tag = VerdictTag::Inconclusive;
  } else {
    verdict.tag = is_axis_preserving(h) ? VerdictTag::Elementary : VerdictTag::NonDiscrete;
  }
  return verdict;
}

GateReport wjc_report(Complex lambda, const UnimodularMatrix& h) {
  require_expanding(lambda);
  const double bound = wjc_bound(mg_of(lambda));
  return at_most(GateKind::WJC, std::sqrt(std::abs(h.a() * h.b() * h.c() * h.d())), bound);
}

Verdict wjc_gate(Complex lambda, const UnimodularMatrix& h) {
  require_expanding(lambda);
  if (!(mg_of(lambda) < 1.0)) {
    return {VerdictTag::NotApplicable, NotApplicableReason::MgNotLessThanOne, {}};
  }
  return refine_verdict({wjc_report(lambda, h)}, h);
}

std::vector<GateReport> corollary_gates(Complex lambda, const UnimodularMatrix& h) {
  require_expanding(lambda);
  const double mg = mg_of(lambda);
  const double bound = wjc_bound(mg);
  const double k = (1.0 - mg) / mg;
  const Complex bc = h.b() * h.c();
  return {
      at_most(GateKind::CorollaryBC, std::sqrt(std::abs(bc)), k),
      at_most(GateKind::CorollaryOnePlusBC, std::sqrt(std::abs(1.0 + bc)), k),
      at_most(GateKind::CorollarySum, std::abs(1.0 + bc) + std::abs(bc), 2.0 * bound),
  };
}

UnimodularMatrix conjugate_step(Complex lambda, const UnimodularMatrix& h) {
  const auto e = conjugate_entries(lambda, h);
  return trusted_unimodular(e.a, e.b, e.c, e.d);
}

ProofChainReport proof_chain_report(Complex lambda, const UnimodularMatrix& h) {
  require_expanding(lambda);
  ProofChainReport r;
  r.mg = mg_of(lambda);
  r.bound = wjc_bound(r.mg);
  const Complex bc = h.b() * h.c();
  r.abcd_sqrt = std::sqrt(std::abs(h.a() * h.d() * bc));
  r.hypothesis_holds = r.abcd_sqrt <= r.bound + kEqualitySlack;

  r.h1 = conjugate_step(lambda, h);
  const Complex a1d1 = r.h1.a() * r.h1.d();
  const Complex b1c1 = r.h1.b() * r.h1.c();
  const double b1c1_sqrt = std::sqrt(std::abs(b1c1));

  auto chain = [](double lhs, double rhs) { return ChainInequality{lhs, rhs, lhs <= rhs + kChainSlack}; };
  r.ineq11 = chain(std::sqrt(std::abs(a1d1)), 1.0 / r.mg);
  r.ineq12 = chain(b1c1_sqrt, (1.0 - r.mg) / r.mg);
  r.ineq3 = chain(r.mg * (1.0 + b1c1_sqrt), 1.0);

  const Complex gap = lambda - 1.0 / lambda;
  const Complex gap2 = gap * gap;
  const UnimodularMatrix g = diagonal(lambda);
  const Complex tg = trace(g);
  r.eq4_residual = std::abs(gap2 * (1.0 + std::abs(b1c1)) - 1.0);
  r.trace_identity_residual = std::abs(tg * tg - 4.0 - gap2);
  r.b1c1_identity_residual = std::abs(b1c1 + gap2 * bc * (1.0 + bc));
  r.commutator_identity_residual = std::abs(trace(commutator(g, r.h1)) - 2.0 + gap2 * b1c1);
  r.h1_abcd_sqrt = std::sqrt(std::abs(a1d1 * b1c1));
  r.chain_violation =
      r.hypothesis_holds && !(r.ineq11.holds && r.ineq12.holds && r.ineq3.holds);
  return r;
}

IterationTrace iterate_conjugation(Complex lambda, const UnimodularMatrix& h, int steps) {
  require_expanding(lambda);
  if (steps < 0 || steps > kMaxIterations) {
    throw InvalidArgument("iteration count must lie in [0, " + std::to_string(kMaxIterations) + "]");
  }
  const UnimodularMatrix g = diagonal(lambda);
  auto record = [&](int n, const UnimodularMatrix& m) {
    return IterationStep{n, m, std::abs(m.b()) + std::abs(m.c()),
                         max_entry_diff(mul(m, g), mul(g, m)), std::abs(m.det() - 1.0)};
  };

  IterationTrace trace_out;
  trace_out.steps.reserve(static_cast<std::size_t>(steps) + 1);
  trace_out.steps.push_back(record(0, h));
  UnimodularMatrix current = h;
  for (int n = 1; n <= steps; ++n) {
    const auto e = conjugate_entries(lambda, current);
    const double biggest = std::max({std::abs(e.a), std::abs(e.b), std::abs(e.c), std::abs(e.d)});
    if (!(biggest <= kOverflowMagnitude)) {
      trace_out.overflowed = true;
      break;
    }
    current = trusted_unimodular(e.a, e.b, e.c, e.d);
    trace_out.steps.push_back(record(n, current));
  }
  return trace_out;
}

Verdict classical_verdict(const UnimodularMatrix& g, const UnimodularMatrix& h) {
  const GateReport report = classical_jorgensen(g, h);
  if (!report.fired) return {VerdictTag::Inconclusive, std::nullopt, {}};
  if (classify(g) != MoebiusClass::Loxodromic) {
    return {VerdictTag::ElementaryOrNonDiscrete, std::nullopt, {report}};
  }
  const auto norm = diagonalize_loxodromic(g);
  return refine_verdict({report}, conjugate_by(norm.conjugator, h));
}

}  // namespace jgate

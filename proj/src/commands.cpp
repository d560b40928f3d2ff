#include "jgate/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "jgate/moebius.hpp"

namespace jgate {

int exit_code_for(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Inconclusive: return exit_code::kInconclusive;
    case VerdictTag::NotApplicable: return exit_code::kNotApplicable;
    case VerdictTag::Elementary: return exit_code::kElementary;
    case VerdictTag::NonDiscrete:
    case VerdictTag::ElementaryOrNonDiscrete: return exit_code::kNonDiscrete;
  }
  return exit_code::kInvalidInput;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

Json gate_to_json(const GateReport& r) {
  Json j = Json::object();
  j["gate"] = to_string(r.gate);
  j["lhs"] = r.lhs;
  j["comparison"] = to_string(r.comparison);
  j["bound"] = r.bound;
  j["fired"] = r.fired;
  if (r.equality) {
    j["equality"] = Json{{"gClass", to_string(r.equality->g_class)},
                         {"jorgensenKiikkaConsistent", r.equality->consistent}};
  }
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  j["tag"] = to_string(v.tag);
  if (v.reason) j["reason"] = to_string(*v.reason);
  Json fired = Json::array();
  for (const auto& r : v.fired_gates) fired.push_back(to_string(r.gate));
  j["firedGates"] = fired;
  return j;
}

Json chain_to_json(const ChainInequality& c, std::string_view cmp) {
  return Json{{"lhs", c.lhs}, {"comparison", cmp}, {"rhs", c.rhs}, {"holds", c.holds}};
}

Json proof_chain_to_json(const ProofChainReport& r) {
  Json j = Json::object();
  j["hypothesisHolds"] = r.hypothesis_holds;
  j["abcdSqrt"] = r.abcd_sqrt;
  j["bound"] = r.bound;
  j["h1"] = matrix_to_json(r.h1);
  j["ineq11"] = chain_to_json(r.ineq11, "<=");
  j["ineq12"] = chain_to_json(r.ineq12, "<=");
  j["ineq3"] = chain_to_json(r.ineq3, "<");
  j["eq4Residual"] = r.eq4_residual;
  j["traceIdentityResidual"] = r.trace_identity_residual;
  j["b1c1IdentityResidual"] = r.b1c1_identity_residual;
  j["commutatorIdentityResidual"] = r.commutator_identity_residual;
  j["h1AbcdSqrt"] = r.h1_abcd_sqrt;
  j["chainViolation"] = r.chain_violation;
  return j;
}

// g reduced to diag(lambda, 1/lambda) together with h in the same coordinates.
struct NormalForm {
  Complex lambda;
  UnimodularMatrix g;  // as given (diag(lambda, 1/lambda) for the lambda form)
  UnimodularMatrix h;  // conjugated into the normal-form coordinates
  UnimodularMatrix conjugator;
  int lift_sign = 1;
};

struct Resolved {
  Json g_info = Json::object();
  std::optional<NormalForm> normal;
  std::optional<NotApplicableReason> failure;
};

Resolved resolve(const InputDocument& doc) {
  Resolved out;
  if (const auto* lf = std::get_if<LambdaForm>(&doc.g)) {
    out.g_info["input"] = "lambda";
    out.g_info["lambda"] = complex_to_json(lf->lambda);
    if (!(std::abs(lf->lambda) > 1.0)) {
      out.failure = NotApplicableReason::LambdaNotExpanding;
      return out;
    }
    const UnimodularMatrix g = diagonal(lf->lambda);
    out.g_info["class"] = to_string(classify(g));
    out.normal = NormalForm{lf->lambda, g, doc.h, identity(), 1};
    return out;
  }
  const auto& g = std::get<UnimodularMatrix>(doc.g);
  out.g_info["input"] = "matrix";
  out.g_info["class"] = to_string(classify(g));
  if (classify(g) != MoebiusClass::Loxodromic) {
    out.failure = NotApplicableReason::NotLoxodromic;
    return out;
  }
  const auto norm = diagonalize_loxodromic(g);
  out.g_info["lambda"] = complex_to_json(norm.lambda);
  out.g_info["liftSign"] = norm.lift_sign;
  out.g_info["conjugator"] = matrix_to_json(norm.conjugator);
  out.normal = NormalForm{norm.lambda, g, conjugate_by(norm.conjugator, doc.h), norm.conjugator,
                          norm.lift_sign};
  return out;
}

}  // namespace

CommandResult run_gate_command(const InputDocument& doc) {
  Json report = Json::object();
  Resolved res = resolve(doc);
  Json h_info = Json::object();
  h_info["class"] = to_string(classify(doc.h));

  if (!res.normal) {
    report["g"] = res.g_info;
    report["h"] = h_info;
    report["verdict"] = verdict_to_json({VerdictTag::NotApplicable, res.failure, {}});
    return {report, exit_code::kNotApplicable};
  }

  const NormalForm& nf = *res.normal;
  const double mg = mg_of(nf.lambda);
  res.g_info["mg"] = mg;
  h_info["normalized"] = matrix_to_json(nf.h);
  h_info["axisPreserving"] = is_axis_preserving(nf.h);
  report["g"] = res.g_info;
  report["h"] = h_info;

  std::vector<GateReport> gates{classical_jorgensen(nf.g, doc.h)};
  Verdict verdict;
  Json chain = nullptr;
  if (mg < 1.0) {
    report["wjcBound"] = wjc_bound(mg);
    gates.push_back(wjc_report(nf.lambda, nf.h));
    for (const auto& r : corollary_gates(nf.lambda, nf.h)) gates.push_back(r);
    verdict = refine_verdict(gates, nf.h);
    chain = proof_chain_to_json(proof_chain_report(nf.lambda, nf.h));
  } else {
    report["wjcBound"] = nullptr;
    verdict = refine_verdict(gates, nf.h);
    if (verdict.tag == VerdictTag::Inconclusive) {
      verdict = {VerdictTag::NotApplicable, NotApplicableReason::MgNotLessThanOne, {}};
    }
  }

  Json gate_list = Json::array();
  for (const auto& r : gates) gate_list.push_back(gate_to_json(r));
  report["gates"] = gate_list;
  report["verdict"] = verdict_to_json(verdict);
  report["proofChain"] = chain;
  return {report, exit_code_for(verdict.tag)};
}

CommandResult run_classify_command(const UnimodularMatrix& m) {
  Json report = Json::object();
  const MoebiusClass cls = classify(m);
  const Complex tr = trace(m);
  report["class"] = to_string(cls);
  report["trace"] = complex_to_json(tr);
  report["traceSquared"] = complex_to_json(tr * tr);
  if (cls == MoebiusClass::Identity) {
    report["fixedPoints"] = "all";
  } else {
    Json pts = Json::array();
    for (const auto& p : fixed_points(m)) {
      pts.push_back(is_infinity(p) ? Json("infinity") : complex_to_json(std::get<Complex>(p)));
    }
    report["fixedPoints"] = pts;
  }
  if (cls == MoebiusClass::Loxodromic) {
    const auto norm = diagonalize_loxodromic(m);
    report["lambda"] = complex_to_json(norm.lambda);
    report["mg"] = norm.mg;
    report["liftSign"] = norm.lift_sign;
    report["conjugator"] = matrix_to_json(norm.conjugator);
  }
  return {report, 0};
}

CommandResult run_iterate_command(const InputDocument& doc, int steps) {
  Resolved res = resolve(doc);
  Json report = Json::object();
  report["g"] = res.g_info;
  if (!res.normal) {
    report["verdict"] = verdict_to_json({VerdictTag::NotApplicable, res.failure, {}});
    return {report, exit_code::kNotApplicable};
  }
  const IterationTrace tr = iterate_conjugation(res.normal->lambda, res.normal->h, steps);
  report["overflowed"] = tr.overflowed;
  Json rows = Json::array();
  for (const auto& s : tr.steps) {
    rows.push_back(Json{{"n", s.n},
                        {"h", matrix_to_json(s.h)},
                        {"offDiag", s.off_diag},
                        {"commDefect", s.comm_defect},
                        {"detDefect", s.det_defect}});
  }
  report["steps"] = rows;
  return {report, 0};
}

namespace {

std::string fmt_complex(const Json& z) {
  const double re = z[0].get<double>();
  const double im = z[1].get<double>();
  std::ostringstream os;
  os.precision(10);
  os << re;
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

std::string fmt_matrix(const Json& m) {
  return "[[" + fmt_complex(m[0]) + ", " + fmt_complex(m[1]) + "], [" + fmt_complex(m[2]) + ", " +
         fmt_complex(m[3]) + "]]";
}

std::string fmt_real(const Json& x) {
  if (x.is_null()) return "n/a";
  std::ostringstream os;
  os.precision(10);
  os << x.get<double>();
  return os.str();
}

}  // namespace

std::string format_gate_text(const Json& report) {
  std::ostringstream os;
  const Json& g = report["g"];
  os << "g: " << g.value("class", std::string("?")) << " (" << g["input"].get<std::string>()
     << " form)\n";
  if (g.contains("lambda")) os << "  lambda    = " << fmt_complex(g["lambda"]) << "\n";
  if (g.contains("liftSign")) os << "  lift sign = " << g["liftSign"].get<int>() << "\n";
  if (g.contains("mg")) os << "  M_g       = " << fmt_real(g["mg"]) << "\n";
  const Json& h = report["h"];
  os << "h: " << h["class"].get<std::string>() << "\n";
  if (h.contains("normalized")) {
    os << "  normal-form h = " << fmt_matrix(h["normalized"]) << "\n";
    os << "  axis preserving = " << (h["axisPreserving"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (report.contains("wjcBound")) os << "WJC bound (1 - M_g)/M_g^2 = " << fmt_real(report["wjcBound"]) << "\n";
  if (report.contains("gates")) {
    os << "gates:\n";
    for (const auto& r : report["gates"]) {
      os << "  " << r["gate"].get<std::string>() << ": " << fmt_real(r["lhs"]) << " "
         << r["comparison"].get<std::string>() << " " << fmt_real(r["bound"]) << " -> "
         << (r["fired"].get<bool>() ? "FIRED" : "not fired");
      if (r.contains("equality")) {
        os << " (equality; g " << r["equality"]["gClass"].get<std::string>()
           << (r["equality"]["jorgensenKiikkaConsistent"].get<bool>() ? ", consistent"
                                                                        : ", INCONSISTENT with discrete non-elementary")
           << ")";
      }
      os << "\n";
    }
  }
  if (report.contains("proofChain") && !report["proofChain"].is_null()) {
    const Json& c = report["proofChain"];
    os << "proof chain (hypothesis " << (c["hypothesisHolds"].get<bool>() ? "holds" : "fails") << "):\n";
    os << "  h1 = " << fmt_matrix(c["h1"]) << "\n";
    for (const char* key : {"ineq11", "ineq12", "ineq3"}) {
      const Json& q = c[key];
      os << "  " << key << ": " << fmt_real(q["lhs"]) << " " << q["comparison"].get<std::string>() << " "
         << fmt_real(q["rhs"]) << (q["holds"].get<bool>() ? "  ok" : "  FAILS") << "\n";
    }
    os << "  eq4 residual = " << fmt_real(c["eq4Residual"])
       << ", trace identity residual = " << fmt_real(c["traceIdentityResidual"]) << "\n";
    if (c["chainViolation"].get<bool>()) os << "  CHAIN VIOLATION: hypothesis holds but an inequality failed\n";
  }
  const Json& v = report["verdict"];
  os << "verdict: " << v["tag"].get<std::string>();
  if (v.contains("reason")) os << " (" << v["reason"].get<std::string>() << ")";
  os << "\n";
  return os.str();
}

std::string format_classify_text(const Json& report) {
  std::ostringstream os;
  os << "class: " << report["class"].get<std::string>() << "\n";
  os << "trace: " << fmt_complex(report["trace"]) << "\n";
  os << "trace^2: " << fmt_complex(report["traceSquared"]) << "\n";
  os << "fixed points:";
  if (report["fixedPoints"].is_string()) {
    os << " all";
  } else {
    for (const auto& p : report["fixedPoints"]) os << " " << (p.is_string() ? "inf" : fmt_complex(p));
  }
  os << "\n";
  if (report.contains("lambda")) {
    os << "lambda: " << fmt_complex(report["lambda"]) << "\n";
    os << "M_g: " << fmt_real(report["mg"]) << "\n";
    os << "lift sign: " << report["liftSign"].get<int>() << "\n";
  }
  return os.str();
}

std::string format_iterate_csv(const Json& report) {
  std::ostringstream os;
  os << "n,a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im,offDiag,commDefect\n";
  for (const auto& s : report["steps"]) {
    os << s["n"].get<int>();
    for (const auto& z : s["h"]) {
      os << ',' << format_double(z[0].get<double>()) << ',' << format_double(z[1].get<double>());
    }
    os << ',' << format_double(s["offDiag"].get<double>()) << ','
       << format_double(s["commDefect"].get<double>()) << '\n';
  }
  return os.str();
}

}  // namespace jgate

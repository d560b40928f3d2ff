#include "jgate/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

#include "jgate/commands.hpp"
#include "jgate/gates.hpp"
#include "jgate/moebius.hpp"

namespace jgate {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr int kMaxLambdaAttempts = 1'000'000;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t row_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed + index * kGolden).next();
}

void validate(const SampleConfig& cfg) {
  if (!(cfg.lambda_min > 1.0)) throw InvalidRange("lambda-min must be greater than 1");
  if (!(cfg.lambda_max >= cfg.lambda_min) || !std::isfinite(cfg.lambda_max)) {
    throw InvalidRange("lambda-max must be finite and at least lambda-min");
  }
  if (!(cfg.lambda_min < std::numbers::phi)) {
    throw InvalidRange("lambda-min must be below the golden ratio, otherwise M_g >= 1 everywhere");
  }
  if (!(cfg.h_scale > 0.0) || !std::isfinite(cfg.h_scale)) throw InvalidRange("h-scale must be positive");
}

SampleRow sample_row(const SampleConfig& cfg, std::uint64_t index) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  Xoshiro256 rng(row_seed(cfg.seed, index));

  SampleRow row;
  row.index = index;
  int attempts = 0;
  for (;;) {
    const double r = cfg.lambda_min + (cfg.lambda_max - cfg.lambda_min) * rng.uniform();
    const double theta = kTwoPi * rng.uniform();
    row.lambda = std::polar(r, theta);
    row.mg = mg_of(row.lambda);
    if (row.mg < 1.0) break;
    if (++attempts >= kMaxLambdaAttempts) throw InvalidRange("no lambda with M_g < 1 found in range");
  }

  const Complex b = std::polar(cfg.h_scale * (1.0 - rng.uniform()), kTwoPi * rng.uniform());
  const Complex c = std::polar(cfg.h_scale * (1.0 - rng.uniform()), kTwoPi * rng.uniform());
  const double phi = kTwoPi * rng.uniform();
  const Complex ad = 1.0 + b * c;
  const Complex a = std::polar(std::sqrt(std::abs(ad)), phi);
  const Complex d = a == Complex{0.0} ? Complex{0.0} : ad / a;
  row.h = trusted_unimodular(a, b, c, d);

  const GateReport wjc = wjc_report(row.lambda, row.h);
  const auto cor = corollary_gates(row.lambda, row.h);
  const GateReport classical = classical_jorgensen(diagonal(row.lambda), row.h);
  row.bound = wjc.bound;
  row.abcd_sqrt = wjc.lhs;
  row.bc_sqrt = cor[0].lhs;
  row.one_plus_bc_sqrt = cor[1].lhs;
  row.sum_bc_one_plus_bc = cor[2].lhs;
  row.jorgensen_lhs = classical.lhs;
  row.wjc_fired = wjc.fired;
  row.cor1_fired = cor[0].fired;
  row.cor2_fired = cor[1].fired;
  row.cor3_fired = cor[2].fired;
  row.classical_fired = classical.fired;
  row.axis_preserving = is_axis_preserving(row.h);
  return row;
}

std::vector<SampleRow> sample_rows(const SampleConfig& cfg) {
  validate(cfg);
  std::vector<SampleRow> rows(cfg.count);
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(cfg.count, 1)));
  if (workers <= 1 || cfg.count < 256) {
    for (std::uint64_t i = 0; i < cfg.count; ++i) rows[i] = sample_row(cfg, i);
    return rows;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < cfg.count; i += workers) rows[i] = sample_row(cfg, i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string csv_header(bool emit_h) {
  std::string s =
      "seedIndex,lambda_re,lambda_im,mg,bound,abcd_sqrt,bc_sqrt,onePlusBc_sqrt,sumBcOnePlusBc,"
      "jorgensenLhs,wjcFired,cor1Fired,cor2Fired,cor3Fired,classicalFired,axisPreserving";
  if (emit_h) s += ",a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im";
  return s + "\n";
}

std::string csv_line(const SampleRow& row, bool emit_h) {
  std::string s = std::to_string(row.index);
  auto num = [&s](double x) { s += ','; s += format_double(x); };
  auto flag = [&s](bool x) { s += x ? ",1" : ",0"; };
  num(row.lambda.real());
  num(row.lambda.imag());
  num(row.mg);
  num(row.bound);
  num(row.abcd_sqrt);
  num(row.bc_sqrt);
  num(row.one_plus_bc_sqrt);
  num(row.sum_bc_one_plus_bc);
  num(row.jorgensen_lhs);
  flag(row.wjc_fired);
  flag(row.cor1_fired);
  flag(row.cor2_fired);
  flag(row.cor3_fired);
  flag(row.classical_fired);
  flag(row.axis_preserving);
  if (emit_h) {
    for (const Complex& z : row.h.entries()) {
      num(z.real());
      num(z.imag());
    }
  }
  return s + "\n";
}

void write_sample_csv(const SampleConfig& cfg, std::ostream& out) {
  const auto rows = sample_rows(cfg);
  out << csv_header(cfg.emit_h);
  for (const auto& row : rows) out << csv_line(row, cfg.emit_h);
}

void run_sample_command(const SampleConfig& cfg) {
  validate(cfg);
  std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + cfg.output.string() + " for writing");
  write_sample_csv(cfg, out);
  out.flush();
  if (!out) throw IoError("failed writing " + cfg.output.string());
}

}  // namespace jgate

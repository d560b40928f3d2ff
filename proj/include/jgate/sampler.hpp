#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "jgate/errors.hpp"
#include "jgate/mat2c.hpp"

namespace jgate {

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// SplitMix64 (Steele, Lea, Flood). Used to derive per-row seeds and to fill
/// the xoshiro state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna), state filled from SplitMix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  /// Top 53 bits scaled to [0, 1).
  double uniform();

 private:
  std::uint64_t s_[4];
};

/// Seed of row `index`: output number index + 1 of a SplitMix64 started at
/// `seed`. Any row can be generated without generating the others.
std::uint64_t row_seed(std::uint64_t seed, std::uint64_t index);

struct SampleConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  double lambda_min = 1.01;
  double lambda_max = 1.5;
  double h_scale = 3.0;
  bool emit_h = false;
  std::filesystem::path output;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SampleRow {
  std::uint64_t index = 0;
  Complex lambda;
  double mg = 0.0;
  double bound = 0.0;
  double abcd_sqrt = 0.0;
  double bc_sqrt = 0.0;
  double one_plus_bc_sqrt = 0.0;
  double sum_bc_one_plus_bc = 0.0;
  double jorgensen_lhs = 0.0;
  bool wjc_fired = false;
  bool cor1_fired = false;
  bool cor2_fired = false;
  bool cor3_fired = false;
  bool classical_fired = false;
  bool axis_preserving = false;
  UnimodularMatrix h;
};

/// Throws InvalidRange unless 1 < lambda_min <= lambda_max, lambda_min below
/// the golden ratio (so some |lambda| = lambda_min has M_g < 1) and h_scale > 0.
void validate(const SampleConfig& cfg);

/// Draws lambda (|lambda| uniform in range, uniform argument, rejecting
/// M_g >= 1) and h (|b|, |c| uniform in (0, h_scale], uniform arguments,
/// a = sqrt|1 + bc| e^{i phi}, d = (1 + bc)/a) and evaluates every gate.
SampleRow sample_row(const SampleConfig& cfg, std::uint64_t index);

std::vector<SampleRow> sample_rows(const SampleConfig& cfg);

std::string csv_header(bool emit_h);
std::string csv_line(const SampleRow& row, bool emit_h);

void write_sample_csv(const SampleConfig& cfg, std::ostream& out);

/// Writes the CSV to cfg.output. Throws IoError / InvalidRange.
void run_sample_command(const SampleConfig& cfg);

}  // namespace jgate

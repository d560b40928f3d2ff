#pragma once

#include <string>

#include "jgate/document.hpp"
#include "jgate/gates.hpp"

namespace jgate {

/// Process exit codes of the gate command.
namespace exit_code {
inline constexpr int kInconclusive = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kNotApplicable = 2;
inline constexpr int kElementary = 10;
inline constexpr int kNonDiscrete = 11;
}  // namespace exit_code

int exit_code_for(VerdictTag tag);

struct CommandResult {
  Json report;
  int exit_code = 0;
};

/// Classification of g and h, normalization data, every gate, the combined
/// verdict and the proof-chain report.
CommandResult run_gate_command(const InputDocument& doc);

CommandResult run_classify_command(const UnimodularMatrix& m);

/// Iteration trace; exit code is 0 even when the trace overflowed, 2 when g
/// admits no loxodromic normal form.
CommandResult run_iterate_command(const InputDocument& doc, int steps);

std::string format_gate_text(const Json& report);
std::string format_classify_text(const Json& report);
std::string format_iterate_csv(const Json& report);

/// printf %.17g.
std::string format_double(double x);

}  // namespace jgate

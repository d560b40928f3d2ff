// jgate: Jorgensen-type discreteness gates for two-generator subgroups of SL(2,C).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jgate/commands.hpp"
#include "jgate/document.hpp"
#include "jgate/sampler.hpp"

namespace {

int emit_json(const jgate::CommandResult& result) {
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jorgensen-type discreteness gates for <g, h> in SL(2,C)"};
  app.require_subcommand(1);

  std::string gate_file;
  bool gate_pretty = false;
  auto* gate = app.add_subcommand("gate", "Run every gate on a matrix pair and report the verdict");
  gate->add_option("file", gate_file, "Input document (JSON)")->required();
  gate->add_flag("--pretty", gate_pretty, "Human-readable text instead of JSON");

  std::string classify_file;
  bool classify_pretty = false;
  auto* classify = app.add_subcommand("classify", "Classify one matrix as a Moebius transformation");
  classify->add_option("file", classify_file, "Matrix document (JSON)")->required();
  classify->add_flag("--pretty", classify_pretty, "Human-readable text instead of JSON");

  std::string iterate_file;
  int steps = -1;
  bool iterate_csv = false;
  auto* iterate = app.add_subcommand("iterate", "Iterate h -> h g h^-1 and trace diagnostics");
  iterate->add_option("file", iterate_file, "Input document (JSON)")->required();
  iterate->add_option("--steps", steps, "Number of conjugation steps (0..10000)")
      ->check(CLI::Range(0, jgate::kMaxIterations));
  iterate->add_flag("--csv", iterate_csv, "Emit CSV rows instead of JSON");

  jgate::SampleConfig cfg;
  std::string out_path;
  auto* sample = app.add_subcommand("sample", "Seeded sweep over (lambda, h) writing CSV");
  sample->add_option("--seed", cfg.seed, "64-bit seed")->required();
  sample->add_option("--count", cfg.count, "Number of rows")->required();
  sample->add_option("--lambda-min", cfg.lambda_min, "Smallest |lambda| (> 1)");
  sample->add_option("--lambda-max", cfg.lambda_max, "Largest |lambda|");
  sample->add_option("--h-scale", cfg.h_scale, "Upper bound on |b| and |c|");
  sample->add_option("--out", out_path, "Output CSV path")->required();
  sample->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  sample->add_flag("--emit-h", cfg.emit_h, "Append the 8 real components of h");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gate) {
      const auto doc = jgate::parse_input_document(jgate::read_file(gate_file), jgate::tolerance_from_env());
      const auto result = jgate::run_gate_command(doc);
      if (gate_pretty) {
        std::cout << jgate::format_gate_text(result.report);
        return result.exit_code;
      }
      return emit_json(result);
    }
    if (*classify) {
      const auto m = jgate::parse_matrix_document(jgate::read_file(classify_file), jgate::tolerance_from_env());
      const auto result = jgate::run_classify_command(m);
      if (classify_pretty) {
        std::cout << jgate::format_classify_text(result.report);
        return result.exit_code;
      }
      return emit_json(result);
    }
    if (*iterate) {
      const auto doc = jgate::parse_input_document(jgate::read_file(iterate_file), jgate::tolerance_from_env());
      const int n = steps >= 0 ? steps : doc.options.iterations.value_or(-1);
      if (n < 0 || n > jgate::kMaxIterations) {
        std::cerr << "error: --steps (or options.iterations) in [0, 10000] is required\n";
        return jgate::exit_code::kInvalidInput;
      }
      const auto result = jgate::run_iterate_command(doc, n);
      if (iterate_csv && result.report.contains("steps")) {
        std::cout << jgate::format_iterate_csv(result.report);
        if (result.report["overflowed"].get<bool>()) {
          std::cerr << "warning: entries exceeded 1e150; trace truncated\n";
        }
        return result.exit_code;
      }
      return emit_json(result);
    }
    if (*sample) {
      cfg.output = out_path;
      jgate::run_sample_command(cfg);
      return 0;
    }
  } catch (const jgate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jgate::exit_code::kInvalidInput;
  }
  return 0;
}

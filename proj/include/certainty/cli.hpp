#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "certainty/report.hpp"

namespace certainty::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

enum class Subcommand { evaluate, run, report };

struct RunConfig {
  Subcommand subcommand = Subcommand::evaluate;
  // evaluate
  std::string truth_path;
  std::string pred_path;
  std::string dataset_name;     // defaults to the prediction file stem
  std::string classifier_name = "external";
  bool verbose = false;
  // run
  std::vector<std::string> data_paths;
  std::vector<std::string> classifiers{"knn3", "nb", "dt", "rf"};
  std::size_t folds = 10;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trees = 100;
  bool timestamp = true;
  // report
  std::vector<std::string> report_paths;
  // shared
  std::vector<std::string> measures;  // beyond the accuracy family
  std::string out_path;               // empty: stdout
  std::optional<ReportFormat> format;
};

// Exit status: 0 success, 1 internal fault, 2 user-input fault.
int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Dumps CM, CM*, V and U as aligned text.
void print_matrices(const CertaintyReport& result, const LabelEncoding& enc, std::ostream& os);

}  // namespace certainty::cli

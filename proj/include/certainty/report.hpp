#pragma once

// One evaluation row in the Acc / Acc* / Acc*_v / Acc*_u / div / C schema,
// its JSON document form and a markdown table rendering.
//
// Divergence and certainty ratio are stored as fractions; the percentage
// views exist for display only.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "certainty/measures.hpp"

namespace certainty {

inline constexpr int kReportSchemaVersion = 1;

struct RunMetadata {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> folds;
  std::optional<std::string> timestamp;  // ISO-8601 UTC

  bool operator==(const RunMetadata&) const = default;
};

struct EvaluationReport {
  std::string dataset;
  std::string classifier;
  std::int64_t n = 0;
  std::size_t k = 0;
  double acc = 0.0;
  double acc_star = 0.0;
  double acc_v_star = 0.0;
  double acc_u_star = 0.0;
  double lambda_v = 0.0;
  double lambda_u = 0.0;
  double divergence = 0.0;
  std::optional<double> certainty_ratio;
  std::map<std::string, MeasureValues> measures;
  RunMetadata metadata;

  double divergence_pct() const { return 100.0 * divergence; }
  std::optional<double> certainty_ratio_pct() const {
    if (!certainty_ratio) return std::nullopt;
    return 100.0 * *certainty_ratio;
  }
};

bool operator==(const MeasureValues& a, const MeasureValues& b);
bool operator==(const EvaluationReport& a, const EvaluationReport& b);

// Fills a report row from an evaluated (T, Q) pair; each extra measure is
// evaluated on CM, CM*, V and U.
EvaluationReport make_report(std::string dataset, std::string classifier,
                             const CertaintyReport& result,
                             std::span<const MeasureFn> extra_measures = {},
                             RunMetadata metadata = {});

// Column-wise arithmetic mean of the rows of each classifier, in order of
// classifier name. Mean C is empty if any contributing row's is.
std::vector<EvaluationReport> mean_rows(std::span<const EvaluationReport> rows);

// Sorted by (dataset, classifier).
std::vector<EvaluationReport> sorted_rows(std::span<const EvaluationReport> rows);

nlohmann::json to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const nlohmann::json& j);

// {"schema_version": 1, "rows": [...], "means": [...]}. `means` is derived
// on write and ignored on read.
nlohmann::json document_to_json(std::span<const EvaluationReport> rows, bool include_means);
// Throws SchemaError on a version mismatch or a malformed document.
std::vector<EvaluationReport> document_from_json(const nlohmann::json& j);

// Accuracies to 3 decimals, div and C as percentages to 1 decimal.
std::string render_markdown(std::span<const EvaluationReport> rows, bool include_means);

enum class ReportFormat { json, markdown };

// Throws InputError when the path cannot be written.
void write_report(std::span<const EvaluationReport> rows, ReportFormat format,
                  const std::string& path, bool include_means = false);
inline void write_report(const EvaluationReport& report, ReportFormat format,
                         const std::string& path) {
  write_report(std::span(&report, 1), format, path, false);
}

std::vector<EvaluationReport> read_report(const std::string& path);

std::string utc_timestamp();

}  // namespace certainty

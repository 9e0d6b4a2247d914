#include "certainty/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <tuple>

#include "certainty/csv.hpp"
#include "certainty/error.hpp"

namespace certainty {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string fixed(const std::optional<double>& v, int decimals) {
  return v ? fixed(*v, decimals) : std::string("n/a");
}

}  // namespace

bool operator==(const MeasureValues& a, const MeasureValues& b) {
  return a.cm == b.cm && a.cm_star == b.cm_star && a.v == b.v && a.u == b.u &&
         a.certainty_ratio == b.certainty_ratio;
}

bool operator==(const EvaluationReport& a, const EvaluationReport& b) {
  return std::tie(a.dataset, a.classifier, a.n, a.k, a.acc, a.acc_star, a.acc_v_star,
                  a.acc_u_star, a.lambda_v, a.lambda_u, a.divergence, a.certainty_ratio,
                  a.measures, a.metadata) ==
         std::tie(b.dataset, b.classifier, b.n, b.k, b.acc, b.acc_star, b.acc_v_star,
                  b.acc_u_star, b.lambda_v, b.lambda_u, b.divergence, b.certainty_ratio,
                  b.measures, b.metadata);
}

EvaluationReport make_report(std::string dataset, std::string classifier,
                             const CertaintyReport& result,
                             std::span<const MeasureFn> extra_measures, RunMetadata metadata) {
  EvaluationReport r;
  r.dataset = std::move(dataset);
  r.classifier = std::move(classifier);
  r.n = result.cm.n();
  r.k = result.cm.classes();
  r.acc = result.accuracy;
  r.acc_star = result.decomposition.acc_star;
  r.acc_v_star = result.decomposition.acc_v;
  r.acc_u_star = result.decomposition.acc_u;
  r.lambda_v = result.decomposition.lambda_v;
  r.lambda_u = result.decomposition.lambda_u;
  r.divergence = result.divergence;
  r.certainty_ratio = result.certainty_ratio;
  for (const auto& m : extra_measures)
    r.measures[m.name] = evaluate_measure(m, result.cm, result.cm_star, result.parts);
  r.metadata = std::move(metadata);
  return r;
}

std::vector<EvaluationReport> sorted_rows(std::span<const EvaluationReport> rows) {
  std::vector<EvaluationReport> out(rows.begin(), rows.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.dataset, a.classifier) < std::tie(b.dataset, b.classifier);
  });
  return out;
}

std::vector<EvaluationReport> mean_rows(std::span<const EvaluationReport> rows) {
  std::map<std::string, std::vector<const EvaluationReport*>> groups;
  for (const auto& r : rows) groups[r.classifier].push_back(&r);

  std::vector<EvaluationReport> out;
  for (const auto& [classifier, members] : groups) {
    EvaluationReport mean;
    mean.dataset = "Mean";
    mean.classifier = classifier;
    const double count = static_cast<double>(members.size());
    double cr = 0.0;
    bool cr_defined = true;
    for (const auto* r : members) {
      mean.n += r->n;
      mean.k = std::max(mean.k, r->k);
      mean.acc += r->acc / count;
      mean.acc_star += r->acc_star / count;
      mean.acc_v_star += r->acc_v_star / count;
      mean.acc_u_star += r->acc_u_star / count;
      mean.lambda_v += r->lambda_v / count;
      mean.lambda_u += r->lambda_u / count;
      mean.divergence += r->divergence / count;
      if (r->certainty_ratio)
        cr += *r->certainty_ratio / count;
      else
        cr_defined = false;
    }
    if (cr_defined) mean.certainty_ratio = cr;
    out.push_back(std::move(mean));
  }
  return out;
}

nlohmann::json to_json(const EvaluationReport& r) {
  json measures = json::object();
  for (const auto& [name, m] : r.measures)
    measures[name] = {{"cm", m.cm},
                      {"cm_star", m.cm_star},
                      {"v", m.v},
                      {"u", m.u},
                      {"certainty_ratio", optional_number(m.certainty_ratio)}};
  json meta = json::object();
  meta["seed"] = r.metadata.seed ? json(*r.metadata.seed) : json(nullptr);
  meta["folds"] = r.metadata.folds ? json(*r.metadata.folds) : json(nullptr);
  meta["timestamp"] = r.metadata.timestamp ? json(*r.metadata.timestamp) : json(nullptr);
  return {{"dataset", r.dataset},
          {"classifier", r.classifier},
          {"n", r.n},
          {"k", r.k},
          {"acc", r.acc},
          {"acc_star", r.acc_star},
          {"acc_v_star", r.acc_v_star},
          {"acc_u_star", r.acc_u_star},
          {"lambda_v", r.lambda_v},
          {"lambda_u", r.lambda_u},
          {"divergence", r.divergence},
          {"certainty_ratio", optional_number(r.certainty_ratio)},
          {"measures", measures},
          {"metadata", meta}};
}

EvaluationReport report_from_json(const nlohmann::json& j) {
  try {
    EvaluationReport r;
    r.dataset = j.at("dataset").get<std::string>();
    r.classifier = j.at("classifier").get<std::string>();
    r.n = j.at("n").get<std::int64_t>();
    r.k = j.at("k").get<std::size_t>();
    r.acc = j.at("acc").get<double>();
    r.acc_star = j.at("acc_star").get<double>();
    r.acc_v_star = j.at("acc_v_star").get<double>();
    r.acc_u_star = j.at("acc_u_star").get<double>();
    r.lambda_v = j.at("lambda_v").get<double>();
    r.lambda_u = j.at("lambda_u").get<double>();
    r.divergence = j.at("divergence").get<double>();
    r.certainty_ratio = read_optional(j, "certainty_ratio");
    if (j.contains("measures"))
      for (const auto& [name, m] : j.at("measures").items())
        r.measures[name] = {m.at("cm").get<double>(), m.at("cm_star").get<double>(),
                            m.at("v").get<double>(), m.at("u").get<double>(),
                            read_optional(m, "certainty_ratio")};
    if (j.contains("metadata")) {
      const auto& meta = j.at("metadata");
      if (meta.contains("seed") && !meta.at("seed").is_null())
        r.metadata.seed = meta.at("seed").get<std::uint64_t>();
      if (meta.contains("folds") && !meta.at("folds").is_null())
        r.metadata.folds = meta.at("folds").get<std::size_t>();
      if (meta.contains("timestamp") && !meta.at("timestamp").is_null())
        r.metadata.timestamp = meta.at("timestamp").get<std::string>();
    }
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed report row: ") + e.what());
  }
}

nlohmann::json document_to_json(std::span<const EvaluationReport> rows, bool include_means) {
  json doc = {{"schema_version", kReportSchemaVersion}, {"rows", json::array()}};
  for (const auto& r : rows) doc["rows"].push_back(to_json(r));
  if (include_means) {
    doc["means"] = json::array();
    for (const auto& r : mean_rows(rows)) doc["means"].push_back(to_json(r));
  }
  return doc;
}

std::vector<EvaluationReport> document_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema_version") || !j.at("schema_version").is_number_integer())
    throw SchemaError("report document has no integer schema_version");
  const auto version = j.at("schema_version").get<int>();
  if (version != kReportSchemaVersion)
    throw SchemaError("report schema_version " + std::to_string(version) + " is not supported (expected " +
                      std::to_string(kReportSchemaVersion) + ")");
  if (!j.contains("rows") || !j.at("rows").is_array())
    throw SchemaError("report document has no rows array");
  std::vector<EvaluationReport> rows;
  for (const auto& row : j.at("rows")) rows.push_back(report_from_json(row));
  return rows;
}

std::string render_markdown(std::span<const EvaluationReport> rows, bool include_means) {
  std::string out =
      "| Dataset | Classifier | Acc | Acc* | Acc*_v | Acc*_u | div | C_rho |\n"
      "|---|---|---:|---:|---:|---:|---:|---:|\n";
  auto line = [&](const EvaluationReport& r, const std::string& dataset) {
    out += "| " + dataset + " | " + r.classifier + " | " + fixed(r.acc, 3) + " | " +
           fixed(r.acc_star, 3) + " | " + fixed(r.acc_v_star, 3) + " | " +
           fixed(r.acc_u_star, 3) + " | " + fixed(r.divergence_pct(), 1) + " | " +
           fixed(r.certainty_ratio_pct(), 1) + " |\n";
  };
  for (const auto& r : rows) line(r, r.dataset);
  if (include_means)
    for (const auto& r : mean_rows(rows)) line(r, "**Mean**");
  return out;
}

void write_report(std::span<const EvaluationReport> rows, ReportFormat format,
                  const std::string& path, bool include_means) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  if (format == ReportFormat::json)
    out << document_to_json(rows, include_means).dump(2) << '\n';
  else
    out << render_markdown(rows, include_means);
  if (!out) throw InputError("failed writing '" + path + "'");
}

std::vector<EvaluationReport> read_report(const std::string& path) {
  const auto text = csv::read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": not a JSON document: " + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace certainty

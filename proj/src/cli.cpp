#include "certainty/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "certainty/classifiers/cross_validation.hpp"
#include "certainty/error.hpp"
#include "certainty/io.hpp"

namespace certainty::cli {

namespace {

std::vector<MeasureFn> extra_measures(const std::vector<std::string>& names) {
  std::vector<MeasureFn> out;
  for (const auto& name : names)
    if (name != "accuracy") out.push_back(find_measure(name));
  return out;
}

ReportFormat resolve_format(const RunConfig& config) {
  if (config.format) return *config.format;
  const auto ext = std::filesystem::path(config.out_path).extension().string();
  if (ext == ".json") return ReportFormat::json;
  return ReportFormat::markdown;
}

void emit(const RunConfig& config, std::span<const EvaluationReport> rows, bool means,
          std::ostream& out) {
  const auto format = resolve_format(config);
  if (!config.out_path.empty()) {
    write_report(rows, format, config.out_path, means);
    return;
  }
  if (format == ReportFormat::json)
    out << document_to_json(rows, means).dump(2) << '\n';
  else
    out << render_markdown(rows, means);
}

std::string pct(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * *v);
  return buf;
}

void print_summary(const EvaluationReport& r, std::ostream& os) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s / %s: Acc %.3f  Acc* %.3f  Acc*_v %.3f  Acc*_u %.3f  lambda_v %.3f  "
                "lambda_u %.3f  div %s  C_rho %s\n",
                r.dataset.c_str(), r.classifier.c_str(), r.acc, r.acc_star, r.acc_v_star,
                r.acc_u_star, r.lambda_v, r.lambda_u, pct(r.divergence).c_str(),
                pct(r.certainty_ratio).c_str());
  os << buf;
}

// Maps library exceptions onto the exit-status contract.
int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

template <typename T>
void print_block(std::ostream& os, const std::string& title, const Matrix<T>& m,
                 const LabelEncoding& enc) {
  os << title << '\n';
  char buf[64];
  os << "          ";
  for (const auto& c : enc.classes()) {
    std::snprintf(buf, sizeof buf, " %10.10s", c.c_str());
    os << buf;
  }
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::snprintf(buf, sizeof buf, "%-10.10s", enc.label(i).c_str());
    os << buf;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_integral_v<T>)
        std::snprintf(buf, sizeof buf, " %10lld", static_cast<long long>(m(i, j)));
      else
        std::snprintf(buf, sizeof buf, " %10.6f", static_cast<double>(m(i, j)));
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace

void print_matrices(const CertaintyReport& result, const LabelEncoding& enc, std::ostream& os) {
  print_block(os, "CM (rows: true class, columns: predicted class)", result.cm.values(), enc);
  print_block(os, "CM*", result.cm_star.values(), enc);
  print_block(os, "V (certainty)", result.parts.certainty, enc);
  print_block(os, "U (uncertainty)", result.parts.uncertainty, enc);
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const auto labels = load_truth(config.truth_path);
        auto classes = read_prediction_header(config.pred_path);
        classes.insert(classes.end(), labels.begin(), labels.end());
        const auto enc = encode_labels(classes);
        const auto q = load_predictions(config.pred_path, enc);
        if (q.rows() != labels.size())
          throw InconsistencyError("row counts differ: " + config.truth_path + " has " +
                                   std::to_string(labels.size()) + " labels, " +
                                   config.pred_path + " has " + std::to_string(q.rows()) +
                                   " prediction rows");
        const auto t = build_ground_truth(labels, enc);
        const auto result = evaluate(t, q);
        const auto measures = extra_measures(config.measures);
        const auto name = config.dataset_name.empty()
                              ? std::filesystem::path(config.pred_path).stem().string()
                              : config.dataset_name;
        const auto report = make_report(name, config.classifier_name, result, measures);
        if (config.verbose) print_matrices(result, enc, err);
        if (!config.out_path.empty()) print_summary(report, out);
        emit(config, std::span(&report, 1), false, out);
        return 0;
      },
      err);
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (config.data_paths.empty()) throw InputError("run: no --data files given");
        std::vector<ModelKind> kinds;
        for (const auto& id : config.classifiers) kinds.push_back(parse_model_kind(id));
        if (kinds.empty()) throw InputError("run: no classifiers selected");
        const auto measures = extra_measures(config.measures);

        CrossValidationPlan plan;
        plan.folds = config.folds;
        plan.seed = config.seed;
        ClassifierOptions options;
        options.n_trees = config.trees;

        RunMetadata meta;
        meta.seed = config.seed;
        meta.folds = config.folds;
        if (config.timestamp) meta.timestamp = utc_timestamp();

        std::vector<EvaluationReport> rows;
        std::set<std::string> names;
        for (const auto& path : config.data_paths) {
          const auto data = load_dataset(path);
          if (!names.insert(data.name).second)
            throw InputError("run: dataset name '" + data.name + "' given twice");
          for (auto kind : kinds) {
            const auto cv = cross_validate(data, kind, plan, options);
            const auto result = evaluate(cv.t, cv.q);
            rows.push_back(make_report(data.name, std::string(model_id(kind)), result, measures, meta));
            if (!config.out_path.empty()) print_summary(rows.back(), out);
          }
        }
        rows = sorted_rows(rows);
        emit(config, rows, config.data_paths.size() > 1, out);
        return 0;
      },
      err);
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (config.report_paths.empty()) throw InputError("report: no report files given");
        std::vector<EvaluationReport> rows;
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& path : config.report_paths)
          for (auto& row : read_report(path)) {
            if (!seen.emplace(row.dataset, row.classifier).second)
              throw InputError("report: duplicate (dataset, classifier) pair (" + row.dataset +
                               ", " + row.classifier + ") in " + path);
            rows.push_back(std::move(row));
          }
        rows = sorted_rows(rows);
        emit(config, rows, true, out);
        return 0;
      },
      err);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Probabilistic confusion matrix, certainty/uncertainty decomposition and "
               "certainty ratio for classifier predictions"};
  app.require_subcommand(1, 1);

  std::string format;
  std::string clf_list;
  std::string measure_list;
  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--measures", measure_list,
                    "Extra measures, comma separated: precision,recall,f1,f<beta>,mcc");
    sub->add_option("--out", config.out_path, "Output file (default: stdout)");
    sub->add_option("--format", format, "json or md (default: from --out extension, else md)")
        ->check(CLI::IsMember({"json", "md"}));
  };

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate external probability predictions");
  evaluate->add_option("--truth", config.truth_path, "Ground truth: label column or dataset file")
      ->required();
  evaluate->add_option("--pred", config.pred_path, "Prediction file, header of class labels")
      ->required();
  evaluate->add_option("--name", config.dataset_name, "Dataset name in the report");
  evaluate->add_option("--classifier", config.classifier_name, "Classifier name in the report");
  evaluate->add_flag("--verbose,-v", config.verbose, "Print CM, CM*, V and U to stderr");
  add_shared(evaluate);

  auto* run = app.add_subcommand("run", "Cross-validate built-in classifiers on datasets");
  run->add_option("--data", config.data_paths, "Dataset file(s)")->required();
  run->add_option("--clf", clf_list, "Classifiers, comma separated: knn3,nb,dt,rf");
  run->add_option("--folds", config.folds, "Stratified folds")->capture_default_str();
  run->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  run->add_option("--trees", config.trees, "Random forest size")->capture_default_str();
  bool no_timestamp = false;
  run->add_flag("--no-timestamp", no_timestamp, "Omit the run timestamp from reports");
  add_shared(run);

  auto* report = app.add_subcommand("report", "Merge report JSON files into one table");
  report->add_option("reports", config.report_paths, "Report JSON files");
  add_shared(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  auto split = [](const std::string& list) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= list.size()) {
      const auto end = std::min(list.find(',', start), list.size());
      if (end > start) items.push_back(list.substr(start, end - start));
      start = end + 1;
    }
    return items;
  };
  if (!clf_list.empty()) config.classifiers = split(clf_list);
  if (!measure_list.empty()) config.measures = split(measure_list);
  if (format == "json") config.format = ReportFormat::json;
  if (format == "md") config.format = ReportFormat::markdown;
  config.timestamp = !no_timestamp;

  if (evaluate->parsed()) {
    config.subcommand = Subcommand::evaluate;
    return cmd_evaluate(config, out, err);
  }
  if (run->parsed()) {
    config.subcommand = Subcommand::run;
    return cmd_run(config, out, err);
  }
  config.subcommand = Subcommand::report;
  return cmd_report(config, out, err);
}

}  // namespace certainty::cli

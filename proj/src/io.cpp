#include "certainty/io.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "certainty/csv.hpp"
#include "certainty/error.hpp"

namespace certainty {

namespace {

std::vector<csv::Row> read_rows(const std::string& path) {
  auto rows = csv::parse(csv::read_file(path), path);
  if (rows.empty()) throw InputError(path + ": file is empty");
  return rows;
}

void require_width(const std::string& path, const csv::Row& row, std::size_t width) {
  if (row.cells.size() != width)
    throw ParseError(path, row.line, "",
                     "expected " + std::to_string(width) + " columns, found " +
                         std::to_string(row.cells.size()));
}

}  // namespace

Dataset load_dataset(const std::string& path) {
  const auto rows = read_rows(path);
  const std::size_t width = rows.front().cells.size();
  if (width < 2) throw ParseError(path, rows.front().line, "", "need at least one feature and a label");
  const std::size_t m = width - 1;

  Dataset data;
  data.name = std::filesystem::path(path).stem().string();
  std::size_t first = 0;
  const auto& head = rows.front().cells;
  if (std::any_of(head.begin(), head.end() - 1,
                  [](const std::string& c) { return !csv::to_number(c); })) {
    data.feature_names.assign(head.begin(), head.end() - 1);
    first = 1;
  }
  if (first == rows.size()) throw InputError(path + ": no data rows after the header");

  data.features = Matrix<double>(rows.size() - first, m);
  data.labels.reserve(rows.size() - first);
  for (std::size_t r = first; r < rows.size(); ++r) {
    const auto& row = rows[r];
    require_width(path, row, width);
    for (std::size_t f = 0; f < m; ++f) {
      auto v = csv::to_number(row.cells[f]);
      if (!v) {
        const std::string column = data.feature_names.empty()
                                       ? std::to_string(f + 1)
                                       : std::to_string(f + 1) + " (" + data.feature_names[f] + ")";
        throw ParseError(path, row.line, column,
                         "non-numeric feature value '" + row.cells[f] + "'");
      }
      data.features(r - first, f) = *v;
    }
    if (row.cells[m].empty()) throw ParseError(path, row.line, std::to_string(width), "empty class label");
    data.labels.push_back(row.cells[m]);
  }
  data.validate();
  return data;
}

std::vector<std::string> load_truth(const std::string& path) {
  const auto rows = read_rows(path);
  if (rows.front().cells.size() > 1) return load_dataset(path).labels;
  if (rows.size() < 2) throw InputError(path + ": no labels after the header");
  std::vector<std::string> labels;
  labels.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    require_width(path, rows[r], 1);
    if (rows[r].cells[0].empty()) throw ParseError(path, rows[r].line, "1", "empty class label");
    labels.push_back(rows[r].cells[0]);
  }
  return labels;
}

std::vector<std::string> read_prediction_header(const std::string& path) {
  const auto rows = read_rows(path);
  const auto& header = rows.front().cells;
  std::set<std::string> seen;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j].empty()) throw ParseError(path, rows.front().line, std::to_string(j + 1), "empty class label in header");
    if (!seen.insert(header[j]).second)
      throw ParseError(path, rows.front().line, std::to_string(j + 1),
                       "duplicate class label '" + header[j] + "' in header");
  }
  return header;
}

ProbabilityMatrix load_predictions(const std::string& path, const LabelEncoding& enc) {
  const auto header = read_prediction_header(path);
  const auto rows = read_rows(path);

  std::vector<std::string> missing, extra;
  for (const auto& c : enc.classes())
    if (std::find(header.begin(), header.end(), c) == header.end()) missing.push_back(c);
  for (const auto& c : header)
    if (!enc.find(c)) extra.push_back(c);
  if (!missing.empty() || !extra.empty()) {
    std::string msg = path + ": header classes do not match the label encoding";
    auto list = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
      return s;
    };
    if (!missing.empty()) msg += "; missing: " + list(missing);
    if (!extra.empty()) msg += "; unexpected: " + list(extra);
    throw EncodingError(msg);
  }

  std::vector<std::size_t> target(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) target[j] = enc.index(header[j]);

  Matrix<double> values(rows.size() - 1, enc.size());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    require_width(path, row, header.size());
    for (std::size_t j = 0; j < header.size(); ++j) {
      auto v = csv::to_number(row.cells[j]);
      if (!v)
        throw ParseError(path, row.line, header[j], "non-numeric probability '" + row.cells[j] + "'");
      if (*v < 0.0)
        throw ParseError(path, row.line, header[j], "negative probability " + row.cells[j]);
      values(r - 1, target[j]) = *v;
    }
  }
  try {
    return ProbabilityMatrix(std::move(values));
  } catch (const InvalidProbabilityError& e) {
    throw ParseError(path, rows[e.row() + 1].line, "(row sum)", e.what());
  }
}

}  // namespace certainty

#include "certainty/dataset.hpp"

#include <cmath>

#include "certainty/error.hpp"

namespace certainty {

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  Dataset out;
  out.name = name;
  out.feature_names = feature_names;
  out.features = Matrix<double>(rows.size(), m());
  out.labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = features.row(rows[i]);
    std::copy(src.begin(), src.end(), out.features.row(i).begin());
    out.labels.push_back(labels.at(rows[i]));
  }
  return out;
}

void Dataset::validate() const {
  if (labels.size() != n())
    throw DimensionError("dataset has " + std::to_string(n()) + " feature rows but " +
                         std::to_string(labels.size()) + " labels");
  if (!feature_names.empty() && feature_names.size() != m())
    throw DimensionError("dataset has " + std::to_string(m()) + " features but " +
                         std::to_string(feature_names.size()) + " feature names");
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < m(); ++j)
      if (!std::isfinite(features(i, j)))
        throw InputError("dataset row " + std::to_string(i + 1) + ", feature " +
                         std::to_string(j + 1) + " is not finite");
  const auto enc = encoding();
  if (n() < enc.size())
    throw DegenerateProblemError("dataset has fewer instances than classes");
}

}  // namespace certainty

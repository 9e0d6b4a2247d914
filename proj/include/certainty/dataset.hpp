#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "certainty/labels.hpp"
#include "certainty/matrix.hpp"

namespace certainty {

// n×m real features plus one class label per row.
struct Dataset {
  std::string name;
  Matrix<double> features;
  std::vector<std::string> labels;
  std::vector<std::string> feature_names;  // empty or size m

  std::size_t n() const noexcept { return features.rows(); }
  std::size_t m() const noexcept { return features.cols(); }

  // Rows in the given order; repeats are allowed.
  Dataset subset(std::span<const std::size_t> rows) const;

  // Throws InputError unless: labels align with rows, every feature is
  // finite, at least two classes are present and n >= k.
  void validate() const;

  LabelEncoding encoding() const { return LabelEncoding::from_labels(labels); }
};

}  // namespace certainty

#pragma once

#include <cstddef>
#include <vector>

#include "certainty/core_matrices.hpp"
#include "certainty/dataset.hpp"

namespace certainty {

// k-nearest-neighbour vote fractions on z-scored features. Standardization
// parameters come from the training set; a zero-variance feature is left
// unscaled. Equidistant neighbours resolve toward the lower training index.
class KnnClassifier {
 public:
  static KnnClassifier fit(const Dataset& train, const LabelEncoding& enc,
                           std::size_t k_neighbors = 3);

  ProbabilityMatrix predict_proba(const Matrix<double>& features) const;

  std::size_t k_neighbors() const noexcept { return k_; }

 private:
  Matrix<double> standardize(const Matrix<double>& features) const;

  std::size_t k_ = 3;
  std::size_t classes_ = 0;
  std::vector<double> mean_;
  std::vector<double> scale_;
  Matrix<double> train_;
  std::vector<std::size_t> labels_;
};

}  // namespace certainty

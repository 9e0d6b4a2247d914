#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "certainty/core_matrices.hpp"
#include "certainty/dataset.hpp"
#include "certainty/random.hpp"

namespace certainty {

struct DecisionTreeParams {
  std::optional<std::size_t> max_depth;
  // Candidate features per split; 0 or >= m means all features.
  std::size_t max_features = 0;
};

// Binary CART tree with Gini impurity and axis-aligned splits at midpoints
// between consecutive distinct feature values. Samples with x[f] <= threshold
// go left. Leaves predict the class frequencies of their training samples.
class DecisionTree {
 public:
  struct Node {
    std::ptrdiff_t feature = -1;  // -1 on leaves
    double threshold = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t depth = 0;
    std::vector<std::size_t> counts;  // class counts of training samples
    std::vector<double> distribution;

    bool is_leaf() const noexcept { return feature < 0; }
  };

  using Params = DecisionTreeParams;

  // Grows a tree on the given rows of `features` (repeats allowed).
  // `rng` is only consulted when feature subsampling is active.
  static DecisionTree fit(const Matrix<double>& features, std::span<const std::size_t> labels,
                          std::size_t classes, std::span<const std::size_t> rows,
                          const Params& params, Rng* rng = nullptr);

  static DecisionTree fit(const Dataset& train, const LabelEncoding& enc, const Params& params = {});

  std::span<const double> predict_row(std::span<const double> x) const;
  ProbabilityMatrix predict_proba(const Matrix<double>& features) const;

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t classes() const noexcept { return classes_; }
  std::size_t features() const noexcept { return features_; }
  std::size_t depth() const;

 private:
  std::vector<Node> nodes_;
  std::size_t classes_ = 0;
  std::size_t features_ = 0;
};

// Weighted Gini impurity of a split: Σ_side (n_side/n)·(1 − Σ_c p_c²).
double weighted_gini(std::span<const std::size_t> left, std::span<const std::size_t> right);

}  // namespace certainty

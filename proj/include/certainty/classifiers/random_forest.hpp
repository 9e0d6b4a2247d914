#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certainty/classifiers/decision_tree.hpp"

namespace certainty {

// Bagged CART trees with ⌈√m⌉ candidate features per split; probabilities
// are the unweighted mean of the trees' leaf distributions. Tree t draws
// from its own stream mix_seed(seed, t), so results do not depend on the
// number of threads.
class RandomForest {
 public:
  struct Params {
    std::size_t n_trees = 100;
    bool bootstrap = true;
    // 0 means ⌈√m⌉.
    std::size_t max_features = 0;
    std::uint64_t seed = 42;
  };

  static RandomForest fit(const Dataset& train, const LabelEncoding& enc, const Params& params);

  ProbabilityMatrix predict_proba(const Matrix<double>& features) const;

  const std::vector<DecisionTree>& trees() const noexcept { return trees_; }

 private:
  std::vector<DecisionTree> trees_;
  std::size_t classes_ = 0;
};

}  // namespace certainty

#include "certainty/classifiers/random_forest.hpp"

#include <cmath>
#include <numeric>

#include "certainty/error.hpp"

namespace certainty {

RandomForest RandomForest::fit(const Dataset& train, const LabelEncoding& enc,
                               const Params& params) {
  if (params.n_trees < 1) throw InputError("random forest needs at least one tree");
  const std::size_t n = train.n(), m = train.m();
  if (n == 0) throw InputError("random forest: empty training set");

  std::vector<std::size_t> y;
  y.reserve(n);
  for (const auto& label : train.labels) y.push_back(enc.index(label));

  DecisionTree::Params tree_params;
  tree_params.max_features =
      params.max_features ? params.max_features
                          : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))));

  RandomForest forest;
  forest.classes_ = enc.size();
  forest.trees_.resize(params.n_trees);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t st = 0; st < static_cast<std::ptrdiff_t>(params.n_trees); ++st) {
    const auto t = static_cast<std::size_t>(st);
    Rng rng(mix_seed(params.seed, t));
    std::vector<std::size_t> rows(n);
    if (params.bootstrap) {
      for (auto& r : rows) r = static_cast<std::size_t>(uniform_index(rng, n));
    } else {
      std::iota(rows.begin(), rows.end(), std::size_t{0});
    }
    forest.trees_[t] = DecisionTree::fit(train.features, y, enc.size(), rows, tree_params, &rng);
  }
  return forest;
}

ProbabilityMatrix RandomForest::predict_proba(const Matrix<double>& features) const {
  if (!trees_.empty() && features.cols() != trees_.front().features())
    throw DimensionError("random forest: expected " + std::to_string(trees_.front().features()) +
                         " features, got " + std::to_string(features.cols()));
  Matrix<double> proba(features.rows(), classes_);
  const double scale = 1.0 / static_cast<double>(trees_.size());
#pragma omp parallel for schedule(static) if (features.rows() * trees_.size() >= 4096)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(features.rows()); ++si) {
    const auto i = static_cast<std::size_t>(si);
    auto row = proba.row(i);
    for (const auto& tree : trees_) {
      auto leaf = tree.predict_row(features.row(i));
      for (std::size_t c = 0; c < classes_; ++c) row[c] += leaf[c];
    }
    if (trees_.size() > 1)
      for (double& v : row) v *= scale;
  }
  return ProbabilityMatrix(std::move(proba));
}

}  // namespace certainty

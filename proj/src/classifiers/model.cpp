#include "certainty/classifiers/model.hpp"

#include "certainty/error.hpp"

namespace certainty {

std::string_view model_id(ModelKind kind) {
  switch (kind) {
    case ModelKind::knn: return "knn3";
    case ModelKind::gaussian_nb: return "nb";
    case ModelKind::decision_tree: return "dt";
    case ModelKind::random_forest: return "rf";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view id) {
  for (auto kind : {ModelKind::knn, ModelKind::gaussian_nb, ModelKind::decision_tree,
                    ModelKind::random_forest})
    if (model_id(kind) == id) return kind;
  throw InputError("unknown classifier '" + std::string(id) + "' (expected knn3, nb, dt or rf)");
}

ProbabilityMatrix FittedModel::predict_proba(const Matrix<double>& features) const {
  return std::visit([&](const auto& m) { return m.predict_proba(features); }, impl_);
}

FittedModel fit_knn(const Dataset& train, const LabelEncoding& enc, std::size_t k_neighbors) {
  return {ModelKind::knn, enc, KnnClassifier::fit(train, enc, k_neighbors)};
}

FittedModel fit_gaussian_nb(const Dataset& train, const LabelEncoding& enc) {
  return {ModelKind::gaussian_nb, enc, GaussianNaiveBayes::fit(train, enc)};
}

FittedModel fit_decision_tree(const Dataset& train, const LabelEncoding& enc,
                              std::optional<std::size_t> max_depth) {
  DecisionTree::Params params;
  params.max_depth = max_depth;
  return {ModelKind::decision_tree, enc, DecisionTree::fit(train, enc, params)};
}

FittedModel fit_random_forest(const Dataset& train, const LabelEncoding& enc,
                              const RandomForest::Params& params) {
  return {ModelKind::random_forest, enc, RandomForest::fit(train, enc, params)};
}

FittedModel fit_model(ModelKind kind, const Dataset& train, const LabelEncoding& enc,
                      const ClassifierOptions& options) {
  switch (kind) {
    case ModelKind::knn: return fit_knn(train, enc, options.k_neighbors);
    case ModelKind::gaussian_nb: return fit_gaussian_nb(train, enc);
    case ModelKind::decision_tree: return fit_decision_tree(train, enc, options.max_depth);
    case ModelKind::random_forest:
      return fit_random_forest(train, enc,
                               {options.n_trees, options.bootstrap, options.max_features,
                                options.seed});
  }
  throw Error("unhandled model kind");
}

}  // namespace certainty

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "certainty/classifiers/decision_tree.hpp"
#include "certainty/classifiers/knn.hpp"
#include "certainty/classifiers/naive_bayes.hpp"
#include "certainty/classifiers/random_forest.hpp"

namespace certainty {

enum class ModelKind { knn, gaussian_nb, decision_tree, random_forest };

// Short identifiers used on the command line and in reports: knn3, nb, dt, rf.
std::string_view model_id(ModelKind kind);
// Throws InputError on an unknown identifier.
ModelKind parse_model_kind(std::string_view id);

struct ClassifierOptions {
  std::size_t k_neighbors = 3;
  std::optional<std::size_t> max_depth;
  std::size_t n_trees = 100;
  bool bootstrap = true;
  std::size_t max_features = 0;
  std::uint64_t seed = 42;
};

class FittedModel {
 public:
  using Impl = std::variant<KnnClassifier, GaussianNaiveBayes, DecisionTree, RandomForest>;

  FittedModel(ModelKind kind, LabelEncoding enc, Impl impl)
      : kind_(kind), encoding_(std::move(enc)), impl_(std::move(impl)) {}

  ModelKind kind() const noexcept { return kind_; }
  const LabelEncoding& encoding() const noexcept { return encoding_; }
  const Impl& impl() const noexcept { return impl_; }

  ProbabilityMatrix predict_proba(const Matrix<double>& features) const;

 private:
  ModelKind kind_;
  LabelEncoding encoding_;
  Impl impl_;
};

FittedModel fit_knn(const Dataset& train, const LabelEncoding& enc, std::size_t k_neighbors = 3);
FittedModel fit_gaussian_nb(const Dataset& train, const LabelEncoding& enc);
FittedModel fit_decision_tree(const Dataset& train, const LabelEncoding& enc,
                              std::optional<std::size_t> max_depth = std::nullopt);
FittedModel fit_random_forest(const Dataset& train, const LabelEncoding& enc,
                              const RandomForest::Params& params);

FittedModel fit_model(ModelKind kind, const Dataset& train, const LabelEncoding& enc,
                      const ClassifierOptions& options);

}  // namespace certainty

#include "certainty/classifiers/cross_validation.hpp"

#include <algorithm>
#include <exception>

#include "certainty/error.hpp"
#include "certainty/random.hpp"

namespace certainty {

std::vector<std::size_t> assign_folds(const GroundTruthMatrix& truth,
                                      const CrossValidationPlan& plan) {
  const auto counts = truth.column_counts();
  const auto smallest = *std::min_element(counts.begin(), counts.end());
  if (plan.folds < 2) throw StratificationError("cross-validation needs at least 2 folds");
  if (static_cast<std::int64_t>(plan.folds) > smallest)
    throw StratificationError("fold count " + std::to_string(plan.folds) +
                              " exceeds the smallest class size " + std::to_string(smallest));

  Rng rng(plan.seed);
  std::vector<std::size_t> fold(truth.rows(), 0);
  std::vector<std::vector<std::size_t>> members(truth.classes());
  for (std::size_t i = 0; i < truth.rows(); ++i) members[truth.hot(i)].push_back(i);
  std::size_t deal = 0;
  for (auto& cls : members) {
    shuffle(std::span(cls), rng);
    for (auto i : cls) fold[i] = deal++ % plan.folds;
  }
  return fold;
}

CrossValidationResult cross_validate(const Dataset& data, ModelKind kind,
                                     const CrossValidationPlan& plan,
                                     const ClassifierOptions& options) {
  data.validate();
  auto enc = data.encoding();
  auto truth = build_ground_truth(data.labels, enc);
  const auto fold = assign_folds(truth, plan);

  Matrix<double> pooled(data.n(), enc.size());
  std::vector<std::exception_ptr> failures(plan.folds);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t sf = 0; sf < static_cast<std::ptrdiff_t>(plan.folds); ++sf) {
    const auto f = static_cast<std::size_t>(sf);
    try {
      std::vector<std::size_t> train_rows, test_rows;
      for (std::size_t i = 0; i < data.n(); ++i) (fold[i] == f ? test_rows : train_rows).push_back(i);
      auto fold_options = options;
      fold_options.seed = mix_seed(plan.seed, f);
      const auto model = fit_model(kind, data.subset(train_rows), enc, fold_options);
      const auto q = model.predict_proba(data.subset(test_rows).features);
      for (std::size_t r = 0; r < test_rows.size(); ++r) {
        auto src = q.row(r);
        std::copy(src.begin(), src.end(), pooled.row(test_rows[r]).begin());
      }
    } catch (...) {
      failures[f] = std::current_exception();
    }
  }
  for (const auto& e : failures)
    if (e) std::rethrow_exception(e);
  return {ProbabilityMatrix(std::move(pooled)), std::move(truth), std::move(enc)};
}

}  // namespace certainty

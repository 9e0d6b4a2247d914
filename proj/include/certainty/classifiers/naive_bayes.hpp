#pragma once

#include <cstddef>
#include <vector>

#include "certainty/core_matrices.hpp"
#include "certainty/dataset.hpp"

namespace certainty {

// Gaussian naive Bayes with class-frequency priors. Per-class variances are
// floored at 1e-9 times the largest feature variance of the training set.
class GaussianNaiveBayes {
 public:
  static GaussianNaiveBayes fit(const Dataset& train, const LabelEncoding& enc);

  ProbabilityMatrix predict_proba(const Matrix<double>& features) const;

  // Per-class log joint log P(c) + Σ log N(x_f; μ, σ²); -inf for classes
  // absent from training.
  std::vector<double> log_joint(std::span<const double> x) const;

  const Matrix<double>& means() const noexcept { return mean_; }
  const Matrix<double>& variances() const noexcept { return var_; }
  const std::vector<double>& priors() const noexcept { return prior_; }

 private:
  Matrix<double> mean_;
  Matrix<double> var_;
  std::vector<double> prior_;
};

// log Σ exp(values); -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> values);

}  // namespace certainty

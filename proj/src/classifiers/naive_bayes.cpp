#include "certainty/classifiers/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "certainty/error.hpp"

namespace certainty {

double log_sum_exp(std::span<const double> values) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double top = kNegInf;
  for (double v : values) top = std::max(top, v);
  if (top == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - top);
  return top + std::log(acc);
}

GaussianNaiveBayes GaussianNaiveBayes::fit(const Dataset& train, const LabelEncoding& enc) {
  const std::size_t k = enc.size(), m = train.m(), n = train.n();
  if (n == 0) throw InputError("naive bayes: empty training set");
  GaussianNaiveBayes model;
  model.mean_ = Matrix<double>(k, m);
  model.var_ = Matrix<double>(k, m);
  model.prior_.assign(k, 0.0);

  std::vector<std::size_t> y(n);
  std::vector<double> count(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = enc.index(train.labels[i]);
    count[y[i]] += 1.0;
    for (std::size_t f = 0; f < m; ++f) model.mean_(y[i], f) += train.features(i, f);
  }
  for (std::size_t c = 0; c < k; ++c)
    if (count[c] > 0.0)
      for (std::size_t f = 0; f < m; ++f) model.mean_(c, f) /= count[c];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < m; ++f) {
      const double d = train.features(i, f) - model.mean_(y[i], f);
      model.var_(y[i], f) += d * d;
    }

  // Floor relative to the widest feature over the whole training set.
  double widest = 0.0;
  for (std::size_t f = 0; f < m; ++f) {
    double mean = 0.0, var = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += train.features(i, f);
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = train.features(i, f) - mean;
      var += d * d;
    }
    widest = std::max(widest, var / static_cast<double>(n));
  }
  const double floor = widest > 0.0 ? 1e-9 * widest : 1e-9;

  for (std::size_t c = 0; c < k; ++c) {
    model.prior_[c] = count[c] / static_cast<double>(n);
    for (std::size_t f = 0; f < m; ++f) {
      double& v = model.var_(c, f);
      if (count[c] > 0.0) v /= count[c];
      v = std::max(v, floor);
    }
  }
  return model;
}

std::vector<double> GaussianNaiveBayes::log_joint(std::span<const double> x) const {
  const std::size_t k = prior_.size(), m = mean_.cols();
  if (x.size() != m)
    throw DimensionError("naive bayes: expected " + std::to_string(m) + " features, got " +
                         std::to_string(x.size()));
  std::vector<double> out(k, -std::numeric_limits<double>::infinity());
  for (std::size_t c = 0; c < k; ++c) {
    if (prior_[c] <= 0.0) continue;
    double lj = std::log(prior_[c]);
    for (std::size_t f = 0; f < m; ++f) {
      const double var = var_(c, f);
      const double d = x[f] - mean_(c, f);
      lj -= 0.5 * (std::log(2.0 * std::numbers::pi * var) + d * d / var);
    }
    out[c] = lj;
  }
  return out;
}

ProbabilityMatrix GaussianNaiveBayes::predict_proba(const Matrix<double>& features) const {
  if (features.cols() != mean_.cols())
    throw DimensionError("naive bayes: expected " + std::to_string(mean_.cols()) +
                         " features, got " + std::to_string(features.cols()));
  Matrix<double> proba(features.rows(), prior_.size());
#pragma omp parallel for schedule(static) if (features.rows() >= 4096)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(features.rows()); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const auto lj = log_joint(features.row(i));
    const double norm = log_sum_exp(lj);
    auto row = proba.row(i);
    for (std::size_t c = 0; c < lj.size(); ++c) row[c] = std::exp(lj[c] - norm);
  }
  return ProbabilityMatrix(std::move(proba));
}

}  // namespace certainty

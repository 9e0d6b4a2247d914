#include "certainty/classifiers/knn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "certainty/error.hpp"
#include "certainty/kernels.hpp"

namespace certainty {

KnnClassifier KnnClassifier::fit(const Dataset& train, const LabelEncoding& enc,
                                 std::size_t k_neighbors) {
  if (k_neighbors < 1 || k_neighbors > train.n())
    throw InputError("k_neighbors must be in [1, " + std::to_string(train.n()) + "], got " +
                     std::to_string(k_neighbors));
  KnnClassifier model;
  model.k_ = k_neighbors;
  model.classes_ = enc.size();

  const std::size_t n = train.n(), m = train.m();
  model.mean_.assign(m, 0.0);
  model.scale_.assign(m, 1.0);
  for (std::size_t f = 0; f < m; ++f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += train.features(i, f);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = train.features(i, f) - mean;
      var += d * d;
    }
    var /= static_cast<double>(n);
    model.mean_[f] = mean;
    if (var > 0.0) model.scale_[f] = std::sqrt(var);
  }
  model.train_ = model.standardize(train.features);
  model.labels_.reserve(n);
  for (const auto& label : train.labels) model.labels_.push_back(enc.index(label));
  return model;
}

Matrix<double> KnnClassifier::standardize(const Matrix<double>& features) const {
  if (features.cols() != mean_.size())
    throw DimensionError("knn: expected " + std::to_string(mean_.size()) + " features, got " +
                         std::to_string(features.cols()));
  Matrix<double> out(features.rows(), features.cols());
  for (std::size_t i = 0; i < features.rows(); ++i)
    for (std::size_t f = 0; f < features.cols(); ++f)
      out(i, f) = (features(i, f) - mean_[f]) / scale_[f];
  return out;
}

ProbabilityMatrix KnnClassifier::predict_proba(const Matrix<double>& features) const {
  const auto dist = kernels::squared_distances(standardize(features), train_);
  const std::size_t nq = features.rows(), nt = train_.rows();
  Matrix<double> proba(nq, classes_);
#pragma omp parallel for schedule(static) if (nq * nt >= kernels::kParallelThreshold)
  for (std::ptrdiff_t sq = 0; sq < static_cast<std::ptrdiff_t>(nq); ++sq) {
    const auto q = static_cast<std::size_t>(sq);
    auto d = dist.row(q);
    std::vector<std::size_t> order(nt);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k_), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return d[a] < d[b] || (d[a] == d[b] && a < b);
                      });
    auto row = proba.row(q);
    for (std::size_t j = 0; j < k_; ++j) row[labels_[order[j]]] += 1.0;
    for (double& v : row) v /= static_cast<double>(k_);
  }
  return ProbabilityMatrix(std::move(proba));
}

}  // namespace certainty

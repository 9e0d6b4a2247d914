#include "certainty/core_matrices.hpp"

#include <cmath>

#include "certainty/error.hpp"
#include "certainty/kernels.hpp"

namespace certainty {

namespace {

void require_same_shape(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2,
                        const char* what) {
  if (n1 != n2 || k1 != k2)
    throw DimensionError(std::string(what) + ": shape mismatch (" + std::to_string(n1) + "x" +
                         std::to_string(k1) + " vs " + std::to_string(n2) + "x" +
                         std::to_string(k2) + ")");
}

}  // namespace

std::size_t argmax(std::span<const double> row) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < row.size(); ++j)
    if (row[j] > row[best]) best = j;
  return best;
}

OneHotMatrix::OneHotMatrix(std::vector<std::size_t> hot, std::size_t classes)
    : hot_(std::move(hot)), classes_(classes) {
  for (std::size_t i = 0; i < hot_.size(); ++i)
    if (hot_[i] >= classes_)
      throw DimensionError("one-hot row " + std::to_string(i) + " points at column " +
                           std::to_string(hot_[i]) + " of " + std::to_string(classes_));
}

Matrix<std::int64_t> OneHotMatrix::values() const {
  Matrix<std::int64_t> out(hot_.size(), classes_);
  for (std::size_t i = 0; i < hot_.size(); ++i) out(i, hot_[i]) = 1;
  return out;
}

std::vector<std::int64_t> OneHotMatrix::column_counts() const {
  std::vector<std::int64_t> counts(classes_, 0);
  for (auto h : hot_) ++counts[h];
  return counts;
}

ProbabilityMatrix::ProbabilityMatrix(Matrix<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    auto row = values_.row(i);
    double total = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!std::isfinite(row[j]))
        throw InvalidProbabilityError(i, "non-finite probability in column " + std::to_string(j + 1));
      if (row[j] < 0.0)
        throw InvalidProbabilityError(i, "negative probability in column " + std::to_string(j + 1));
      total += row[j];
    }
    if (std::abs(total - 1.0) > kRowSumTolerance)
      throw InvalidProbabilityError(i, "probabilities sum to " + std::to_string(total) +
                                           ", expected 1");
    if (total != 1.0)
      for (double& v : row) v /= total;
  }
}

bool ProbabilityMatrix::is_one_hot() const {
  for (double v : values_.values())
    if (v != 0.0 && v != 1.0) return false;
  return true;
}

ConfusionMatrix::ConfusionMatrix(Matrix<std::int64_t> values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols()) throw DimensionError("confusion matrix must be square");
  for (auto v : values_.values()) {
    if (v < 0) throw InconsistencyError("confusion matrix has a negative entry");
    n_ += v;
  }
}

ProbabilisticConfusionMatrix::ProbabilisticConfusionMatrix(Matrix<double> values, std::int64_t n)
    : values_(std::move(values)), n_(n) {
  if (values_.rows() != values_.cols())
    throw DimensionError("probabilistic confusion matrix must be square");
  for (double v : values_.values())
    if (!(v >= 0.0)) throw InconsistencyError("probabilistic confusion matrix has a negative entry");
  const double total = sum(values_);
  if (std::abs(total - static_cast<double>(n_)) > 1e-6 * static_cast<double>(n_ > 0 ? n_ : 1))
    throw InconsistencyError("probabilistic confusion matrix mass " + std::to_string(total) +
                             " does not match n = " + std::to_string(n_));
}

GroundTruthMatrix build_ground_truth(std::span<const std::string> labels,
                                     const LabelEncoding& enc) {
  std::vector<std::size_t> hot;
  hot.reserve(labels.size());
  for (const auto& label : labels) hot.push_back(enc.index(label));
  return GroundTruthMatrix(std::move(hot), enc.size());
}

HardPredictionMatrix harden(const ProbabilityMatrix& q) {
  std::vector<std::size_t> hot(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i) hot[i] = argmax(q.row(i));
  return HardPredictionMatrix(std::move(hot), q.classes());
}

ConfusionMatrix confusion(const GroundTruthMatrix& t, const HardPredictionMatrix& p) {
  require_same_shape(t.rows(), t.classes(), p.rows(), p.classes(), "confusion");
  return ConfusionMatrix(kernels::transpose_product<std::int64_t>(t.values(), p.values()));
}

ProbabilisticConfusionMatrix probabilistic_confusion(const GroundTruthMatrix& t,
                                                     const ProbabilityMatrix& q) {
  require_same_shape(t.rows(), t.classes(), q.rows(), q.classes(), "probabilistic_confusion");
  return ProbabilisticConfusionMatrix(kernels::transpose_product<double>(t.values(), q.values()),
                                      static_cast<std::int64_t>(t.rows()));
}

SplitQ split_q(const ProbabilityMatrix& q) {
  SplitQ out{Matrix<double>(q.rows(), q.classes()), q.values()};
  for (std::size_t i = 0; i < q.rows(); ++i) {
    const std::size_t j = argmax(q.row(i));
    out.plus(i, j) = q(i, j);
    out.minus(i, j) = 0.0;
  }
  return out;
}

CertaintyDecomposition decompose(const GroundTruthMatrix& t, const ProbabilityMatrix& q) {
  require_same_shape(t.rows(), t.classes(), q.rows(), q.classes(), "decompose");
  auto parts = split_q(q);
  auto tv = t.values();
  return {kernels::transpose_product<double>(tv, parts.plus),
          kernels::transpose_product<double>(tv, parts.minus)};
}

}  // namespace certainty

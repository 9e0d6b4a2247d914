#pragma once

// Ground truth (T), hard predictions (P), probabilities (Q) and the
// confusion matrices built from them:
//
//   CM  = Tᵀ P          (integers)
//   CM* = Tᵀ Q          (reals)
//   Q   = Q⁺ + Q⁻       Q⁺ keeps each row's winning probability
//   CM* = V + U         V = Tᵀ Q⁺, U = Tᵀ Q⁻
//
// All types validate on construction and are immutable afterwards.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "certainty/labels.hpp"
#include "certainty/matrix.hpp"

namespace certainty {

// Rows of an ingested probability matrix may deviate from 1 by at most this
// much; they are then rescaled to sum to 1.
inline constexpr double kRowSumTolerance = 1e-6;

// Index of the largest entry; ties resolve to the lowest index.
std::size_t argmax(std::span<const double> row);

// n×k one-hot matrix, the shape shared by T and P.
class OneHotMatrix {
 public:
  OneHotMatrix() = default;
  // Builds from per-row hot columns; every index must be < classes.
  OneHotMatrix(std::vector<std::size_t> hot, std::size_t classes);

  std::size_t rows() const noexcept { return hot_.size(); }
  std::size_t classes() const noexcept { return classes_; }
  std::size_t hot(std::size_t row) const { return hot_.at(row); }
  const std::vector<std::size_t>& hot_columns() const noexcept { return hot_; }

  // Dense 0/1 view.
  Matrix<std::int64_t> values() const;
  std::vector<std::int64_t> column_counts() const;

  bool operator==(const OneHotMatrix&) const = default;

 private:
  std::vector<std::size_t> hot_;
  std::size_t classes_ = 0;
};

class GroundTruthMatrix : public OneHotMatrix {
 public:
  using OneHotMatrix::OneHotMatrix;
};

class HardPredictionMatrix : public OneHotMatrix {
 public:
  using OneHotMatrix::OneHotMatrix;
};

class ProbabilityMatrix {
 public:
  ProbabilityMatrix() = default;
  // Rejects negative or non-finite entries and rows whose sum lies outside
  // 1 ± kRowSumTolerance (InvalidProbabilityError carrying the row); rows
  // inside the band are renormalized.
  explicit ProbabilityMatrix(Matrix<double> values);
  ProbabilityMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : ProbabilityMatrix(Matrix<double>(rows)) {}

  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t classes() const noexcept { return values_.cols(); }
  const Matrix<double>& values() const noexcept { return values_; }
  std::span<const double> row(std::size_t i) const { return values_.row(i); }
  double operator()(std::size_t r, std::size_t c) const { return values_(r, c); }

  bool is_one_hot() const;

 private:
  Matrix<double> values_;
};

class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(Matrix<std::int64_t> values);

  const Matrix<std::int64_t>& values() const noexcept { return values_; }
  std::size_t classes() const noexcept { return values_.rows(); }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return values_(r, c); }

  Matrix<double> as_real() const { return cast<double>(values_); }

 private:
  Matrix<std::int64_t> values_;
  std::int64_t n_ = 0;
};

class ProbabilisticConfusionMatrix {
 public:
  ProbabilisticConfusionMatrix() = default;
  ProbabilisticConfusionMatrix(Matrix<double> values, std::int64_t n);

  const Matrix<double>& values() const noexcept { return values_; }
  std::size_t classes() const noexcept { return values_.rows(); }
  std::int64_t n() const noexcept { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return values_(r, c); }

 private:
  Matrix<double> values_;
  std::int64_t n_ = 0;
};

struct SplitQ {
  Matrix<double> plus;
  Matrix<double> minus;
};

struct CertaintyDecomposition {
  Matrix<double> certainty;    // V
  Matrix<double> uncertainty;  // U
};

GroundTruthMatrix build_ground_truth(std::span<const std::string> labels,
                                     const LabelEncoding& enc);

HardPredictionMatrix harden(const ProbabilityMatrix& q);

ConfusionMatrix confusion(const GroundTruthMatrix& t, const HardPredictionMatrix& p);

ProbabilisticConfusionMatrix probabilistic_confusion(const GroundTruthMatrix& t,
                                                     const ProbabilityMatrix& q);

SplitQ split_q(const ProbabilityMatrix& q);

CertaintyDecomposition decompose(const GroundTruthMatrix& t, const ProbabilityMatrix& q);

}  // namespace certainty

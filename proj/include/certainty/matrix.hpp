#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "certainty/error.hpp"

namespace certainty {

// Dense row-major matrix. Small and value-semantic; the heavy lifting
// lives in kernels.hpp.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
T sum(const Matrix<T>& m) {
  T total{};
  for (T v : m.values()) total += v;
  return total;
}

template <typename T>
T trace(const Matrix<T>& m) {
  T total{};
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) total += m(i, i);
  return total;
}

template <typename T>
std::vector<T> row_sums(const Matrix<T>& m) {
  std::vector<T> out(m.rows(), T{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (T v : m.row(i)) out[i] += v;
  return out;
}

template <typename T>
std::vector<T> col_sums(const Matrix<T>& m) {
  std::vector<T> out(m.cols(), T{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j);
  return out;
}

template <typename T>
bool all_zero(const Matrix<T>& m) {
  for (T v : m.values())
    if (v != T{}) return false;
  return true;
}

template <typename To, typename From>
Matrix<To> cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  auto src = m.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<To>(src[i]);
  return out;
}

}  // namespace certainty

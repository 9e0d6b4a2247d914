#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace certainty {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by the caller's data or arguments. The CLI maps these
// to exit status 2; anything else is an internal fault.
class InputError : public Error {
 public:
  using Error::Error;
};

class DegenerateProblemError : public InputError {
 public:
  using InputError::InputError;
};

class EncodingError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class InconsistencyError : public InputError {
 public:
  using InputError::InputError;
};

class StratificationError : public InputError {
 public:
  using InputError::InputError;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

// A probability row that is negative, non-finite or not summing to one.
// `row` is 0-based within the matrix.
class InvalidProbabilityError : public InputError {
 public:
  InvalidProbabilityError(std::size_t row, const std::string& what)
      : InputError(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

// File content that cannot be parsed. Row is 1-based (file line), column
// is the 1-based column index or a column name.
class ParseError : public InputError {
 public:
  ParseError(std::string file, std::size_t row, std::string column, const std::string& what)
      : InputError(file + ": row " + std::to_string(row) +
                   (column.empty() ? "" : ", column " + column) + ": " + what),
        file_(std::move(file)),
        row_(row),
        column_(std::move(column)) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::string file_;
  std::size_t row_;
  std::string column_;
};

// Measure evaluated on a matrix without mass.
class ZeroMassError : public Error {
 public:
  using Error::Error;
};

// The certainty ratio has no meaningful value for these inputs.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

}  // namespace certainty

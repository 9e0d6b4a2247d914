#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace certainty {

// Bijection between class labels and column indices. Classes are kept in
// lexicographic order so the mapping never depends on input row order.
class LabelEncoding {
 public:
  // Throws DegenerateProblemError on fewer than two distinct labels.
  static LabelEncoding from_labels(std::span<const std::string> labels);

  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  const std::string& label(std::size_t index) const { return classes_.at(index); }

  // Throws EncodingError naming the label when it is unknown.
  std::size_t index(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;

  bool operator==(const LabelEncoding& other) const { return classes_ == other.classes_; }

 private:
  std::vector<std::string> classes_;
  std::map<std::string, std::size_t, std::less<>> lookup_;
};

inline LabelEncoding encode_labels(std::span<const std::string> labels) {
  return LabelEncoding::from_labels(labels);
}

}  // namespace certainty

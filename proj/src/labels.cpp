#include "certainty/labels.hpp"

#include <algorithm>

#include "certainty/error.hpp"

namespace certainty {

LabelEncoding LabelEncoding::from_labels(std::span<const std::string> labels) {
  LabelEncoding enc;
  enc.classes_.assign(labels.begin(), labels.end());
  std::sort(enc.classes_.begin(), enc.classes_.end());
  enc.classes_.erase(std::unique(enc.classes_.begin(), enc.classes_.end()), enc.classes_.end());
  if (enc.classes_.size() < 2)
    throw DegenerateProblemError("need at least 2 distinct class labels, got " +
                                 std::to_string(enc.classes_.size()));
  for (std::size_t i = 0; i < enc.classes_.size(); ++i) enc.lookup_.emplace(enc.classes_[i], i);
  return enc;
}

std::optional<std::size_t> LabelEncoding::find(const std::string& label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabelEncoding::index(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw EncodingError("unknown class label '" + label + "'");
}

}  // namespace certainty

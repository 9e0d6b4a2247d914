#include "certainty/classifiers/decision_tree.hpp"

#include <algorithm>
#include <numeric>

#include "certainty/error.hpp"

namespace certainty {

namespace {

// Splits scoring within this margin of the incumbent count as ties.
constexpr double kTieTolerance = 1e-12;

double gini_mass(std::span<const std::size_t> counts) {
  std::size_t n = 0;
  double sq = 0.0;
  for (auto c : counts) {
    n += c;
    sq += static_cast<double>(c) * static_cast<double>(c);
  }
  return n ? static_cast<double>(n) - sq / static_cast<double>(n) : 0.0;
}

struct Split {
  std::size_t feature = 0;
  double threshold = 0.0;
  double score = 0.0;  // n · weighted Gini
};

class Builder {
 public:
  Builder(const Matrix<double>& x, std::span<const std::size_t> y, std::size_t classes,
          const DecisionTree::Params& params, Rng* rng)
      : x_(x), y_(y), classes_(classes), params_(params), rng_(rng) {}

  std::vector<DecisionTree::Node> build(std::vector<std::size_t> rows) {
    grow(std::move(rows), 0);
    return std::move(nodes_);
  }

 private:
  std::size_t grow(std::vector<std::size_t> rows, std::size_t depth) {
    const std::size_t id = nodes_.size();
    nodes_.emplace_back();
    {
      auto& node = nodes_.back();
      node.depth = depth;
      node.counts.assign(classes_, 0);
      for (auto r : rows) ++node.counts[y_[r]];
      node.distribution.assign(classes_, 0.0);
      for (std::size_t c = 0; c < classes_; ++c)
        node.distribution[c] =
            static_cast<double>(node.counts[c]) / static_cast<double>(rows.size());
    }
    const auto& counts = nodes_[id].counts;
    const bool pure = std::count_if(counts.begin(), counts.end(),
                                    [](std::size_t c) { return c > 0; }) <= 1;
    if (pure || (params_.max_depth && depth >= *params_.max_depth)) return id;

    auto split = best_split(rows, counts);
    if (!split) return id;

    std::vector<std::size_t> left, right;
    for (auto r : rows) (x_(r, split->feature) <= split->threshold ? left : right).push_back(r);
    rows.clear();
    rows.shrink_to_fit();

    const std::size_t l = grow(std::move(left), depth + 1);
    const std::size_t r = grow(std::move(right), depth + 1);
    auto& node = nodes_[id];
    node.feature = static_cast<std::ptrdiff_t>(split->feature);
    node.threshold = split->threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  std::vector<std::size_t> candidate_features() {
    std::vector<std::size_t> features(x_.cols());
    std::iota(features.begin(), features.end(), std::size_t{0});
    if (params_.max_features == 0 || params_.max_features >= features.size() || !rng_)
      return features;
    shuffle(std::span(features), *rng_);
    return features;
  }

  std::optional<Split> best_split(std::span<const std::size_t> rows,
                                  std::span<const std::size_t> total) {
    auto features = candidate_features();
    const std::size_t first =
        (params_.max_features == 0 || params_.max_features >= features.size() || !rng_)
            ? features.size()
            : params_.max_features;
    // Examine the drawn subset first; fall back to the rest only when none
    // of the drawn features can split this node.
    std::vector<std::size_t> head(features.begin(), features.begin() + first);
    std::vector<std::size_t> tail(features.begin() + first, features.end());
    std::sort(head.begin(), head.end());
    std::sort(tail.begin(), tail.end());
    if (auto s = search(head, rows, total)) return s;
    return search(tail, rows, total);
  }

  std::optional<Split> search(std::span<const std::size_t> features,
                              std::span<const std::size_t> rows,
                              std::span<const std::size_t> total) {
    std::optional<Split> best;
    std::vector<std::size_t> order(rows.begin(), rows.end());
    std::vector<std::size_t> left(classes_), right(classes_);
    for (auto f : features) {
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return x_(a, f) < x_(b, f); });
      std::fill(left.begin(), left.end(), 0);
      std::copy(total.begin(), total.end(), right.begin());
      for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        const auto c = y_[order[p]];
        ++left[c];
        --right[c];
        const double lo = x_(order[p], f), hi = x_(order[p + 1], f);
        if (!(lo < hi)) continue;
        const double score = gini_mass(left) + gini_mass(right);
        if (!best || score < best->score - kTieTolerance) {
          double mid = lo + (hi - lo) / 2.0;
          if (!(mid < hi)) mid = lo;
          best = Split{f, mid, score};
        }
      }
    }
    return best;
  }

  const Matrix<double>& x_;
  std::span<const std::size_t> y_;
  std::size_t classes_;
  DecisionTree::Params params_;
  Rng* rng_;
  std::vector<DecisionTree::Node> nodes_;
};

}  // namespace

double weighted_gini(std::span<const std::size_t> left, std::span<const std::size_t> right) {
  std::size_t n = 0;
  for (auto c : left) n += c;
  for (auto c : right) n += c;
  return n ? (gini_mass(left) + gini_mass(right)) / static_cast<double>(n) : 0.0;
}

DecisionTree DecisionTree::fit(const Matrix<double>& features, std::span<const std::size_t> labels,
                               std::size_t classes, std::span<const std::size_t> rows,
                               const Params& params, Rng* rng) {
  if (labels.size() != features.rows())
    throw DimensionError("decision tree: labels do not align with feature rows");
  if (rows.empty()) throw InputError("decision tree: no training rows");
  for (auto r : rows)
    if (r >= features.rows() || labels[r] >= classes)
      throw DimensionError("decision tree: training row out of range");
  DecisionTree tree;
  tree.classes_ = classes;
  tree.features_ = features.cols();
  tree.nodes_ = Builder(features, labels, classes, params, rng)
                    .build(std::vector<std::size_t>(rows.begin(), rows.end()));
  return tree;
}

DecisionTree DecisionTree::fit(const Dataset& train, const LabelEncoding& enc, const Params& params) {
  std::vector<std::size_t> y;
  y.reserve(train.n());
  for (const auto& label : train.labels) y.push_back(enc.index(label));
  std::vector<std::size_t> rows(train.n());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return fit(train.features, y, enc.size(), rows, params);
}

std::span<const double> DecisionTree::predict_row(std::span<const double> x) const {
  std::size_t id = 0;
  while (!nodes_[id].is_leaf()) {
    const auto& node = nodes_[id];
    id = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right;
  }
  return nodes_[id].distribution;
}

ProbabilityMatrix DecisionTree::predict_proba(const Matrix<double>& features) const {
  if (features.cols() != features_)
    throw DimensionError("decision tree: expected " + std::to_string(features_) +
                         " features, got " + std::to_string(features.cols()));
  Matrix<double> proba(features.rows(), classes_);
#pragma omp parallel for schedule(static) if (features.rows() >= 4096)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(features.rows()); ++si) {
    const auto i = static_cast<std::size_t>(si);
    auto leaf = predict_row(features.row(i));
    std::copy(leaf.begin(), leaf.end(), proba.row(i).begin());
  }
  return ProbabilityMatrix(std::move(proba));
}

std::size_t DecisionTree::depth() const {
  std::size_t d = 0;
  for (const auto& node : nodes_) d = std::max(d, node.depth);
  return d;
}

}  // namespace certainty

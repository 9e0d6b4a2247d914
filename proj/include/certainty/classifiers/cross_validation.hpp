#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certainty/classifiers/model.hpp"
#include "certainty/core_matrices.hpp"
#include "certainty/dataset.hpp"

namespace certainty {

struct CrossValidationPlan {
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  bool stratified = true;
};

// Fold id per instance. Each class is shuffled and dealt round-robin, the
// dealing position carrying over between classes, so every fold holds
// ⌊c/F⌋ or ⌈c/F⌉ instances of a class with c members.
// Throws StratificationError when folds < 2 or exceed the smallest class.
std::vector<std::size_t> assign_folds(const GroundTruthMatrix& truth,
                                      const CrossValidationPlan& plan);

struct CrossValidationResult {
  ProbabilityMatrix q;
  GroundTruthMatrix t;
  LabelEncoding encoding;
};

// Out-of-fold predictions pooled into one Q, row-aligned with `data`.
// Folds are fitted concurrently; fold f's model is seeded with
// mix_seed(plan.seed, f).
CrossValidationResult cross_validate(const Dataset& data, ModelKind kind,
                                     const CrossValidationPlan& plan,
                                     const ClassifierOptions& options = {});

}  // namespace certainty

#pragma once

// The six-instance, three-class running example: labels A,A,A,B,B,C and
// the probability matrix Q whose argmax gives P.

#include <string>
#include <vector>

#include "certainty/core_matrices.hpp"

namespace certainty::testing {

inline std::vector<std::string> worked_labels() { return {"A", "A", "A", "B", "B", "C"}; }

inline Matrix<double> worked_q_values() {
  return {{0.9, 0.1, 0.0}, {0.8, 0.0, 0.2}, {0.6, 0.1, 0.3},
          {0.4, 0.3, 0.3}, {0.1, 0.8, 0.1}, {0.0, 0.9, 0.1}};
}

inline ProbabilityMatrix worked_q() { return ProbabilityMatrix(worked_q_values()); }

inline GroundTruthMatrix worked_t() {
  const auto labels = worked_labels();
  return build_ground_truth(labels, encode_labels(labels));
}

}  // namespace certainty::testing

#pragma once

#include <string>
#include <vector>

#include "certainty/core_matrices.hpp"
#include "certainty/dataset.hpp"
#include "certainty/labels.hpp"

namespace certainty {

// Comma-separated features followed by a class label in the last column.
// A first row with any non-numeric feature cell is taken as the header.
// Errors name the 1-based row and the column.
Dataset load_dataset(const std::string& path);

// Ground-truth labels. Either a dataset file (labels from the last column)
// or a single-column file whose first row is a header.
std::vector<std::string> load_truth(const std::string& path);

// Class labels named by a prediction file's header, in file order.
std::vector<std::string> read_prediction_header(const std::string& path);

// One probability row per instance under a header of class labels. Columns
// are reordered to `enc`; the header must name exactly enc's classes.
ProbabilityMatrix load_predictions(const std::string& path, const LabelEncoding& enc);

}  // namespace certainty

#pragma once

// Performance measures over k×k confusion-style matrices, the accuracy
// decomposition Acc* = λv·Acc*_v + λu·Acc*_u, the probabilistic divergence
// between CM and CM*, and the certainty ratio C = φ(V) / (φ(V) + φ(U)).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "certainty/core_matrices.hpp"
#include "certainty/matrix.hpp"

namespace certainty {

// A named mapping from a non-negative k×k matrix to a scalar. Catalog
// measures return 0 on an all-zero matrix.
struct MeasureFn {
  std::string name;
  std::function<double(const Matrix<double>&)> fn;

  double operator()(const Matrix<double>& m) const { return fn(m); }
};

struct AccuracyDecomposition {
  double acc_star = 0.0;
  double lambda_v = 0.0;
  double lambda_u = 0.0;
  double acc_v = 0.0;
  double acc_u = 0.0;
};

struct LambdaWeights {
  double lambda_v = 0.0;
  double lambda_u = 0.0;
};

// trace / sum. Throws ZeroMassError on an all-zero matrix.
double accuracy(const Matrix<double>& m);

LambdaWeights lambda_weights(const Matrix<double>& v, const Matrix<double>& u);

// acc_v (acc_u) is 0 when V (U) carries no mass.
AccuracyDecomposition accuracy_decomposition(const Matrix<double>& v, const Matrix<double>& u);

// (1/n)·‖CM − CM*‖_F. Throws InconsistencyError when the two disagree on n.
double divergence(const ConfusionMatrix& cm, const ProbabilisticConfusionMatrix& cm_star);

// Returns 1 when U is all-zero. Throws UndefinedRatioError when the ratio
// has no meaning: both measure values zero with U nonzero, or a negative
// value from a signed measure.
double certainty_ratio(const MeasureFn& measure, const Matrix<double>& v, const Matrix<double>& u);

// Individual catalog measures.
namespace measure {
double accuracy(const Matrix<double>& m);
double macro_precision(const Matrix<double>& m);
double macro_recall(const Matrix<double>& m);
double macro_f_beta(const Matrix<double>& m, double beta = 1.0);
double matthews(const Matrix<double>& m);
}  // namespace measure

// accuracy, precision, recall, f1, mcc.
const std::vector<MeasureFn>& builtin_measures();
// Throws InputError for an unknown name. "f<beta>" (e.g. f2, f0.5) builds
// an F_beta measure on the fly.
MeasureFn find_measure(const std::string& name);

struct MeasureValues {
  double cm = 0.0;
  double cm_star = 0.0;
  double v = 0.0;
  double u = 0.0;
  std::optional<double> certainty_ratio;  // empty when undefined
};

MeasureValues evaluate_measure(const MeasureFn& measure, const ConfusionMatrix& cm,
                               const ProbabilisticConfusionMatrix& cm_star,
                               const CertaintyDecomposition& parts);

// Everything derived from one (T, Q) pair.
struct CertaintyReport {
  ConfusionMatrix cm;
  ProbabilisticConfusionMatrix cm_star;
  CertaintyDecomposition parts;
  double accuracy = 0.0;  // on CM
  AccuracyDecomposition decomposition;
  double divergence = 0.0;
  // Accuracy-based; empty when both Acc*_v and Acc*_u are zero.
  std::optional<double> certainty_ratio;
};

CertaintyReport evaluate(const GroundTruthMatrix& t, const ProbabilityMatrix& q);

}  // namespace certainty

#include "certainty/measures.hpp"

#include <cmath>
#include <cstdlib>

#include "certainty/error.hpp"

namespace certainty {

namespace {

void require_square_pair(const Matrix<double>& a, const Matrix<double>& b, const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionError(std::string(what) + ": expected two k×k matrices of equal size");
}

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

double accuracy(const Matrix<double>& m) {
  const double total = sum(m);
  if (!(total > 0.0)) throw ZeroMassError("accuracy of a matrix without mass");
  return trace(m) / total;
}

LambdaWeights lambda_weights(const Matrix<double>& v, const Matrix<double>& u) {
  require_square_pair(v, u, "lambda_weights");
  const double sv = sum(v), su = sum(u);
  const double total = sv + su;
  if (!(total > 0.0)) throw ZeroMassError("lambda weights of matrices without mass");
  return {sv / total, su / total};
}

AccuracyDecomposition accuracy_decomposition(const Matrix<double>& v, const Matrix<double>& u) {
  const auto [lv, lu] = lambda_weights(v, u);
  AccuracyDecomposition d;
  d.lambda_v = lv;
  d.lambda_u = lu;
  d.acc_v = safe_ratio(trace(v), sum(v));
  d.acc_u = safe_ratio(trace(u), sum(u));
  d.acc_star = (trace(v) + trace(u)) / (sum(v) + sum(u));
  return d;
}

double divergence(const ConfusionMatrix& cm, const ProbabilisticConfusionMatrix& cm_star) {
  if (cm.classes() != cm_star.classes())
    throw DimensionError("divergence: class counts differ");
  if (cm.n() != cm_star.n())
    throw InconsistencyError("divergence: CM has n = " + std::to_string(cm.n()) +
                             " but CM* has n = " + std::to_string(cm_star.n()));
  if (cm.n() == 0) throw ZeroMassError("divergence over zero instances");
  double acc = 0.0;
  for (std::size_t i = 0; i < cm.classes(); ++i)
    for (std::size_t j = 0; j < cm.classes(); ++j) {
      const double d = static_cast<double>(cm(i, j)) - cm_star(i, j);
      acc += d * d;
    }
  return std::sqrt(acc) / static_cast<double>(cm.n());
}

double certainty_ratio(const MeasureFn& measure, const Matrix<double>& v, const Matrix<double>& u) {
  require_square_pair(v, u, "certainty_ratio");
  if (!(sum(v) + sum(u) > 0.0)) throw ZeroMassError("certainty ratio of matrices without mass");
  if (all_zero(u)) return 1.0;
  const double mv = measure(v);
  const double mu = measure(u);
  if (mv < 0.0 || mu < 0.0)
    throw UndefinedRatioError("certainty ratio undefined for negative " + measure.name +
                              " values (V: " + std::to_string(mv) + ", U: " + std::to_string(mu) +
                              ")");
  if (mv + mu == 0.0)
    throw UndefinedRatioError("certainty ratio undefined: " + measure.name +
                              " is zero on both V and U");
  return mv / (mv + mu);
}

namespace measure {

double accuracy(const Matrix<double>& m) { return safe_ratio(trace(m), sum(m)); }

double macro_precision(const Matrix<double>& m) {
  if (m.rows() == 0) return 0.0;
  const auto cols = col_sums(m);
  double acc = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) acc += safe_ratio(m(j, j), cols[j]);
  return acc / static_cast<double>(m.cols());
}

double macro_recall(const Matrix<double>& m) {
  if (m.rows() == 0) return 0.0;
  const auto rows = row_sums(m);
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) acc += safe_ratio(m(i, i), rows[i]);
  return acc / static_cast<double>(m.rows());
}

double macro_f_beta(const Matrix<double>& m, double beta) {
  if (m.rows() == 0) return 0.0;
  const auto rows = row_sums(m);
  const auto cols = col_sums(m);
  const double b2 = beta * beta;
  double acc = 0.0;
  for (std::size_t c = 0; c < m.rows(); ++c) {
    const double p = safe_ratio(m(c, c), cols[c]);
    const double r = safe_ratio(m(c, c), rows[c]);
    acc += safe_ratio((1.0 + b2) * p * r, b2 * p + r);
  }
  return acc / static_cast<double>(m.rows());
}

// Multiclass MCC from marginals: (c·s − Σ p_k t_k) / √((s² − Σ p_k²)(s² − Σ t_k²)).
double matthews(const Matrix<double>& m) {
  const auto truth = row_sums(m);
  const auto pred = col_sums(m);
  const double s = sum(m), c = trace(m);
  double pt = 0.0, pp = 0.0, tt = 0.0;
  for (std::size_t k = 0; k < truth.size(); ++k) {
    pt += pred[k] * truth[k];
    pp += pred[k] * pred[k];
    tt += truth[k] * truth[k];
  }
  const double den = (s * s - pp) * (s * s - tt);
  if (!(den > 0.0)) return 0.0;
  return (c * s - pt) / std::sqrt(den);
}

}  // namespace measure

const std::vector<MeasureFn>& builtin_measures() {
  static const std::vector<MeasureFn> catalog{
      {"accuracy", measure::accuracy},
      {"precision", measure::macro_precision},
      {"recall", measure::macro_recall},
      {"f1", [](const Matrix<double>& m) { return measure::macro_f_beta(m, 1.0); }},
      {"mcc", measure::matthews},
  };
  return catalog;
}

MeasureFn find_measure(const std::string& name) {
  for (const auto& m : builtin_measures())
    if (m.name == name) return m;
  if (name.size() > 1 && name[0] == 'f') {
    char* end = nullptr;
    const double beta = std::strtod(name.c_str() + 1, &end);
    if (end && *end == '\0' && beta > 0.0 && std::isfinite(beta))
      return {name, [beta](const Matrix<double>& m) { return measure::macro_f_beta(m, beta); }};
  }
  throw InputError("unknown measure '" + name + "'");
}

MeasureValues evaluate_measure(const MeasureFn& measure, const ConfusionMatrix& cm,
                               const ProbabilisticConfusionMatrix& cm_star,
                               const CertaintyDecomposition& parts) {
  MeasureValues out;
  out.cm = measure(cm.as_real());
  out.cm_star = measure(cm_star.values());
  out.v = measure(parts.certainty);
  out.u = measure(parts.uncertainty);
  try {
    out.certainty_ratio = certainty_ratio(measure, parts.certainty, parts.uncertainty);
  } catch (const UndefinedRatioError&) {
    out.certainty_ratio.reset();
  }
  return out;
}

CertaintyReport evaluate(const GroundTruthMatrix& t, const ProbabilityMatrix& q) {
  CertaintyReport r;
  r.cm = confusion(t, harden(q));
  r.cm_star = probabilistic_confusion(t, q);
  r.parts = decompose(t, q);
  r.accuracy = accuracy(r.cm.as_real());
  r.decomposition = accuracy_decomposition(r.parts.certainty, r.parts.uncertainty);
  r.divergence = divergence(r.cm, r.cm_star);
  try {
    r.certainty_ratio =
        certainty_ratio(builtin_measures().front(), r.parts.certainty, r.parts.uncertainty);
  } catch (const UndefinedRatioError&) {
    r.certainty_ratio.reset();
  }
  return r;
}

}  // namespace certainty

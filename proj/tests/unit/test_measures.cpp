#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "certainty/measures.hpp"
#include "support/generators.hpp"
#include "support/worked_example.hpp"

namespace certainty {
namespace {

struct Worked {
  ConfusionMatrix cm = confusion(testing::worked_t(), harden(testing::worked_q()));
  ProbabilisticConfusionMatrix cm_star =
      probabilistic_confusion(testing::worked_t(), testing::worked_q());
  CertaintyDecomposition parts = decompose(testing::worked_t(), testing::worked_q());
};

const MeasureFn& accuracy_measure() { return builtin_measures().front(); }

TEST(Accuracy, WorkedExample) {
  const Worked w;
  EXPECT_NEAR(accuracy(w.cm.as_real()), 4.0 / 6.0, 1e-12);
  EXPECT_NEAR(accuracy(w.cm_star.values()), 3.5 / 6.0, 1e-12);
}

TEST(Accuracy, IdentityAndZeroMass) {
  EXPECT_DOUBLE_EQ(accuracy(Matrix<double>{{1, 0}, {0, 1}}), 1.0);
  EXPECT_THROW(accuracy(Matrix<double>(3, 3)), ZeroMassError);
  EXPECT_EQ(measure::accuracy(Matrix<double>(3, 3)), 0.0);
}

TEST(Accuracy, ScaleInvariant) {
  const Worked w;
  const auto& m = w.cm_star.values();
  for (double c : {1e-3, 0.5, 7.0, 1e6}) {
    Matrix<double> scaled = m;
    for (auto& v : scaled.values()) v *= c;
    EXPECT_NEAR(accuracy(scaled), accuracy(m), 1e-12) << "scale " << c;
  }
}

TEST(LambdaWeights, WorkedExample) {
  const Worked w;
  const auto [lv, lu] = lambda_weights(w.parts.certainty, w.parts.uncertainty);
  EXPECT_NEAR(lv, 4.4 / 6.0, 1e-12);
  EXPECT_NEAR(lu, 1.6 / 6.0, 1e-12);
}

TEST(LambdaWeights, ZeroUncertainty) {
  const auto [lv, lu] = lambda_weights(Matrix<double>{{2, 1}, {0, 3}}, Matrix<double>(2, 2));
  EXPECT_EQ(lv, 1.0);
  EXPECT_EQ(lu, 0.0);
  EXPECT_THROW(lambda_weights(Matrix<double>(2, 2), Matrix<double>(2, 2)), ZeroMassError);
}

TEST(LambdaWeights, MatchesScalarSums) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix<double> v(4, 4), u(4, 4);
    double sv = 0.0, su = 0.0;
    for (auto& x : v.values()) sv += (x = d(rng));
    for (auto& x : u.values()) su += (x = d(rng));
    const auto [lv, lu] = lambda_weights(v, u);
    EXPECT_NEAR(lv, sv / (sv + su), 1e-12);
    EXPECT_NEAR(lu, su / (sv + su), 1e-12);
    EXPECT_NEAR(lv + lu, 1.0, 1e-12);
  }
}

TEST(AccuracyDecomposition, WorkedExample) {
  const Worked w;
  const auto d = accuracy_decomposition(w.parts.certainty, w.parts.uncertainty);
  EXPECT_NEAR(d.acc_v, 3.1 / 4.4, 1e-12);
  EXPECT_NEAR(d.acc_u, 0.4 / 1.6, 1e-12);
  EXPECT_NEAR(d.acc_star, 3.5 / 6.0, 1e-12);
  EXPECT_NEAR(d.lambda_v * d.acc_v + d.lambda_u * d.acc_u, d.acc_star, 1e-12);
}

TEST(AccuracyDecomposition, PerfectConfidentClassifier) {
  const auto d = accuracy_decomposition(Matrix<double>{{3, 0, 0}, {0, 2, 0}, {0, 0, 1}},
                                        Matrix<double>(3, 3));
  EXPECT_EQ(d.acc_v, 1.0);
  EXPECT_EQ(d.acc_u, 0.0);
  EXPECT_EQ(d.acc_star, 1.0);
}

TEST(AccuracyDecomposition, AgreesWithAccuracyOfCmStar) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = testing::random_instance(rng, 20, 3, 3);
    while (inst.n != 20) inst = testing::random_instance(rng, 20, 3, 3);
    const ProbabilityMatrix q(inst.q);
    const auto t = testing::truth_of(inst);
    const auto parts = decompose(t, q);
    const auto d = accuracy_decomposition(parts.certainty, parts.uncertainty);
    const auto star = testing::oracle_cm_star(inst.truth, q.values());
    EXPECT_NEAR(d.acc_star, trace(star) / sum(star), 1e-12);
  }
}

TEST(Divergence, WorkedExample) {
  const Worked w;
  EXPECT_NEAR(divergence(w.cm, w.cm_star), std::sqrt(1.22) / 6.0, 1e-12);
}

TEST(Divergence, ZeroWhenEqualAndInconsistentN) {
  const ConfusionMatrix cm(Matrix<std::int64_t>{{2, 1}, {0, 3}});
  EXPECT_EQ(divergence(cm, ProbabilisticConfusionMatrix(cm.as_real(), 6)), 0.0);
  const ConfusionMatrix other(Matrix<std::int64_t>{{2, 1}, {0, 4}});
  EXPECT_THROW(divergence(other, ProbabilisticConfusionMatrix(cm.as_real(), 6)),
               InconsistencyError);
}

// Opposite per-instance residuals within one true class cancel in CM − CM*,
// so d = 0 does not imply a one-hot Q.
TEST(Divergence, CanVanishWithoutOneHotQ) {
  const GroundTruthMatrix t({0, 0}, 2);
  const ProbabilityMatrix q({{0.6, 0.4}, {0.4, 0.6}});
  EXPECT_FALSE(q.is_one_hot());
  EXPECT_EQ(divergence(confusion(t, harden(q)), probabilistic_confusion(t, q)), 0.0);
}

TEST(Divergence, MatchesElementwiseLoop) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng, 40, 2, 5);
    const ProbabilityMatrix q(inst.q);
    const auto t = testing::truth_of(inst);
    std::vector<std::size_t> pred(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) pred[i] = testing::oracle_argmax(q.row(i));
    const auto cm = testing::oracle_confusion(inst.truth, pred, inst.k);
    const auto star = testing::oracle_cm_star(inst.truth, q.values());
    double acc = 0.0;
    for (std::size_t i = 0; i < inst.k; ++i)
      for (std::size_t j = 0; j < inst.k; ++j)
        acc += std::pow(static_cast<double>(cm(i, j)) - star(i, j), 2);
    const double expected = std::sqrt(acc) / static_cast<double>(inst.n);
    EXPECT_NEAR(divergence(confusion(t, harden(q)), probabilistic_confusion(t, q)), expected, 1e-12);
  }
}

TEST(CertaintyRatio, WorkedExample) {
  const Worked w;
  const double cr = certainty_ratio(accuracy_measure(), w.parts.certainty, w.parts.uncertainty);
  const double av = 3.1 / 4.4;
  EXPECT_NEAR(cr, av / (av + 0.25), 1e-12);
  EXPECT_NEAR(cr, 0.738, 5e-4);
}

TEST(CertaintyRatio, NoUncertaintyIsOne) {
  EXPECT_EQ(certainty_ratio(accuracy_measure(), Matrix<double>{{2, 1}, {1, 2}}, Matrix<double>(2, 2)),
            1.0);
}

TEST(CertaintyRatio, AllUncertainIsZero) {
  EXPECT_EQ(certainty_ratio(accuracy_measure(), Matrix<double>(2, 2),
                            Matrix<double>{{0.3, 0.1}, {0.2, 0.4}}),
            0.0);
}

TEST(CertaintyRatio, UndefinedWhenBothMeasuresVanish) {
  // V and U carry mass only off the diagonal.
  const Matrix<double> v{{0, 1}, {1, 0}}, u{{0, 0.5}, {0.5, 0}};
  EXPECT_THROW(certainty_ratio(accuracy_measure(), v, u), UndefinedRatioError);
  EXPECT_THROW(certainty_ratio(accuracy_measure(), Matrix<double>(2, 2), Matrix<double>(2, 2)),
               ZeroMassError);
}

TEST(CertaintyRatio, NegativeSignedMeasureIsUndefined) {
  const auto mcc = find_measure("mcc");
  const Matrix<double> v{{0, 3}, {3, 0}}, u{{1, 0}, {0, 1}};
  ASSERT_LT(mcc(v), 0.0);
  EXPECT_THROW(certainty_ratio(mcc, v, u), UndefinedRatioError);
}

TEST(BuiltinMeasures, CatalogNames) {
  std::vector<std::string> names;
  for (const auto& m : builtin_measures()) names.push_back(m.name);
  EXPECT_EQ(names, (std::vector<std::string>{"accuracy", "precision", "recall", "f1", "mcc"}));
  EXPECT_EQ(find_measure("f2").name, "f2");
  EXPECT_THROW(find_measure("auc"), InputError);
  EXPECT_THROW(find_measure("f-1"), InputError);
}

TEST(BuiltinMeasures, WorkedConfusionMatrix) {
  const Worked w;
  const auto cm = w.cm.as_real();
  EXPECT_NEAR(find_measure("accuracy")(cm), 4.0 / 6.0, 1e-12);
  // Frozen from an independent multiclass-MCC implementation.
  EXPECT_NEAR(find_measure("mcc")(cm), 0.42640143271122083, 1e-12);
  EXPECT_NEAR(find_measure("mcc")(cm), testing::oracle_mcc(cm), 1e-12);
  EXPECT_NEAR(find_measure("precision")(cm), 5.0 / 12.0, 1e-12);
  EXPECT_NEAR(find_measure("recall")(cm), 0.5, 1e-12);
  EXPECT_NEAR(find_measure("f1")(cm), 0.4523809523809524, 1e-12);
}

TEST(BuiltinMeasures, DiagonalMatrix) {
  const Matrix<double> diag{{4, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  for (const auto& m : builtin_measures()) EXPECT_NEAR(m(diag), 1.0, 1e-12) << m.name;
}

TEST(BuiltinMeasures, ZeroMatrixIsZero) {
  for (const auto& m : builtin_measures()) EXPECT_EQ(m(Matrix<double>(3, 3)), 0.0) << m.name;
}

TEST(BuiltinMeasures, MccMatchesDefinitionOnRandomMatrices) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + trial % 5;
    Matrix<double> m(k, k);
    for (auto& v : m.values()) v = d(rng);
    EXPECT_NEAR(measure::matthews(m), testing::oracle_mcc(m), 1e-9);
  }
}

TEST(BuiltinMeasures, FBetaLimits) {
  const Matrix<double> m{{5, 1}, {2, 2}};
  // β → 0 approaches precision; large β approaches recall.
  EXPECT_NEAR(measure::macro_f_beta(m, 1e-6), measure::macro_precision(m), 1e-9);
  EXPECT_NEAR(measure::macro_f_beta(m, 1e6), measure::macro_recall(m), 1e-9);
}

TEST(MeasuresProperty, IdentitiesAndBounds) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = testing::random_instance(rng, 100, 2, 10);
    const ProbabilityMatrix q(inst.q);
    const auto t = testing::truth_of(inst);
    const auto r = evaluate(t, q);
    const auto& d = r.decomposition;
    ASSERT_NEAR(d.lambda_v + d.lambda_u, 1.0, 1e-12);
    ASSERT_NEAR(d.lambda_v * d.acc_v + d.lambda_u * d.acc_u, d.acc_star, 1e-9);
    ASSERT_NEAR(d.acc_star, accuracy(r.cm_star.values()), 1e-9);
    for (double x : {d.acc_star, d.lambda_v, d.lambda_u, d.acc_v, d.acc_u}) {
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, 1.0);
    }
    const double k = static_cast<double>(inst.k);
    ASSERT_GE(r.divergence, 0.0);
    ASSERT_LE(r.divergence, std::sqrt(1.0 - 1.0 / k) + 1e-12);
    if (q.is_one_hot()) ASSERT_EQ(r.divergence, 0.0);
    for (const auto& m : builtin_measures()) {
      try {
        const double cr = certainty_ratio(m, r.parts.certainty, r.parts.uncertainty);
        ASSERT_GE(cr, 0.0) << m.name;
        ASSERT_LE(cr, 1.0) << m.name;
      } catch (const UndefinedRatioError&) {
        const double mv = m(r.parts.certainty), mu = m(r.parts.uncertainty);
        ASSERT_FALSE(all_zero(r.parts.uncertainty));
        ASSERT_TRUE(mv < 0.0 || mu < 0.0 || (mv == 0.0 && mu == 0.0)) << m.name;
      }
    }
  }
}

}  // namespace
}  // namespace certainty

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "certainty/classifiers/naive_bayes.hpp"

namespace certainty {
namespace {

Dataset one_dimensional(std::vector<double> xs, std::vector<std::string> labels) {
  Dataset d;
  d.features = Matrix<double>(xs.size(), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) d.features(i, 0) = xs[i];
  d.labels = std::move(labels);
  return d;
}

TEST(LogSumExp, StableForLargeMagnitudes) {
  const std::vector<double> big{1000.0, 1000.0};
  EXPECT_NEAR(log_sum_exp(big), 1000.0 + std::log(2.0), 1e-12);
  const std::vector<double> small{-1000.0, -1001.0};
  EXPECT_NEAR(log_sum_exp(small), -1000.0 + std::log1p(std::exp(-1.0)), 1e-12);
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> none{-inf, -inf};
  EXPECT_EQ(log_sum_exp(none), -inf);
}

TEST(GaussianNb, WellSeparatedClasses) {
  const auto train = one_dimensional({0.0, 0.2, -0.2, 10.0, 10.2, 9.8}, {"A", "A", "A", "B", "B", "B"});
  const auto model = GaussianNaiveBayes::fit(train, train.encoding());
  EXPECT_GT(model.predict_proba(Matrix<double>{{0.0}})(0, 0), 0.99);
  EXPECT_GT(model.predict_proba(Matrix<double>{{10.0}})(0, 1), 0.99);
}

TEST(GaussianNb, SymmetricMidpoint) {
  const auto train = one_dimensional({-1.0, -2.0, -3.0, 1.0, 2.0, 3.0}, {"A", "A", "A", "B", "B", "B"});
  const auto q = GaussianNaiveBayes::fit(train, train.encoding()).predict_proba(Matrix<double>{{0.0}});
  EXPECT_NEAR(q(0, 0), 0.5, 1e-6);
  EXPECT_NEAR(q(0, 1), 0.5, 1e-6);
}

TEST(GaussianNb, ZeroVarianceIsFloored) {
  const auto train = one_dimensional({1.0, 1.0, 5.0, 6.0}, {"A", "A", "B", "B"});
  const auto model = GaussianNaiveBayes::fit(train, train.encoding());
  EXPECT_GT(model.variances()(0, 0), 0.0);
  const auto q = model.predict_proba(Matrix<double>{{1.0}, {5.5}, {100.0}});
  for (std::size_t i = 0; i < q.rows(); ++i) EXPECT_NEAR(q(i, 0) + q(i, 1), 1.0, 1e-12);
  EXPECT_EQ(q(0, 0), 1.0);
}

TEST(GaussianNb, AbsentClassGetsZeroProbability) {
  const auto train = one_dimensional({0.0, 1.0, 2.0, 3.0}, {"A", "A", "B", "B"});
  const std::vector<std::string> classes{"A", "B", "C"};
  const auto q = GaussianNaiveBayes::fit(train, encode_labels(classes)).predict_proba(Matrix<double>{{1.5}});
  EXPECT_EQ(q(0, 2), 0.0);
  EXPECT_NEAR(q(0, 0) + q(0, 1), 1.0, 1e-12);
}

// Posterior from the Gaussian density formula, multiplied out directly.
TEST(GaussianNb, MatchesDirectDensityOracle) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise(0.0, 1.0);
  Dataset train;
  train.features = Matrix<double>(30, 2);
  const char* names[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < 30; ++i) {
    const auto c = i % 3;
    train.features(i, 0) = static_cast<double>(c) + noise(rng);
    train.features(i, 1) = 0.5 * static_cast<double>(c) + 0.7 * noise(rng);
    train.labels.push_back(names[c]);
  }
  const auto enc = train.encoding();
  const auto q = GaussianNaiveBayes::fit(train, enc).predict_proba(Matrix<double>{{0.3, 0.1}, {1.7, 1.2}, {-1.0, 2.0}});

  std::vector<double> prior(3), mean0(3), mean1(3), var0(3), var1(3);
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < 30; ++i)
      if (train.labels[i] == names[c]) rows.push_back(i);
    prior[c] = static_cast<double>(rows.size()) / 30.0;
    for (auto i : rows) {
      mean0[c] += train.features(i, 0) / static_cast<double>(rows.size());
      mean1[c] += train.features(i, 1) / static_cast<double>(rows.size());
    }
    for (auto i : rows) {
      var0[c] += std::pow(train.features(i, 0) - mean0[c], 2) / static_cast<double>(rows.size());
      var1[c] += std::pow(train.features(i, 1) - mean1[c], 2) / static_cast<double>(rows.size());
    }
  }
  auto density = [](double x, double mu, double var) {
    return std::exp(-(x - mu) * (x - mu) / (2 * var)) / std::sqrt(2 * std::numbers::pi * var);
  };
  const double queries[3][2] = {{0.3, 0.1}, {1.7, 1.2}, {-1.0, 2.0}};
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<double> joint(3);
    double total = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
      joint[c] = prior[c] * density(queries[r][0], mean0[c], var0[c]) *
                 density(queries[r][1], mean1[c], var1[c]);
      total += joint[c];
    }
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_NEAR(q(r, enc.index(names[c])), joint[c] / total, 1e-12) << "row " << r;
  }
}

}  // namespace
}  // namespace certainty

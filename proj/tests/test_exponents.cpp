#include <gtest/gtest.h>

#include <cmath>

#include "cpair/exponents.hpp"

using namespace cpair;
using namespace cpair::analysis;

namespace {

double H(double x) { return binary_entropy(x); }

}  // namespace

TEST(StarPoint, Examples) {
  const auto one = delta_gamma_star(1.0);
  EXPECT_EQ(one.delta_star, 0.0);
  EXPECT_EQ(one.gamma_star, 0.0);
  const auto zero = delta_gamma_star(0.0);
  EXPECT_EQ(zero.delta_star, 0.5);
  EXPECT_EQ(zero.gamma_star, 0.5);
  const auto half = delta_gamma_star(0.5);
  EXPECT_NEAR(half.delta_star, 0.1100, 1e-3);
  EXPECT_NEAR(half.gamma_star, 0.1958, 2e-3);
  EXPECT_NEAR(2 * half.delta_star, 0.22, 2e-3);
  EXPECT_THROW((void)delta_gamma_star(1.1), std::domain_error);
}

TEST(ThetaUniform, Examples) {
  EXPECT_NEAR(theta_uniform(0.25, 0.0).theta, 0.25, 1e-12);
  EXPECT_NEAR(theta_uniform(0.3, 0.5).theta, 0.6, 1e-12);
  const auto r = theta_uniform(1e-4, 0.25);
  EXPECT_NEAR(r.theta / 1e-4, 4.0 / 3.0, 0.01 * 4.0 / 3.0);
  EXPECT_THROW((void)theta_uniform(0.3, 0.6), std::domain_error);
  EXPECT_THROW((void)theta_uniform(-0.1, 0.2), std::domain_error);
}

TEST(ThetaUniform, RegimeAndDelta) {
  const auto below = theta_uniform(0.25, 0.1);
  EXPECT_EQ(below.regime, Regime::BelowGammaStar);
  EXPECT_DOUBLE_EQ(below.delta, below.delta_star);
  const auto above = theta_uniform(0.25, 0.4);
  EXPECT_EQ(above.regime, Regime::AboveGammaStar);
  EXPECT_NEAR(above.delta, (1 - std::sqrt(0.2)) / 2, 1e-12);
  EXPECT_NEAR(above.delta, 0.2764, 1e-4);
}

TEST(ThetaUniform, ValueAtGammaZeroIsLambda) {
  for (int t = 0; t <= 100; ++t) {
    const double lambda = t / 100.0;
    EXPECT_NEAR(theta_uniform(lambda, 0.0).theta, lambda, 1e-12);
  }
}

TEST(ThetaUniform, ContinuousAtGammaStar) {
  for (int t = 1; t < 100; ++t) {
    const double lambda = t / 100.0;
    const auto star = delta_gamma_star(lambda);
    const double g = star.gamma_star;
    const double lower = (1 - g) * (1 - H((star.delta_star - g / 2) / (1 - g)));
    const double upper = 2 * lambda + H(g) - 1;
    EXPECT_NEAR(lower, upper, 1e-9) << lambda;
  }
}

TEST(ThetaUniform, NondecreasingInGammaAndBounded) {
  for (double lambda : {0.01, 0.1, 0.25, 0.5, 0.75, 1.0}) {
    double previous = -1.0;
    for (int t = 0; t < 200; ++t) {
      const double gamma = 0.5 * t / 199.0;
      const auto r = theta_uniform(lambda, gamma);
      EXPECT_GE(r.theta, previous - 1e-12);
      EXPECT_GE(r.theta, 0.0);
      EXPECT_LE(r.theta, 2.0);
      EXPECT_GE(r.delta, 0.0);
      EXPECT_LE(r.delta, 0.5);
      EXPECT_EQ(r.regime == Regime::AboveGammaStar, gamma > r.gamma_star);
      // Never beats the lower bound.
      EXPECT_GE(r.theta, lower_bound_exponent(lambda, gamma) - 1e-9);
      previous = r.theta;
    }
  }
}

TEST(ExpectedPairs, Examples) {
  EXPECT_NEAR(expected_pairs_exponent(0.5, 0.5), 1.0, 1e-12);
  EXPECT_EQ(expected_pairs_exponent(0.3, 0.0), 0.0);
  EXPECT_NEAR(expected_pairs_exponent(0.25, 0.25), 0.3113, 1e-4);
}

TEST(LowerBound, Examples) {
  EXPECT_NEAR(lower_bound_exponent(0.3, 0.0), 0.3, 1e-12);
  EXPECT_NEAR(lower_bound_exponent(0.25, 0.4), 0.47095, 1e-4);
  EXPECT_NEAR(lower_bound_exponent(0.1, 0.2), 0.125, 1e-12);
  EXPECT_THROW((void)lower_bound_exponent(0.1, 1.0), std::domain_error);
}

TEST(PairWeightProb, Examples) {
  EXPECT_NEAR(log_pair_weight_prob(DistributionModel::uniform(), 0.5).log2(), 0.0, 1e-12);
  for (int t = 0; t <= 20; ++t) {
    const double eta = t / 20.0;
    EXPECT_NEAR(log_pair_weight_prob(DistributionModel::bernoulli(0.5), eta).log2(),
                log_pair_weight_prob(DistributionModel::uniform(), eta).log2(), 1e-12);
  }
  EXPECT_NEAR(log_pair_weight_prob(DistributionModel::fixed_weight(0.3), 0.42).log2(), 0.0, 1e-9);
  EXPECT_TRUE(log_pair_weight_prob(DistributionModel::fixed_weight(0.3), 0.7).is_impossible());
  EXPECT_TRUE(log_pair_weight_prob(DistributionModel::fixed_weight(0.0), 0.1).is_impossible());
  EXPECT_TRUE(log_pair_weight_prob(DistributionModel::bernoulli(1.0), 0.1).is_impossible());
  EXPECT_THROW((void)log_pair_weight_prob(DistributionModel::uniform(), 1.5), std::domain_error);
}

TEST(PairWeightProb, FixedWeightMatchesFiniteBinomialRatio) {
  // (1/d) log2 [C(fd, e) C((1-f)d, e) / C(d, fd)] with e = eta d / 2, d = 2000.
  constexpr double d = 2000.0;
  const double f = 0.3;
  for (double eta : {0.1, 0.2, 0.42, 0.5}) {
    const double e = eta * d / 2;
    const double exact =
        (log2_binomial(f * d, e) + log2_binomial((1 - f) * d, e) - log2_binomial(d, f * d)) / d;
    EXPECT_NEAR(log_pair_weight_prob(DistributionModel::fixed_weight(f), eta).log2(), exact, 5e-3);
  }
}

TEST(PairWeightProb, PoissonUsesItsMean) {
  for (double eta : {0.0, 0.2, 0.4}) {
    EXPECT_EQ(log_pair_weight_prob(DistributionModel::poisson(0.3), eta),
              log_pair_weight_prob(DistributionModel::fixed_weight(0.3), eta));
  }
  EXPECT_TRUE(theta_distribution(0.2, 0.1, DistributionModel::poisson(0.3)).approximate);
  EXPECT_FALSE(theta_distribution(0.2, 0.1, DistributionModel::fixed_weight(0.3)).approximate);
}

TEST(Epsilon, UniformExamples) {
  for (double lambda : {0.1, 0.3, 0.7}) {
    EXPECT_NEAR(epsilon_distribution(lambda, 0.5, DistributionModel::uniform()), 2 * lambda, 1e-9);
    // Analytic optimum for uniform lists: eps = 2 lambda + 2 (H(delta) - 1).
    for (double delta : {0.05, 0.15, 0.3, 0.45}) {
      EXPECT_NEAR(epsilon_distribution(lambda, delta, DistributionModel::uniform()),
                  2 * lambda + 2 * (H(delta) - 1), 1e-7);
    }
  }
}

TEST(Epsilon, UniformRuntimeAtDeltaStarMatchesTheta) {
  const DistributionExponents uniform(DistributionModel::uniform());
  for (double lambda : {0.1, 0.25, 0.5}) {
    const auto star = delta_gamma_star(lambda);
    for (double gamma : {0.0, 0.05, 0.1}) {
      if (gamma > star.gamma_star) continue;
      const double a = (1 - gamma) * (1 - H((star.delta_star - gamma / 2) / (1 - gamma)));
      const double value =
          a + std::max({0.0, lambda + H(star.delta_star) - 1, uniform.epsilon(lambda, star.delta_star)});
      EXPECT_NEAR(value, theta_uniform(lambda, gamma).theta, 1e-6);
    }
  }
}

TEST(ThetaDistribution, UniformMatchesClosedForm) {
  const DistributionExponents uniform(DistributionModel::uniform());
  for (int i = 1; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double lambda = i / 10.0;
      const double gamma = 0.05 * j;
      const auto numeric = uniform.theta(lambda, gamma);
      EXPECT_NEAR(numeric.theta, theta_uniform(lambda, gamma).theta, 1e-6) << lambda << ' ' << gamma;
      EXPECT_GE(numeric.delta, gamma / 2 - 1e-12);
      EXPECT_LE(numeric.delta, 0.5);
    }
  }
}

TEST(ThetaDistribution, HalfWeightEqualsUniform) {
  const DistributionExponents fixed(DistributionModel::fixed_weight(0.5));
  for (double lambda : {0.1, 0.4, 0.8}) {
    for (double gamma : {0.0, 0.2, 0.45}) {
      EXPECT_NEAR(fixed.theta(lambda, gamma).theta, theta_uniform(lambda, gamma).theta, 1e-6);
    }
  }
}

TEST(ThetaDistribution, LowWeightIsSuperlinearAtGammaZero) {
  for (double lambda : {0.1, 0.2, 0.4}) {
    EXPECT_GT(theta_distribution(lambda, 0.0, DistributionModel::fixed_weight(0.1)).theta,
              lambda + 1e-3);
  }
}

TEST(ThetaDistribution, RejectsBadArguments) {
  const DistributionExponents uniform(DistributionModel::uniform());
  EXPECT_THROW((void)uniform.theta(0.2, 0.6), std::domain_error);
  EXPECT_THROW((void)uniform.epsilon(0.2, 0.7), std::domain_error);
  EXPECT_EQ(uniform.model(), DistributionModel::uniform());
}

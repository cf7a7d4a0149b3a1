#include <gtest/gtest.h>

#include <cmath>

#include "cpair/exponents.hpp"
#include "cpair/probability.hpp"
#include "cpair/tuning.hpp"

using namespace cpair;

TEST(ChooseParams, GammaZeroUsesDeltaStar) {
  const auto params = choose_params(64, 10.0 / 64, 0.0);
  EXPECT_DOUBLE_EQ(params.delta, analysis::delta_gamma_star(10.0 / 64).delta_star);
  EXPECT_EQ(analysis::theta_uniform(10.0 / 64, 0.0).regime, analysis::Regime::BelowGammaStar);
}

TEST(ChooseParams, AboveGammaStarUsesDeltaMin) {
  const auto params = choose_params(200, 0.25, 0.4);
  EXPECT_NEAR(params.delta, (1 - std::sqrt(0.2)) / 2, 1e-12);
  EXPECT_NEAR(params.delta, 0.2764, 1e-4);
}

TEST(ChooseParams, DepthDefaultsAndCaps) {
  // lambda d / log^2 d = 10 / 36 rounds down to 0; depth is still 1.
  EXPECT_EQ(choose_params(64, 10.0 / 64, 0.1).depth, 1u);
  // 0.9 * 4096 / 144 = 25.6, capped at 8.
  EXPECT_EQ(choose_params(4096, 0.9, 0.0).depth, 8u);
  PracticalSettings cap;
  cap.max_depth = 3;
  EXPECT_EQ(choose_params(4096, 0.9, 0.0, cap).depth, 3u);
  EXPECT_EQ(choose_params(3, 1.0, 0.0).depth, 1u);
}

TEST(ChooseParams, BranchingIsDOverQ) {
  const auto params = choose_params(64, 10.0 / 64, 8.0 / 64);
  const auto q = analysis::pair_survival_prob_q(64, 8.0 / 64, params.delta);
  const double expected = std::round(64.0 / q.probability());
  EXPECT_EQ(static_cast<double>(params.branching), std::min(expected, double(1 << 22)));
  EXPECT_EQ(params.permutations, 4u);
  EXPECT_EQ(params.naive_threshold, 32u);
  EXPECT_TRUE(params.stop_on_first);
  PracticalSettings small;
  small.max_branching = 10;
  EXPECT_EQ(choose_params(64, 10.0 / 64, 16.0 / 64, small).branching, 10u);
}

TEST(ChooseParams, NonExactStrategiesUseTheirOwnQ) {
  PracticalSettings dev;
  dev.strategy = Strategy::deviation(1);
  const auto exact = choose_params(64, 10.0 / 64, 8.0 / 64);
  const auto loose = choose_params(64, 10.0 / 64, 8.0 / 64, dev);
  EXPECT_LT(loose.branching, exact.branching);
  EXPECT_EQ(loose.strategy, Strategy::deviation(1));
}

TEST(ChooseParams, OverridesWin) {
  PracticalSettings s;
  s.depth = 2;
  s.branching = 7;
  s.permutations = 1;
  s.delta = 0.3;
  s.naive_threshold = 5;
  s.stop_on_first = false;
  s.tune = true;
  const auto p = choose_params(64, 0.2, 0.1, s);
  EXPECT_EQ(p.depth, 2u);
  EXPECT_EQ(p.branching, 7u);
  EXPECT_EQ(p.permutations, 1u);
  EXPECT_DOUBLE_EQ(p.delta, 0.3);
  EXPECT_EQ(p.naive_threshold, 5u);
  EXPECT_FALSE(p.stop_on_first);
}

TEST(ChooseParams, Errors) {
  PracticalSettings s;
  s.delta = 0.05;  // below gamma/2 for gamma = 0.25: q = 0
  EXPECT_THROW((void)choose_params(64, 0.2, 0.25, s), std::domain_error);
  EXPECT_THROW((void)choose_params(64, 0.2, 0.6), std::invalid_argument);
  EXPECT_THROW((void)choose_params(64, 1.5, 0.1), std::invalid_argument);
  EXPECT_THROW((void)choose_params(0, 0.2, 0.1), std::invalid_argument);
}

TEST(Tune, PicksTheCheapestCandidate) {
  PracticalSettings s;
  s.tune = true;
  s.strategy = Strategy::at_most();
  const auto tuned = choose_params(64, 15.0 / 64, 8.0 / 64, s);
  const double n = std::exp2(15.0);
  const double best =
      estimate_search_cost(64, n, 8.0 / 64, tuned.depth, tuned.delta, s.strategy, tuned.branching);
  const auto plain = choose_params(64, 15.0 / 64, 8.0 / 64, PracticalSettings{.strategy = s.strategy});
  EXPECT_LE(best, estimate_search_cost(64, n, 8.0 / 64, plain.depth, plain.delta, s.strategy,
                                       plain.branching));
  // Cheaper than the n^2 scan by a wide margin at this size.
  EXPECT_LT(best, n * n / 4);
}

TEST(CostModel, InfeasibleIsInfinite) {
  EXPECT_TRUE(std::isinf(estimate_search_cost(64, 1024, 0.5, 1, 0.1, Strategy::exact(), 10)));
  EXPECT_GT(estimate_search_cost(64, 1024, 0.1, 1, 0.3, Strategy::exact(), 10), 0.0);
}

#pragma once

// Asymptotic runtime exponents. Lists have size n = 2^(lambda d); a result
// theta means runtime 2^(theta d (1 + o(1))).

#include <vector>

#include "cpair/distribution.hpp"
#include "cpair/probability.hpp"

namespace cpair::analysis {

enum class Regime { BelowGammaStar, AboveGammaStar };

[[nodiscard]] const char* regime_name(Regime regime) noexcept;

struct StarPoint {
  double delta_star = 0.0;  // H^-1(1 - lambda)
  double gamma_star = 0.0;  // 2 delta* (1 - delta*)
};

struct ExponentResult {
  double theta = 0.0;
  double delta = 0.0;
  Regime regime = Regime::BelowGammaStar;
  double delta_star = 0.0;
  double gamma_star = 0.0;
  bool approximate = false;  // set for PoissonWeight, which is evaluated at its mean
};

[[nodiscard]] StarPoint delta_gamma_star(double lambda);

// Closed-form exponent for uniform lists:
//   gamma <= gamma*: (1-gamma)(1 - H((delta* - gamma/2)/(1-gamma))), delta = delta*
//   gamma >  gamma*: 2 lambda + H(gamma) - 1, delta = (1 - sqrt(1 - 2 gamma))/2
[[nodiscard]] ExponentResult theta_uniform(double lambda, double gamma);

// max(0, 2 lambda + H(gamma) - 1): exponent of the expected number of pairs at
// distance gamma d.
[[nodiscard]] double expected_pairs_exponent(double lambda, double gamma);

// max(lambda / (1 - gamma), expected_pairs_exponent). Throws for gamma = 1.
[[nodiscard]] double lower_bound_exponent(double lambda, double gamma);

// (1/d) log Pr[wt(v + w) = eta d] for v, w drawn from the model, as d -> inf.
[[nodiscard]] LogProb log_pair_weight_prob(const DistributionModel& model, double eta);

// Exponent of the expected leaf work:
//   2 lambda - min_eta [(1-eta)(1 - H((delta - eta/2)/(1-eta))) - log p_eta].
[[nodiscard]] double epsilon_distribution(double lambda, double delta,
                                          const DistributionModel& model);

// Minimises over delta in [gamma/2, 1/2]
//   A(delta) + max(0, lambda + H(delta) - 1, epsilon(delta)),
// A(delta) = (1-gamma)(1 - H((delta - gamma/2)/(1-gamma))): the three terms of
// the runtime bound q^-r, 2^(lambda d) p^(r-1) / q^r, 2^(eps d) / q^r per d.
[[nodiscard]] ExponentResult theta_distribution(double lambda, double gamma,
                                                const DistributionModel& model);

// Batch evaluator for one model. The inner minimisation over eta does not
// depend on lambda or gamma, so it is tabulated once on a delta lattice at
// construction; the object is immutable afterwards.
class DistributionExponents {
 public:
  static constexpr int kGridPoints = 1000;

  explicit DistributionExponents(const DistributionModel& model);

  [[nodiscard]] const DistributionModel& model() const noexcept { return model_; }
  [[nodiscard]] double epsilon(double lambda, double delta) const;
  [[nodiscard]] ExponentResult theta(double lambda, double gamma) const;

 private:
  // min over eta of the bracket in epsilon; +inf when no eta is feasible.
  [[nodiscard]] double min_bracket(double delta) const;
  [[nodiscard]] double tabulated_or_fresh(double delta) const;

  DistributionModel model_;
  std::vector<double> lattice_;  // min_bracket(j / (2 kGridPoints)), j = 0..kGridPoints
};

}  // namespace cpair::analysis

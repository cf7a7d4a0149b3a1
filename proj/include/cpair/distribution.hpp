#pragma once

#include <string>
#include <string_view>

namespace cpair {

// Input-list distribution. `parameter` is the weight fraction for FixedWeight,
// the coordinate bias for BernoulliCoordinates and the mean weight fraction
// for PoissonWeight; it is ignored for Uniform.
struct DistributionModel {
  enum class Kind { Uniform, FixedWeight, BernoulliCoordinates, PoissonWeight };

  Kind kind = Kind::Uniform;
  double parameter = 0.5;

  static DistributionModel uniform() noexcept { return {Kind::Uniform, 0.5}; }
  static DistributionModel fixed_weight(double eta);
  static DistributionModel bernoulli(double mu);
  static DistributionModel poisson(double mean_fraction);

  // "uniform", "fixed:<eta>", "bernoulli:<mu>", "poisson:<f>" with a
  // shortest round-trip decimal for the parameter.
  [[nodiscard]] std::string label() const;
  static DistributionModel parse(std::string_view text);

  friend bool operator==(const DistributionModel&, const DistributionModel&) = default;
};

}  // namespace cpair

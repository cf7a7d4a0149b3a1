#include "cpair/params.hpp"

#include <cmath>
#include <stdexcept>

#include "cpair/distribution.hpp"
#include "cpair/text.hpp"

namespace cpair {

std::string Strategy::label() const {
  switch (kind) {
    case Kind::Exact:
      return "exact";
    case Kind::Deviation:
      return "dev:" + std::to_string(eps);
    case Kind::AtMost:
      return "atmost";
  }
  return "exact";
}

Strategy Strategy::parse(std::string_view text) {
  if (text == "exact") return exact();
  if (text == "atmost") return at_most();
  if (text.starts_with("dev:")) {
    if (auto eps = text::parse_u64(text.substr(4))) return deviation(*eps);
  }
  throw std::invalid_argument("unknown strategy '" + std::string(text) +
                              "' (expected exact, dev:<eps> or atmost)");
}

void SolverParams::validate() const {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (branching < 1) throw std::invalid_argument("branching must be at least 1");
  if (permutations < 1) throw std::invalid_argument("permutations must be at least 1");
  if (!(delta >= 0.0 && delta <= 0.5)) throw std::invalid_argument("delta must lie in [0, 1/2]");
}

std::size_t delta_count_for(double delta, std::size_t width) noexcept {
  return static_cast<std::size_t>(std::llround(delta * static_cast<double>(width)));
}

namespace {

double checked_fraction(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
  return value;
}

}  // namespace

DistributionModel DistributionModel::fixed_weight(double eta) {
  return {Kind::FixedWeight, checked_fraction(eta, "fixed weight fraction")};
}

DistributionModel DistributionModel::bernoulli(double mu) {
  return {Kind::BernoulliCoordinates, checked_fraction(mu, "bernoulli bias")};
}

DistributionModel DistributionModel::poisson(double mean_fraction) {
  return {Kind::PoissonWeight, checked_fraction(mean_fraction, "poisson mean fraction")};
}

std::string DistributionModel::label() const {
  switch (kind) {
    case Kind::Uniform:
      return "uniform";
    case Kind::FixedWeight:
      return "fixed:" + text::format_double(parameter);
    case Kind::BernoulliCoordinates:
      return "bernoulli:" + text::format_double(parameter);
    case Kind::PoissonWeight:
      return "poisson:" + text::format_double(parameter);
  }
  return "uniform";
}

DistributionModel DistributionModel::parse(std::string_view text) {
  if (text == "uniform") return uniform();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto name = text.substr(0, colon);
    const auto value = text::parse_double(text.substr(colon + 1));
    if (value) {
      if (name == "fixed") return fixed_weight(*value);
      if (name == "bernoulli") return bernoulli(*value);
      if (name == "poisson") return poisson(*value);
    }
  }
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected uniform, fixed:<eta>, bernoulli:<mu>, poisson:<f>)");
}

}  // namespace cpair

#include "cpair/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace cpair::analysis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-12;

void require_range(double x, double lo, double hi, const char* what) {
  if (!(x >= lo && x <= hi)) {
    throw std::domain_error(std::string(what) + " out of range: " + std::to_string(x));
  }
}

// Golden-section search for a minimum of f on [lo, hi].
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

// Entropy with the argument clamped into [0, 1]; callers guarantee it is
// within rounding of the interval.
double entropy_clamped(double x) { return binary_entropy(std::clamp(x, 0.0, 1.0)); }

// (1-eta)(1 - H((delta - eta/2)/(1-eta))), +inf when the weight split is
// infeasible.
double bucket_term(double eta, double delta) {
  if (eta >= 1.0 - kSlack) return delta >= 0.5 - kSlack ? 0.0 : kInf;
  const double x = (delta - eta / 2.0) / (1.0 - eta);
  if (x < -kSlack || x > 1.0 + kSlack) return kInf;
  return (1.0 - eta) * (1.0 - entropy_clamped(x));
}

double fixed_weight_rate(double f, double eta) {
  if (f <= 0.0 || f >= 1.0) return eta <= kSlack ? 0.0 : -kInf;
  const double half = eta / 2.0;
  if (half > std::min(f, 1.0 - f) + kSlack) return -kInf;
  return f * entropy_clamped(half / f) + (1.0 - f) * entropy_clamped(half / (1.0 - f)) -
         binary_entropy(f);
}

}  // namespace

const char* regime_name(Regime regime) noexcept {
  return regime == Regime::AboveGammaStar ? "above" : "below";
}

StarPoint delta_gamma_star(double lambda) {
  require_range(lambda, 0.0, 1.0, "lambda");
  const double ds = inverse_entropy(1.0 - lambda);
  return {ds, 2.0 * ds * (1.0 - ds)};
}

ExponentResult theta_uniform(double lambda, double gamma) {
  require_range(gamma, 0.0, 0.5, "gamma");
  const StarPoint star = delta_gamma_star(lambda);
  ExponentResult result;
  result.delta_star = star.delta_star;
  result.gamma_star = star.gamma_star;
  if (gamma <= star.gamma_star) {
    const double x = (star.delta_star - gamma / 2.0) / (1.0 - gamma);
    result.theta = (1.0 - gamma) * (1.0 - entropy_clamped(x));
    result.delta = star.delta_star;
    result.regime = Regime::BelowGammaStar;
  } else {
    result.theta = 2.0 * lambda + binary_entropy(gamma) - 1.0;
    result.delta = (1.0 - std::sqrt(1.0 - 2.0 * gamma)) / 2.0;
    result.regime = Regime::AboveGammaStar;
  }
  return result;
}

double expected_pairs_exponent(double lambda, double gamma) {
  require_range(lambda, 0.0, 1.0, "lambda");
  require_range(gamma, 0.0, 1.0, "gamma");
  return std::max(0.0, 2.0 * lambda + binary_entropy(gamma) - 1.0);
}

double lower_bound_exponent(double lambda, double gamma) {
  require_range(gamma, 0.0, 1.0, "gamma");
  if (gamma == 1.0) throw std::domain_error("lower bound undefined at gamma = 1");
  return std::max(lambda / (1.0 - gamma), expected_pairs_exponent(lambda, gamma));
}

LogProb log_pair_weight_prob(const DistributionModel& model, double eta) {
  require_range(eta, 0.0, 1.0, "eta");
  double rate = -kInf;
  switch (model.kind) {
    case DistributionModel::Kind::Uniform:
      rate = binary_entropy(eta) - 1.0;
      break;
    case DistributionModel::Kind::BernoulliCoordinates: {
      const double tau = 2.0 * model.parameter * (1.0 - model.parameter);
      if (tau <= 0.0) {
        rate = eta <= kSlack ? 0.0 : -kInf;
      } else {
        rate = binary_entropy(eta) + eta * std::log2(tau) + (1.0 - eta) * std::log2(1.0 - tau);
      }
      break;
    }
    case DistributionModel::Kind::FixedWeight:
    case DistributionModel::Kind::PoissonWeight:
      rate = fixed_weight_rate(model.parameter, eta);
      break;
  }
  if (rate == -kInf) return LogProb::impossible();
  return LogProb::from_log2(std::min(rate, 0.0));
}

DistributionExponents::DistributionExponents(const DistributionModel& model) : model_(model) {
  lattice_.resize(kGridPoints + 1);
  for (int j = 0; j <= kGridPoints; ++j) {
    lattice_[static_cast<std::size_t>(j)] = min_bracket(j / (2.0 * kGridPoints));
  }
}

double DistributionExponents::min_bracket(double delta) const {
  auto objective = [&](double eta) {
    const double bucket = bucket_term(eta, delta);
    if (bucket == kInf) return kInf;
    const LogProb weight = log_pair_weight_prob(model_, std::clamp(eta, 0.0, 1.0));
    return weight.is_impossible() ? kInf : bucket - weight.log2();
  };
  int best = 0;
  double best_value = kInf;
  for (int j = 0; j <= kGridPoints; ++j) {
    const double value = objective(static_cast<double>(j) / kGridPoints);
    if (value < best_value) {
      best_value = value;
      best = j;
    }
  }
  if (best_value == kInf) return kInf;
  const double lo = std::max(0, best - 1) / static_cast<double>(kGridPoints);
  const double hi = std::min(kGridPoints, best + 1) / static_cast<double>(kGridPoints);
  const auto refined = golden_min(objective, lo, hi, 1e-9);
  return std::min(best_value, refined.second);
}

double DistributionExponents::tabulated_or_fresh(double delta) const {
  const double scaled = delta * 2.0 * kGridPoints;
  const double nearest = std::round(scaled);
  if (std::abs(scaled - nearest) < 1e-9 && nearest >= 0 && nearest <= kGridPoints) {
    return lattice_[static_cast<std::size_t>(nearest)];
  }
  return min_bracket(delta);
}

double DistributionExponents::epsilon(double lambda, double delta) const {
  require_range(lambda, 0.0, 1.0, "lambda");
  require_range(delta, 0.0, 0.5, "delta");
  return 2.0 * lambda - tabulated_or_fresh(delta);
}

ExponentResult DistributionExponents::theta(double lambda, double gamma) const {
  require_range(lambda, 0.0, 1.0, "lambda");
  require_range(gamma, 0.0, 0.5, "gamma");
  const StarPoint star = delta_gamma_star(lambda);

  auto exponent_at = [&](double delta, double bracket) {
    const double a = (1.0 - gamma) * (1.0 - entropy_clamped((delta - gamma / 2.0) / (1.0 - gamma)));
    const double level_scan = lambda + binary_entropy(delta) - 1.0;
    const double leaves = 2.0 * lambda - bracket;
    return a + std::max({0.0, level_scan, leaves});
  };

  const double lo = gamma / 2.0;
  const double hi = 0.5;
  // Candidate deltas: the lower endpoint plus every lattice point above it.
  std::vector<std::pair<double, double>> candidates;
  candidates.emplace_back(lo, exponent_at(lo, tabulated_or_fresh(lo)));
  for (int j = 0; j <= kGridPoints; ++j) {
    const double delta = j / (2.0 * kGridPoints);
    if (delta <= lo) continue;
    candidates.emplace_back(delta, exponent_at(delta, lattice_[static_cast<std::size_t>(j)]));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].second < candidates[best].second) best = i;
  }
  double best_delta = candidates[best].first;
  double best_value = candidates[best].second;
  const double bracket_lo = candidates[best == 0 ? 0 : best - 1].first;
  const double bracket_hi = candidates[std::min(best + 1, candidates.size() - 1)].first;
  if (bracket_hi > bracket_lo) {
    const auto refined = golden_min(
        [&](double delta) { return exponent_at(delta, min_bracket(delta)); }, bracket_lo,
        bracket_hi, 1e-10);
    if (refined.second < best_value) {
      best_delta = refined.first;
      best_value = refined.second;
    }
  }
  (void)hi;

  ExponentResult result;
  result.theta = best_value;
  result.delta = best_delta;
  result.delta_star = star.delta_star;
  result.gamma_star = star.gamma_star;
  result.regime = gamma > star.gamma_star ? Regime::AboveGammaStar : Regime::BelowGammaStar;
  result.approximate = model_.kind == DistributionModel::Kind::PoissonWeight;
  return result;
}

double epsilon_distribution(double lambda, double delta, const DistributionModel& model) {
  return DistributionExponents(model).epsilon(lambda, delta);
}

ExponentResult theta_distribution(double lambda, double gamma, const DistributionModel& model) {
  return DistributionExponents(model).theta(lambda, gamma);
}

}  // namespace cpair::analysis

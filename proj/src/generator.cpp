#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "cpair/instance.hpp"

namespace cpair {

double Instance::lambda() const noexcept {
  return d == 0 || n == 0 ? 0.0 : std::log2(static_cast<double>(n)) / static_cast<double>(d);
}

double Instance::gamma() const noexcept {
  return d == 0 ? 0.0 : static_cast<double>(gamma_count) / static_cast<double>(d);
}

void Instance::validate() const {
  if (d < 1 || d > BitVector::kMaxDim) throw std::invalid_argument("dimension out of range");
  if (n < 1) throw std::invalid_argument("lists must be nonempty");
  if (gamma_count > d) throw std::invalid_argument("gamma exceeds dimension");
  if (list1.size() != n || list2.size() != n) {
    throw std::invalid_argument("list lengths differ from n");
  }
  for (const auto* list : {&list1, &list2}) {
    for (const auto& v : *list) {
      if (v.dim() != d || !v.is_canonical()) {
        throw std::invalid_argument("vector with wrong dimension or padding");
      }
    }
  }
  if (planted) {
    if (planted->i >= n || planted->j >= n) throw std::invalid_argument("planted index out of range");
    if (distance(list1[planted->i], list2[planted->j]) != gamma_count) {
      throw std::invalid_argument("planted pair is not at distance gamma");
    }
  }
}

BitVector sample_from_model(RandomSource& rng, std::size_t d, const DistributionModel& model) {
  switch (model.kind) {
    case DistributionModel::Kind::Uniform:
      return random_vector(rng, d);
    case DistributionModel::Kind::FixedWeight: {
      const auto w = static_cast<std::size_t>(std::llround(model.parameter * static_cast<double>(d)));
      return random_weight_vector(rng, d, std::min(w, d));
    }
    case DistributionModel::Kind::BernoulliCoordinates: {
      BitVector v(d);
      for (std::size_t j = 0; j < d; ++j) v.set(j, rng.bernoulli(model.parameter));
      return v;
    }
    case DistributionModel::Kind::PoissonWeight: {
      const double mean = model.parameter * static_cast<double>(d);
      std::size_t w = 0;
      if (mean > 0.0) {
        std::poisson_distribution<long long> draw(mean);
        w = static_cast<std::size_t>(std::clamp<long long>(draw(rng), 0, static_cast<long long>(d)));
      }
      return random_weight_vector(rng, d, w);
    }
  }
  return BitVector(d);
}

Instance gen_instance(std::size_t d, std::size_t n, std::size_t gamma_count,
                      const DistributionModel& model, std::uint64_t seed) {
  if (d < 1 || d > BitVector::kMaxDim) throw std::invalid_argument("dimension out of range");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (gamma_count > d) throw std::invalid_argument("gamma must not exceed d");

  Instance inst;
  inst.d = d;
  inst.n = n;
  inst.gamma_count = gamma_count;
  inst.model = model;
  inst.seed = seed;

  const RandomSource root(seed);
  RandomSource first = root.split(1);
  RandomSource second = root.split(2);
  RandomSource plant = root.split(3);

  inst.list1.reserve(n);
  inst.list2.reserve(n);
  for (std::size_t t = 0; t < n; ++t) inst.list1.push_back(sample_from_model(first, d, model));
  for (std::size_t t = 0; t < n; ++t) inst.list2.push_back(sample_from_model(second, d, model));

  const PlantedPair pair{plant.uniform_below(n), plant.uniform_below(n)};
  inst.list2[pair.j] = inst.list1[pair.i] ^ random_weight_vector(plant, d, gamma_count);
  inst.planted = pair;
  return inst;
}

}  // namespace cpair

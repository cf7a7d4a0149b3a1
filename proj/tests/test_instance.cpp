#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>

#include "cpair/instance.hpp"

using namespace cpair;

namespace {

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  write_instance(inst, out);
  return out.str();
}

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

InstanceParseError parse_error(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const InstanceParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return {InstanceParseError::Kind::Inconsistent, 0, ""};
}

const std::string kSmall =
    "CPINST 1 d=8 n=1 gamma=4 planted=0,0 model=uniform seed=3\n"
    "f0\n"
    "\n"
    "aa\n";

}  // namespace

TEST(Generator, PlantedPairAtGamma) {
  for (const auto& model : {DistributionModel::uniform(), DistributionModel::fixed_weight(0.2),
                            DistributionModel::bernoulli(0.3), DistributionModel::poisson(0.25)}) {
    for (std::size_t g : {0u, 1u, 9u, 50u}) {
      const auto inst = gen_instance(50, 40, g, model, 77 + g);
      ASSERT_TRUE(inst.planted);
      EXPECT_EQ(distance(inst.list1[inst.planted->i], inst.list2[inst.planted->j]), g);
      EXPECT_NO_THROW(inst.validate());
      EXPECT_EQ(inst.list1.size(), 40u);
      EXPECT_EQ(inst.model, model);
    }
  }
}

TEST(Generator, GammaZeroDuplicatesX) {
  const auto inst = gen_instance(64, 16, 0, DistributionModel::uniform(), 5);
  EXPECT_EQ(inst.list1[inst.planted->i], inst.list2[inst.planted->j]);
}

TEST(Generator, DeterministicSerialization) {
  const auto a = gen_instance(64, 1024, 16, DistributionModel::uniform(), 42);
  const auto b = gen_instance(64, 1024, 16, DistributionModel::uniform(), 42);
  EXPECT_EQ(serialize(a), serialize(b));
  EXPECT_NE(serialize(a), serialize(gen_instance(64, 1024, 16, DistributionModel::uniform(), 43)));
}

TEST(Generator, RejectsBadParameters) {
  EXPECT_THROW((void)gen_instance(8, 4, 9, DistributionModel::uniform(), 1), std::invalid_argument);
  EXPECT_THROW((void)gen_instance(8, 0, 1, DistributionModel::uniform(), 1), std::invalid_argument);
  EXPECT_THROW((void)gen_instance(0, 4, 0, DistributionModel::uniform(), 1), std::invalid_argument);
  EXPECT_THROW((void)DistributionModel::fixed_weight(1.5), std::invalid_argument);
}

TEST(Generator, UniformCrossDistanceConcentrates) {
  const std::size_t d = 128;
  const auto inst = gen_instance(d, 10000, 10, DistributionModel::uniform(), 8);
  double total = 0.0;
  for (std::size_t t = 0; t < 10000; ++t) total += static_cast<double>(distance(inst.list1[t], inst.list2[(t * 7 + 3) % 10000]));
  EXPECT_NEAR(total / 10000.0, d / 2.0, 3.0 * std::sqrt(double(d)) / 2.0);
}

TEST(Generator, FixedWeightListsHaveExactWeight) {
  const auto inst = gen_instance(90, 300, 12, DistributionModel::fixed_weight(0.3), 4);
  for (std::size_t t = 0; t < inst.n; ++t) {
    EXPECT_EQ(weight(inst.list1[t]), 27u);
    if (t != inst.planted->j) EXPECT_EQ(weight(inst.list2[t]), 27u);
  }
}

TEST(Generator, ModelMeansAreRoughlyRight) {
  const auto bern = gen_instance(200, 500, 0, DistributionModel::bernoulli(0.1), 6);
  const auto pois = gen_instance(200, 500, 0, DistributionModel::poisson(0.2), 6);
  double wb = 0.0;
  double wp = 0.0;
  for (std::size_t t = 0; t < 500; ++t) {
    wb += static_cast<double>(weight(bern.list1[t]));
    wp += static_cast<double>(weight(pois.list1[t]));
  }
  EXPECT_NEAR(wb / 500.0, 20.0, 1.0);
  EXPECT_NEAR(wp / 500.0, 40.0, 1.5);
}

TEST(InstanceIo, RoundTrip) {
  for (const auto& model : {DistributionModel::uniform(), DistributionModel::fixed_weight(0.125),
                            DistributionModel::bernoulli(0.3), DistributionModel::poisson(0.1)}) {
    for (std::size_t d : {1u, 3u, 64u, 65u, 130u}) {
      const auto inst = gen_instance(d, 7, d / 2, model, d);
      EXPECT_EQ(parse(serialize(inst)), inst);
    }
  }
  auto none = gen_instance(20, 3, 2, DistributionModel::uniform(), 1);
  none.planted.reset();
  EXPECT_EQ(parse(serialize(none)), none);
}

TEST(InstanceIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "cpair_io_roundtrip.txt";
  const auto inst = gen_instance(33, 5, 4, DistributionModel::uniform(), 2);
  save_instance(inst, path);
  EXPECT_EQ(load_instance(path), inst);
  std::filesystem::remove(path);
  EXPECT_THROW((void)load_instance(path), std::runtime_error);
}

TEST(InstanceIo, HandWrittenExample) {
  const auto inst = parse(kSmall);
  EXPECT_EQ(inst.list1[0].to_string(), "11110000");
  EXPECT_EQ(inst.list2[0].to_string(), "01010101");
  EXPECT_EQ(distance(inst.list1[0], inst.list2[0]), 4u);
  EXPECT_EQ(encode_hex(inst.list1[0]), "f0");
  EXPECT_EQ(serialize(inst), kSmall);
}

TEST(InstanceIo, HexLayoutIsLsbFirst) {
  BitVector v(70);
  v.set(0, true);
  v.set(64, true);
  v.set(69, true);
  EXPECT_EQ(encode_hex(v), "1000000000000000" "12");
  EXPECT_EQ(decode_hex("100000000000000012", 70), v);
}

TEST(InstanceIo, ParseErrors) {
  using Kind = InstanceParseError::Kind;
  const auto truncated = parse_error(kSmall.substr(0, kSmall.size() - 3));
  EXPECT_EQ(truncated.kind(), Kind::WrongCount);
  EXPECT_EQ(truncated.line(), 4u);

  EXPECT_EQ(parse_error("").kind(), Kind::MalformedHeader);
  EXPECT_EQ(parse_error("CPINST 2 d=8 n=1 gamma=4 planted=none model=uniform seed=3\n").kind(),
            Kind::MalformedHeader);
  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=9 planted=none model=uniform seed=3\n").kind(),
            Kind::MalformedHeader);
  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=4 planted=1,0 model=uniform seed=3\n").kind(),
            Kind::MalformedHeader);
  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=4 planted=none model=gauss seed=3\n").kind(),
            Kind::MalformedHeader);

  const auto bad_hex = parse_error(
      "CPINST 1 d=8 n=1 gamma=4 planted=none model=uniform seed=3\nfg\n\naa\n");
  EXPECT_EQ(bad_hex.kind(), Kind::BadHex);
  EXPECT_EQ(bad_hex.line(), 2u);
  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=4 planted=none model=uniform seed=3\nF0\n\naa\n").kind(),
            Kind::BadHex);
  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=4 planted=none model=uniform seed=3\nf00\n\naa\n").kind(),
            Kind::BadHex);

  const auto padding = parse_error(
      "CPINST 1 d=6 n=1 gamma=4 planted=none model=uniform seed=3\nf0\n\n8a\n");
  EXPECT_EQ(padding.kind(), Kind::PaddingViolation);
  EXPECT_EQ(padding.line(), 4u);

  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=4 planted=none model=uniform seed=3\nf0\naa\n").kind(),
            Kind::WrongCount);
  EXPECT_EQ(parse_error(kSmall + "ff\n").kind(), Kind::WrongCount);
  EXPECT_EQ(parse_error("CPINST 1 d=8 n=1 gamma=3 planted=0,0 model=uniform seed=3\nf0\n\naa\n").kind(),
            Kind::Inconsistent);
}

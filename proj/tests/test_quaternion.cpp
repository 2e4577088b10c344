#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "quatseq/quaternion.hpp"

using namespace quatseq;

namespace {

std::vector<UnitQuat> all_units() {
  std::vector<UnitQuat> out;
  for (std::uint8_t c = 0; c < 8; ++c) out.push_back(UnitQuat::from_code(c));
  return out;
}

}  // namespace

TEST(UnitQuat, TableMatchesHamiltonProduct) {
  for (auto p : all_units()) {
    for (auto q : all_units()) {
      EXPECT_EQ(oracle::of(p * q), oracle::mul(oracle::of(p), oracle::of(q)))
          << to_string(p) << " * " << to_string(q);
    }
  }
}

TEST(UnitQuat, BasisProducts) {
  EXPECT_EQ(unit::i * unit::j, unit::k);
  EXPECT_EQ(unit::j * unit::i, unit::minus_k);
  EXPECT_EQ(unit::j * unit::k, unit::i);
  EXPECT_EQ(unit::k * unit::i, unit::j);
  for (auto q : all_units()) {
    EXPECT_EQ(unit::one * q, q);
    EXPECT_EQ(q * unit::one, q);
  }
}

TEST(UnitQuat, Associativity) {
  for (auto a : all_units())
    for (auto b : all_units())
      for (auto c : all_units()) EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(UnitQuat, ConjugationIsInverseAndAntiautomorphism) {
  for (auto p : all_units()) {
    EXPECT_EQ(p * unit_conj(p), unit::one);
    EXPECT_EQ(unit_conj(unit_conj(p)), p);
    for (auto q : all_units()) EXPECT_EQ(unit_conj(p * q), unit_conj(q) * unit_conj(p));
  }
  EXPECT_EQ(unit_conj(unit::i), unit::minus_i);
  EXPECT_EQ(unit_conj(unit::minus_one), unit::minus_one);
}

TEST(UnitQuat, Powers) {
  EXPECT_EQ(unit_pow(Axis::i, 2), unit::minus_one);
  EXPECT_EQ(unit_pow(Axis::j, -1), unit::minus_j);
  EXPECT_EQ(unit_pow(Axis::k, 4), unit::one);
  EXPECT_EQ(unit_pow(Axis::k, 0), unit::one);
  for (auto axis : {Axis::i, Axis::j, Axis::k}) {
    oracle::Q acc{1, 0, 0, 0};
    for (std::int64_t e = 0; e < 12; ++e) {
      EXPECT_EQ(oracle::of(unit_pow(axis, e)), acc);
      acc = oracle::mul(acc, oracle::of(UnitQuat{axis}));
    }
  }
}

TEST(UnitQuat, TokensRoundTrip) {
  for (auto q : all_units()) EXPECT_EQ(parse_unit(to_string(q)), q);
  EXPECT_FALSE(parse_unit("q").has_value());
  EXPECT_FALSE(parse_unit("2i").has_value());
  EXPECT_FALSE(parse_unit("").has_value());
}

TEST(Lipschitz, MultiplicationMatchesOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int n = 0; n < 1000; ++n) {
    const LipschitzQuat p{d(rng), d(rng), d(rng), d(rng)};
    const LipschitzQuat q{d(rng), d(rng), d(rng), d(rng)};
    EXPECT_EQ(oracle::of(p * q), oracle::mul(oracle::of(p), oracle::of(q)));
    EXPECT_EQ(norm2(p * q), norm2(p) * norm2(q));
    EXPECT_EQ(quat_conj(p * q), quat_conj(q) * quat_conj(p));
  }
}

TEST(Lipschitz, HandExpandedProduct) {
  const LipschitzQuat one_i{1, 1, 0, 0};
  const LipschitzQuat one_j{1, 0, 1, 0};
  EXPECT_EQ(one_i * one_j, (LipschitzQuat{1, 1, 1, 1}));
  EXPECT_EQ(embed(unit::i) * embed(unit::j), embed(unit::k));
  EXPECT_EQ(one_i + LipschitzQuat{}, one_i);
}

TEST(Lipschitz, OverflowIsReported) {
  const LipschitzQuat big{INT64_MAX, 0, 0, 0};
  EXPECT_THROW(big + LipschitzQuat::scalar(1), std::overflow_error);
  EXPECT_THROW(big * LipschitzQuat::scalar(2), std::overflow_error);
}

TEST(Lipschitz, TextForm) {
  EXPECT_EQ(to_string(LipschitzQuat{1, -1, 1, 3}), "1-i+j+3k");
  EXPECT_EQ(to_string(LipschitzQuat{}), "0");
  EXPECT_EQ(to_string(LipschitzQuat{-2, 0, 0, 0}), "-2");
  EXPECT_EQ(to_string(LipschitzQuat{0, 0, -1, 0}), "-j");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 0; n < 500; ++n) {
    const LipschitzQuat q{d(rng), d(rng), d(rng), d(rng)};
    EXPECT_EQ(parse_lipschitz(to_string(q)), q) << to_string(q);
  }
  EXPECT_FALSE(parse_lipschitz("1.5").has_value());
  EXPECT_FALSE(parse_lipschitz("i+i").has_value());
}

TEST(AxisPowerSum, VanishesUnlessMultipleOfFour) {
  for (auto axis : {Axis::i, Axis::j, Axis::k}) {
    for (std::int64_t c = 0; c <= 15; ++c) {
      for (std::int64_t m = 1; m <= 4; ++m) {
        const auto got = axis_power_sum(axis, c, m);
        EXPECT_EQ(oracle::of(got), oracle::power_sum(oracle::of(UnitQuat{axis}), c, 4 * m));
        if (c % 4 != 0) {
          EXPECT_TRUE(got.is_zero());
        } else {
          EXPECT_EQ(got, LipschitzQuat::scalar(4 * m));
        }
      }
    }
  }
  EXPECT_TRUE(axis_power_sum(Axis::i, 2, 1).is_zero());
  EXPECT_EQ(axis_power_sum(Axis::j, 4, 3), LipschitzQuat::scalar(12));
  EXPECT_TRUE(axis_power_sum(Axis::k, 3, 2).is_zero());
  EXPECT_THROW(axis_power_sum(Axis::i, 1, 0), std::invalid_argument);
}

TEST(FloatQuat, ParseAndTolerance) {
  const auto q = parse_float_quat("-0.5+0.8660254037844386i-0.5j+0.8660254037844386k");
  ASSERT_TRUE(q.has_value());
  EXPECT_NEAR(norm2(*q), 2.0, 1e-12);
  EXPECT_TRUE(approx_equal(*q, *parse_float_quat(to_string(*q)), 0.0));
  EXPECT_TRUE(approx_zero(FloatQuat{1e-10, 0, -1e-10, 0}));
  EXPECT_FALSE(approx_zero(FloatQuat{1e-8, 0, 0, 0}));
}

/*
 * Copyright 2026 The kappanet Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kappanet/abstraction.hpp"
#include "kappanet/error.hpp"
#include "kappanet/inference.hpp"
#include "support/rational_oracle.hpp"
#include "support/test_networks.hpp"

namespace kappanet {
namespace {

using testing::prob_row;

Rank tr(double p, double eps) { return translate_degree(p, Epsilon(eps)); }

std::vector<Rank> ranks(const PosteriorVector& p) {
  std::vector<Rank> out;
  for (const auto& d : p.degrees) out.push_back(d.rank());
  return out;
}

TEST(EpsilonTest, OpenUnitInterval) {
  for (double bad : {0.0, 1.0, -0.1, 2.0, std::nan("")}) {
    try {
      Epsilon e(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
  EXPECT_DOUBLE_EQ(Epsilon(0.2).value(), 0.2);
}

TEST(TranslateTest, Examples) {
  EXPECT_EQ(tr(0.8, 0.2), Rank(0));
  EXPECT_EQ(tr(0.2, 0.2), Rank(1));
  EXPECT_EQ(tr(0.0, 0.2), Rank::infinity());
  EXPECT_EQ(tr(0.0, 0.002), Rank::infinity());
  EXPECT_EQ(tr(0.04, 0.2), Rank(2));
  EXPECT_EQ(tr(1.0, 0.02), Rank(0));
}

TEST(TranslateTest, ClampsAboveOneAndRejectsNonsense) {
  EXPECT_EQ(tr(1.0 + 1e-12, 0.2), Rank(0));
  for (double bad : {-0.1, std::nan(""), std::numeric_limits<double>::infinity()}) {
    try {
      tr(bad, 0.2);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(TranslateTest, ExactPowersMapToTheirExponent) {
  for (double eps : {0.7, 0.2, 0.02, 0.002}) {
    double p = 1.0;
    for (std::uint64_t k = 0; k <= 50; ++k) {
      EXPECT_EQ(tr(p, eps), Rank(k)) << "eps=" << eps << " k=" << k;
      EXPECT_EQ(tr(std::pow(eps, static_cast<double>(k)), eps), Rank(k));
      p *= eps;
    }
  }
}

// Decimal grid points checked against exact rational arithmetic.
TEST(TranslateTest, DecimalGridMatchesRationalOracle) {
  const std::pair<double, testing::Rational> epsilons[] = {
      {0.7, testing::ratio(7, 10)},
      {0.2, testing::ratio(1, 5)},
      {0.02, testing::ratio(1, 50)},
      {0.002, testing::ratio(1, 500)}};
  for (const auto& [eps, eps_exact] : epsilons) {
    for (int i = 1; i <= 2000; ++i) {
      const double p = i / 2000.0;
      const auto expected = testing::exact_order(testing::ratio(i, 2000),
                                                 eps_exact);
      ASSERT_EQ(tr(p, eps), Rank(*expected)) << "p=" << p << " eps=" << eps;
    }
  }
}

// Closed form k = floor(log p / log eps), skipped where p is within
// rounding of a power of eps.
TEST(TranslateTest, LoopAgreesWithLogarithmAwayFromBoundaries) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> expo(-30.0, 0.0);
  for (double eps : {0.7, 0.2, 0.02, 0.002}) {
    for (int trial = 0; trial < 5000; ++trial) {
      const double p = std::pow(10.0, expo(rng));
      const double x = std::log(p) / std::log(eps);
      if (std::abs(x - std::round(x)) < 1e-9) continue;
      const auto k = static_cast<std::uint64_t>(std::floor(x));
      ASSERT_EQ(tr(p, eps), Rank(k)) << "p=" << p << " eps=" << eps;
    }
  }
}

TEST(TranslateTest, Antitone) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double eps : {0.7, 0.2, 0.02, 0.002}) {
    for (int trial = 0; trial < 2000; ++trial) {
      double a = unit(rng), b = unit(rng);
      if (a > b) std::swap(a, b);
      EXPECT_GE(tr(a, eps), tr(b, eps));
    }
  }
}

TEST(TranslateNetworkTest, ChainAtPointTwo) {
  const Network k =
      translate_network(testing::literal_chain(3), Epsilon(0.2));
  EXPECT_EQ(k.calculus(), Calculus::kKappa);
  ASSERT_TRUE(k.epsilon().has_value());
  EXPECT_DOUBLE_EQ(*k.epsilon(), 0.2);
  EXPECT_TRUE(validate_network(k).empty());
  EXPECT_EQ(k.table_for("X1")->rows[0],
            (std::vector<Degree>{Degree::kappa(0), Degree::kappa(0)}));
  EXPECT_EQ(k.table_for("X2")->rows[0],
            (std::vector<Degree>{Degree::kappa(0), Degree::kappa(1)}));
  EXPECT_EQ(k.table_for("X2")->rows[1],
            (std::vector<Degree>{Degree::kappa(1), Degree::kappa(0)}));
}

TEST(TranslateNetworkTest, ThreeValuedRowAndShiftToZero) {
  Network net(Calculus::kProbability, {{"A", {"x", "y", "z"}}},
              {{"A", {}, {prob_row({0.6, 0.3, 0.1})}}});
  EXPECT_EQ(translate_network(net, Epsilon(0.2)).table_for("A")->rows[0],
            (std::vector<Degree>{Degree::kappa(0), Degree::kappa(0),
                                 Degree::kappa(1)}));
  // At eps = 0.7 every entry is below eps, so the raw row (1, 3, 6) must
  // be shifted down to (0, 2, 5).
  EXPECT_EQ(translate_network(net, Epsilon(0.7)).table_for("A")->rows[0],
            (std::vector<Degree>{Degree::kappa(0), Degree::kappa(2),
                                 Degree::kappa(5)}));
}

TEST(TranslateNetworkTest, PreservesStructureOnRandomNetworks) {
  std::mt19937_64 rng(21);
  testing::RandomNetworkOptions opt;
  opt.max_nodes = 7;
  opt.max_values = 4;
  for (int trial = 0; trial < 60; ++trial) {
    const Network p = testing::random_network(rng, Calculus::kProbability, opt);
    for (double eps : {0.7, 0.2, 0.002}) {
      const Network k = translate_network(p, Epsilon(eps));
      EXPECT_TRUE(validate_network(k).empty());
      EXPECT_EQ(k.variables(), p.variables());
      ASSERT_EQ(k.tables().size(), p.tables().size());
      for (std::size_t t = 0; t < k.tables().size(); ++t) {
        EXPECT_EQ(k.tables()[t].parents, p.tables()[t].parents);
        EXPECT_EQ(k.tables()[t].rows.size(), p.tables()[t].rows.size());
      }
    }
  }
}

TEST(TranslateNetworkTest, KappaInputIsRejected) {
  try {
    translate_network(testing::literal_kappa_chain(2), Epsilon(0.2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(PipelineTest, C1OnTheThreeChain) {
  const Network net = testing::literal_chain(3);
  const Assignment ev = parse_assignment("X1=true");
  EXPECT_EQ(ranks(c1_pipeline(net, ev, "X3", Epsilon(0.2))),
            (std::vector<Rank>{Rank(0), Rank(0)}));
  const C1Result wide = c1_detailed(net, ev, "X3", Epsilon(0.7));
  // 0.49 < 0.68 <= 0.7 and 0.2401 < 0.32 <= 0.343.
  EXPECT_EQ(wide.raw_ranks, (std::vector<Rank>{Rank(1), Rank(3)}));
  EXPECT_EQ(ranks(wide.ranks), (std::vector<Rank>{Rank(0), Rank(2)}));
  EXPECT_EQ(ranks(c1_pipeline(net, {}, "X1", Epsilon(0.02))),
            (std::vector<Rank>{Rank(0), Rank(0)}));
}

TEST(PipelineTest, FiveChainExhibitsInformationLoss) {
  const Network net = testing::literal_chain(5);
  const Assignment ev = parse_assignment("X1=true");
  EXPECT_EQ(ranks(c2_pipeline(net, ev, "X5", Epsilon(0.2))),
            (std::vector<Rank>{Rank(0), Rank(1)}));
  EXPECT_EQ(ranks(c1_pipeline(net, ev, "X5", Epsilon(0.2))),
            (std::vector<Rank>{Rank(0), Rank(0)}));

  const DiscrepancyReport r = compare_c1_c2(net, ev, "X5", Epsilon(0.2));
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].difference, (RankDifference{}));
  EXPECT_EQ(r.records[1].difference.value, -1);  // c1 0 minus c2 1
  EXPECT_TRUE(r.orderings_agree);
  EXPECT_NEAR(r.records[0].probability, 0.5648, 1e-12);
}

TEST(PipelineTest, DeterministicNetworkHasNoDifferences) {
  Network net(Calculus::kProbability,
              {{"A", {"a", "b", "c"}}, {"B", {"x", "y"}}, {"C", {"x", "y"}}},
              {{"A", {}, {prob_row({0.0, 1.0, 0.0})}},
               {"B", {"A"},
                {prob_row({1.0, 0.0}), prob_row({0.0, 1.0}),
                 prob_row({1.0, 0.0})}},
               {"C", {"B"}, {prob_row({0.0, 1.0}), prob_row({1.0, 0.0})}}});
  for (double eps : {0.7, 0.2, 0.02, 0.002}) {
    for (const char* target : {"A", "C"}) {
      const auto r = compare_c1_c2(net, parse_assignment("B=y"), target,
                                   Epsilon(eps));
      for (const auto& rec : r.records) {
        EXPECT_TRUE(rec.difference.kind == RankDifference::Kind::kFinite
                        ? rec.difference.value == 0
                        : rec.difference.kind ==
                              RankDifference::Kind::kBothImpossible);
      }
      EXPECT_TRUE(r.orderings_agree);
    }
  }
}

TEST(PipelineTest, ImpossibleEvidencePropagates) {
  Network net(Calculus::kProbability, {{"A", {"a", "b"}}, {"B", {"a", "b"}}},
              {{"A", {}, {prob_row({1.0, 0.0})}},
               {"B", {"A"}, {prob_row({0.5, 0.5}), prob_row({0.5, 0.5})}}});
  for (int which = 0; which < 2; ++which) {
    try {
      if (which == 0) {
        c1_pipeline(net, parse_assignment("A=b"), "B", Epsilon(0.2));
      } else {
        c2_pipeline(net, parse_assignment("A=b"), "B", Epsilon(0.2));
      }
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kImpossibleEvidence);
    }
  }
}

// Re-translating the same posterior at a smaller eps never raises a rank.
TEST(PipelineTest, C1RawRanksShrinkWithEpsilon) {
  std::mt19937_64 rng(31);
  testing::RandomNetworkOptions opt;
  opt.max_nodes = 6;
  opt.max_values = 3;
  for (int trial = 0; trial < 40; ++trial) {
    const Network net =
        testing::random_network(rng, Calculus::kProbability, opt);
    const std::string target = net.variable(0).name;
    const Assignment ev = testing::random_evidence(rng, net, 0, 0.3);
    try {
      const auto a = c1_detailed(net, ev, target, Epsilon(0.2)).raw_ranks;
      const auto b = c1_detailed(net, ev, target, Epsilon(0.02)).raw_ranks;
      const auto c = c1_detailed(net, ev, target, Epsilon(0.002)).raw_ranks;
      for (std::size_t v = 0; v < a.size(); ++v) {
        EXPECT_LE(b[v], a[v]);
        EXPECT_LE(c[v], b[v]);
      }
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kImpossibleEvidence);
    }
  }
}

TEST(RankDifferenceTest, InfiniteOperandsAreClassified) {
  using K = RankDifference::Kind;
  EXPECT_EQ(RankDifference::between(Rank::infinity(), Rank::infinity()).kind,
            K::kBothImpossible);
  EXPECT_EQ(RankDifference::between(Rank::infinity(), Rank(2)).kind,
            K::kPlusInfinity);
  EXPECT_EQ(RankDifference::between(Rank(2), Rank::infinity()).kind,
            K::kMinusInfinity);
  EXPECT_EQ(RankDifference::between(Rank(1), Rank(4)).value, -3);
  EXPECT_EQ(to_string(RankDifference::between(Rank::infinity(),
                                              Rank::infinity())),
            "both-impossible");
}

TEST(RankInversionTest, TiesAreCompatible) {
  const std::vector<Rank> a = {Rank(0), Rank(1), Rank(2)};
  const std::vector<Rank> tied = {Rank(0), Rank(0), Rank(0)};
  const std::vector<Rank> flipped = {Rank(2), Rank(1), Rank(0)};
  EXPECT_TRUE(rank_inversions(a, tied).empty());
  EXPECT_EQ(rank_inversions(a, flipped).size(), 3u);
  EXPECT_EQ(rank_inversions(a, a).size(), 0u);
}

}  // namespace
}  // namespace kappanet

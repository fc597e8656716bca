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

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kappanet/degree.hpp"
#include "kappanet/error.hpp"
#include "kappanet/factor.hpp"
#include "kappanet/network.hpp"
#include "support/test_networks.hpp"

namespace kappanet {
namespace {

using testing::prob_row;
using testing::rank_row;

constexpr Calculus kProb = Calculus::kProbability;
constexpr Calculus kKappa = Calculus::kKappa;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no kappanet::Error thrown";
  return ErrorCode::kIo;
}

TEST(RankTest, InfinityOrdersAboveEveryFiniteRank) {
  EXPECT_LT(Rank(0), Rank(1));
  EXPECT_LT(Rank(std::numeric_limits<std::uint64_t>::max()), Rank::infinity());
  EXPECT_EQ(Rank::infinity(), Rank::infinity());
  EXPECT_EQ(to_string(Rank::infinity()), "inf");
  EXPECT_EQ(to_string(Rank(17)), "17");
}

TEST(RankTest, AdditionAbsorbsInfinityAndRejectsOverflow) {
  EXPECT_EQ(Rank(5) + Rank(1), Rank(6));
  EXPECT_EQ(Rank::infinity() + Rank(3), Rank::infinity());
  EXPECT_EQ(Rank(3) + Rank::infinity(), Rank::infinity());
  const Rank big(std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(code_of([&] { (void)(big + Rank(1)); }),
            ErrorCode::kContractViolation);
}

TEST(RankTest, ValueOfInfinityIsAContractViolation) {
  EXPECT_EQ(code_of([] { (void)Rank::infinity().value(); }),
            ErrorCode::kContractViolation);
}

TEST(DegreeTest, CombineExamples) {
  EXPECT_DOUBLE_EQ(
      combine(kProb, Degree::probability(0.8), Degree::probability(0.8)).prob(),
      0.64);
  EXPECT_EQ(combine(kKappa, Degree::kappa(5), Degree::kappa(1)),
            Degree::kappa(6));
  EXPECT_EQ(combine(kKappa, Degree::kappa(Rank::infinity()), Degree::kappa(3)),
            Degree::kappa(Rank::infinity()));
}

TEST(DegreeTest, MergeExamples) {
  EXPECT_EQ(merge(kKappa, Degree::kappa(2), Degree::kappa(5)), Degree::kappa(2));
  EXPECT_NEAR(
      merge(kProb, Degree::probability(0.512), Degree::probability(0.128))
          .prob(),
      0.64, 1e-15);
  EXPECT_EQ(merge(kKappa, Degree::kappa(Rank::infinity()),
                  Degree::kappa(Rank::infinity())),
            Degree::kappa(Rank::infinity()));
}

TEST(DegreeTest, MixingCalculiIsAContractViolation) {
  EXPECT_EQ(code_of([] {
              combine(kKappa, Degree::probability(0.5), Degree::kappa(1));
            }),
            ErrorCode::kContractViolation);
  EXPECT_EQ(code_of([] {
              merge(kProb, Degree::probability(0.5), Degree::kappa(1));
            }),
            ErrorCode::kContractViolation);
  EXPECT_EQ(code_of([] { (void)Degree::kappa(2).prob(); }),
            ErrorCode::kContractViolation);
}

TEST(DegreeTest, UnitsAndZeros) {
  EXPECT_EQ(unit(kProb), Degree::probability(1.0));
  EXPECT_EQ(zero(kProb), Degree::probability(0.0));
  EXPECT_EQ(unit(kKappa), Degree::kappa(0));
  EXPECT_EQ(zero(kKappa), Degree::kappa(Rank::infinity()));
}

TEST(DegreeTest, Formatting) {
  EXPECT_EQ(to_string(Degree::probability(0.68)), "0.680000");
  EXPECT_EQ(to_string(Degree::kappa(Rank::infinity())), "inf");
  EXPECT_EQ(to_string(kKappa), "kappa");
  EXPECT_EQ(parse_calculus("probability"), kProb);
  EXPECT_FALSE(parse_calculus("Kappa").has_value());
}

// Semiring laws over random triples. Probability values are dyadic so that
// products and sums are exact and the laws can be checked with ==.
TEST(SemiringLawTest, ProbabilityLawsHoldExactlyOnDyadics) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 16);
  auto draw = [&] { return Degree::probability(num(rng) / 16.0); };
  for (int trial = 0; trial < 500; ++trial) {
    const Degree a = draw(), b = draw(), c = draw();
    EXPECT_EQ(combine(kProb, a, b), combine(kProb, b, a));
    EXPECT_EQ(combine(kProb, combine(kProb, a, b), c),
              combine(kProb, a, combine(kProb, b, c)));
    EXPECT_EQ(merge(kProb, a, b), merge(kProb, b, a));
    EXPECT_EQ(merge(kProb, merge(kProb, a, b), c),
              merge(kProb, a, merge(kProb, b, c)));
    EXPECT_EQ(combine(kProb, a, unit(kProb)), a);
    EXPECT_EQ(merge(kProb, a, zero(kProb)), a);
    EXPECT_EQ(combine(kProb, a, merge(kProb, b, c)),
              merge(kProb, combine(kProb, a, b), combine(kProb, a, c)));
  }
}

TEST(SemiringLawTest, KappaLawsHoldExactly) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> num(0, 12);
  auto draw = [&] {
    const std::uint64_t k = num(rng);
    return k == 12 ? Degree::kappa(Rank::infinity()) : Degree::kappa(k);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Degree a = draw(), b = draw(), c = draw();
    EXPECT_EQ(combine(kKappa, a, b), combine(kKappa, b, a));
    EXPECT_EQ(combine(kKappa, combine(kKappa, a, b), c),
              combine(kKappa, a, combine(kKappa, b, c)));
    EXPECT_EQ(merge(kKappa, a, b), merge(kKappa, b, a));
    EXPECT_EQ(merge(kKappa, merge(kKappa, a, b), c),
              merge(kKappa, a, merge(kKappa, b, c)));
    EXPECT_EQ(combine(kKappa, a, unit(kKappa)), a);
    EXPECT_EQ(merge(kKappa, a, zero(kKappa)), a);
    EXPECT_EQ(combine(kKappa, a, merge(kKappa, b, c)),
              merge(kKappa, combine(kKappa, a, b), combine(kKappa, a, c)));
  }
}

TEST(RadixTest, RoundTripsUpToFourParentsOfFourValues) {
  for (std::size_t parents = 0; parents <= 4; ++parents) {
    for (std::size_t values = 2; values <= 4; ++values) {
      std::vector<std::size_t> radices(parents + 1, values);
      radices.back() = 2;  // the child digit
      std::vector<std::size_t> digits(radices.size());
      const std::size_t n = radix_product(radices);
      for (std::size_t i = 0; i < n; ++i) {
        unflatten(i, radices, digits);
        for (std::size_t d = 0; d < digits.size(); ++d) {
          ASSERT_LT(digits[d], radices[d]);
        }
        ASSERT_EQ(flat_index(digits, radices), i);
      }
    }
  }
}

TEST(RadixTest, FirstDigitIsMostSignificant) {
  const std::vector<std::size_t> radices = {2, 3};
  const std::vector<std::size_t> digits = {1, 0};
  EXPECT_EQ(flat_index(digits, radices), 3u);
}

TEST(AssignmentTest, ParsesAndEchoesInInsertionOrder) {
  const Assignment a = parse_assignment(" B = y , A=x");
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.to_string(), "B=y,A=x");
  ASSERT_NE(a.find("A"), nullptr);
  EXPECT_EQ(*a.find("A"), "x");
  EXPECT_TRUE(parse_assignment("").empty());
}

TEST(AssignmentTest, RejectsMalformedText) {
  for (const char* bad : {"A", "A=", "=x", "A=x,,B=y", "A=x,A=y"}) {
    EXPECT_EQ(code_of([&] { parse_assignment(bad); }),
              ErrorCode::kInvalidArgument)
        << bad;
  }
  try {
    parse_assignment("A=x,B");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("malformed evidence"),
              std::string::npos);
  }
}

TEST(AssignmentTest, ResolveNamesTheUnknownVariable) {
  const Network net = testing::literal_chain(2);
  try {
    resolve_assignment(net, parse_assignment("Z=true"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_NE(std::string(e.what()).find("'Z'"), std::string::npos);
  }
  EXPECT_EQ(code_of([&] {
              resolve_assignment(net, parse_assignment("X1=maybe"));
            }),
            ErrorCode::kInvalidArgument);
}

bool mentions(const std::vector<Violation>& vs, const std::string& text) {
  for (const auto& v : vs) {
    if (to_string(v).find(text) != std::string::npos) return true;
  }
  return false;
}

TEST(ValidateTest, TwoNodeChainIsValid) {
  EXPECT_TRUE(validate_network(testing::literal_chain(2)).empty());
}

TEST(ValidateTest, KappaRowWithoutZeroIsReported) {
  Network net(kKappa, {{"A", {"a", "b"}}},
              {{"A", {}, {rank_row({Rank(1), Rank(2)})}}});
  const auto vs = validate_network(net);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_TRUE(mentions(vs, "row minimum must be 0"));
  EXPECT_EQ(vs[0].element.find("A") != std::string::npos, true);
  EXPECT_EQ(code_of([&] { require_valid(net); }), ErrorCode::kValidation);
}

TEST(ValidateTest, TwoCycleIsReported) {
  Network net(kProb, {{"A", {"a", "b"}}, {"B", {"a", "b"}}},
              {{"A", {"B"}, {prob_row({0.5, 0.5}), prob_row({0.5, 0.5})}},
               {"B", {"A"}, {prob_row({0.5, 0.5}), prob_row({0.5, 0.5})}}});
  EXPECT_TRUE(mentions(validate_network(net), "cycle detected"));
}

TEST(ValidateTest, ReportsEveryStructuralProblem) {
  Network net(
      kProb,
      {{"A", {"a", "a"}}, {"B", {"x", "y"}}, {"C", {"x", "y"}}},
      {{"A", {}, {prob_row({0.5, 0.6})}},
       {"B", {"Q"}, {prob_row({0.5, 0.5})}},
       {"B", {}, {prob_row({0.5, 0.5})}}});
  const auto vs = validate_network(net);
  EXPECT_TRUE(mentions(vs, "A")) << vs.size();
  EXPECT_TRUE(mentions(vs, "Q"));
  EXPECT_TRUE(mentions(vs, "C"));  // no table
  EXPECT_GE(vs.size(), 4u);
}

TEST(ValidateTest, RowShapeAndRangeProblems) {
  Network wrong_rows(kProb, {{"A", {"a", "b"}}, {"B", {"a", "b"}}},
                     {{"A", {}, {prob_row({0.5, 0.5})}},
                      {"B", {"A"}, {prob_row({0.5, 0.5})}}});
  EXPECT_FALSE(validate_network(wrong_rows).empty());

  Network negative(kProb, {{"A", {"a", "b"}}},
                   {{"A", {}, {prob_row({1.5, -0.5})}}});
  EXPECT_FALSE(validate_network(negative).empty());

  Network mixed(kProb, {{"A", {"a", "b"}}},
                {{"A", {}, {rank_row({Rank(0), Rank(1)})}}});
  EXPECT_FALSE(validate_network(mixed).empty());

  Network bad_eps(kKappa, {{"A", {"a", "b"}}},
                  {{"A", {}, {rank_row({Rank(0), Rank(1)})}}}, 1.5);
  EXPECT_FALSE(validate_network(bad_eps).empty());
}

TEST(ValidateTest, RowSumToleranceIsOneInAThousandMillion) {
  Network close(kProb, {{"A", {"a", "b"}}},
                {{"A", {}, {prob_row({0.5 + 4e-10, 0.5})}}});
  EXPECT_TRUE(validate_network(close).empty());
  Network off(kProb, {{"A", {"a", "b"}}},
              {{"A", {}, {prob_row({0.5 + 1e-8, 0.5})}}});
  EXPECT_FALSE(validate_network(off).empty());
}

TEST(ValidateTest, RandomNetworksAreValid) {
  std::mt19937_64 rng(3);
  testing::RandomNetworkOptions opt;
  opt.max_nodes = 8;
  opt.max_values = 4;
  for (int i = 0; i < 100; ++i) {
    for (Calculus c : {kProb, kKappa}) {
      const Network net = testing::random_network(rng, c, opt);
      EXPECT_TRUE(validate_network(net).empty());
    }
  }
}

TEST(TopologicalOrderTest, ParentsPrecedeChildren) {
  std::mt19937_64 rng(4);
  testing::RandomNetworkOptions opt;
  opt.max_nodes = 9;
  for (int i = 0; i < 50; ++i) {
    const Network net = testing::random_network(rng, kProb, opt);
    const auto order = topological_order(net);
    ASSERT_EQ(order.size(), net.size());
    std::vector<std::size_t> pos(net.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    for (const auto& t : net.tables()) {
      for (const auto& p : t.parents) {
        EXPECT_LT(pos[net.require_index(p)], pos[net.require_index(t.child)]);
      }
    }
  }
}

TEST(FactorTest, FromTableMatchesRowMajorRows) {
  const Network net = testing::literal_chain(2);
  const auto f = Factor<ProbabilitySemiring>::from_table(
      net, *net.table_for("X2"));
  EXPECT_EQ(f.scope(), (std::vector<std::size_t>{0, 1}));
  const std::vector<double> want{0.8, 0.2, 0.2, 0.8};
  ASSERT_EQ(f.values().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(f.values()[i], want[i], 1e-15);
  }
}

TEST(FactorTest, ProductMergeAndRestrict) {
  // f(A) = (1, 3), g(A, B) = (0, 1, 2, 0) as ranks.
  using F = Factor<KappaSemiring>;
  const F f({0}, {2}, {Rank(1), Rank(3)});
  const F g({0, 1}, {2, 2}, {Rank(0), Rank(1), Rank(2), Rank(0)});
  const F fg = product(f, g);
  EXPECT_EQ(fg.scope(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(fg.values(),
            (std::vector<Rank>{Rank(1), Rank(2), Rank(5), Rank(3)}));
  const F over_a = merge_out(fg, 0);
  EXPECT_EQ(over_a.values(), (std::vector<Rank>{Rank(1), Rank(2)}));
  const F only_b1 = restrict_to(fg, 1, 1);
  EXPECT_EQ(only_b1.values(), (std::vector<Rank>{Rank::infinity(), Rank(2),
                                                 Rank::infinity(), Rank(3)}));
  // A factor without the variable is untouched.
  EXPECT_EQ(merge_out(f, 7).values(), f.values());
}

TEST(FactorTest, MismatchedEntryCountIsRejected) {
  EXPECT_EQ(code_of([] {
              Factor<ProbabilitySemiring>({0}, {2}, {1.0});
            }),
            ErrorCode::kContractViolation);
}

}  // namespace
}  // namespace kappanet

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

// Order-of-magnitude abstraction of probabilities into kappa ranks.
//
// A probability p maps to the unique k >= 0 with eps^(k+1) < p <= eps^k
// (p = 0 maps to infinity). Two pipelines compare the calculi on a query:
//   C1: infer with probabilities, then abstract the posterior;
//   C2: abstract the network, then infer with ranks.

#ifndef KAPPANET_ABSTRACTION_HPP_
#define KAPPANET_ABSTRACTION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappanet/degree.hpp"
#include "kappanet/inference.hpp"
#include "kappanet/network.hpp"

namespace kappanet {

// Relative slack applied when the scaled probability lands on the closed
// end of eps^(k+1) < p <= eps^k, so exact powers of eps map to k.
inline constexpr double kBoundaryTolerance = 1e-12;

class Epsilon {
 public:
  // Throws kInvalidArgument unless 0 < value < 1.
  explicit Epsilon(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Iterative division by eps. Values above 1 are clamped to 1; negative or
// non-finite input throws kInvalidArgument.
Rank translate_degree(double p, Epsilon eps);

// Same graph, every entry translated, each row shifted so its minimum is 0.
// The result records eps. Requires a valid probability network.
Network translate_network(const Network& net, Epsilon eps);

struct C1Result {
  PosteriorVector probability;  // the probability posterior
  std::vector<Rank> raw_ranks;  // translated, before normalization
  PosteriorVector ranks;        // normalized kappa posterior
};

C1Result c1_detailed(const Network& net, const Assignment& evidence,
                     std::string_view target, Epsilon eps);

PosteriorVector c1_pipeline(const Network& net, const Assignment& evidence,
                            std::string_view target, Epsilon eps);

PosteriorVector c2_pipeline(const Network& net, const Assignment& evidence,
                            std::string_view target, Epsilon eps);

// c1 - c2 for one value. Infinite operands are classified rather than
// subtracted.
struct RankDifference {
  enum class Kind { kFinite, kBothImpossible, kPlusInfinity, kMinusInfinity };
  Kind kind = Kind::kFinite;
  std::int64_t value = 0;

  static RankDifference between(Rank c1, Rank c2);

  friend bool operator==(const RankDifference&, const RankDifference&) = default;
};

std::string to_string(const RankDifference& difference);

struct DiscrepancyRecord {
  std::string value;
  double probability = 0.0;
  Rank c1_raw;
  Rank c1;
  Rank c2;
  RankDifference difference;
};

struct DiscrepancyReport {
  std::string target;
  double epsilon = 0.0;
  std::vector<DiscrepancyRecord> records;
  // True when no pair of values is strictly ordered one way by C1 and the
  // other way by C2; ties are compatible with either order.
  bool orderings_agree = true;
  std::vector<std::pair<std::string, std::string>> inversions;
};

DiscrepancyReport compare_c1_c2(const Network& net, const Assignment& evidence,
                                std::string_view target, Epsilon eps);

// Index pairs (i, j), i < j, strictly ordered in opposite directions.
std::vector<std::pair<std::size_t, std::size_t>> rank_inversions(
    std::span<const Rank> a, std::span<const Rank> b);

}  // namespace kappanet

#endif  // KAPPANET_ABSTRACTION_HPP_

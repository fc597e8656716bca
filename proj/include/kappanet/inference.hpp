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

// Posterior queries under either calculus.
//
// enumerate_posterior() is the brute-force reference: it walks every full
// assignment. eliminate_posterior() runs variable elimination over the same
// semiring and must agree with it (exactly for kappa, to 1e-9 for
// probability). Both normalize once, on the final target vector, and throw
// kImpossibleEvidence when the evidence has probability 0 / rank infinity.

#ifndef KAPPANET_INFERENCE_HPP_
#define KAPPANET_INFERENCE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappanet/degree.hpp"
#include "kappanet/network.hpp"

namespace kappanet {

struct PosteriorVector {
  std::string variable;
  Calculus calculus = Calculus::kProbability;
  // One normalized degree per value of `variable`, in declared order.
  std::vector<Degree> degrees;

  friend bool operator==(const PosteriorVector&,
                         const PosteriorVector&) = default;
};

struct EliminationOrder {
  std::vector<std::string> order;

  friend bool operator==(const EliminationOrder&,
                         const EliminationOrder&) = default;
};

// Combines the table entry of every node. `full` must bind every variable.
Degree joint_degree(const Network& net, const Assignment& full);

PosteriorVector enumerate_posterior(const Network& net,
                                    const Assignment& evidence,
                                    std::string_view target);

// `order` must be a permutation of exactly the variables that are neither
// the target nor observed.
PosteriorVector eliminate_posterior(const Network& net,
                                    const Assignment& evidence,
                                    std::string_view target,
                                    const EliminationOrder& order);

// Variable elimination with min_fill_order(net, evidence + target).
PosteriorVector eliminate_posterior(const Network& net,
                                    const Assignment& evidence,
                                    std::string_view target);

// Greedy min-fill over the moral graph. Only variables outside `keep` are
// ordered; ties go to the earliest-declared variable.
EliminationOrder min_fill_order(const Network& net,
                                std::span<const std::string> keep);

// Probability: divide by the sum. Kappa: subtract the minimum.
// Throws kImpossibleEvidence for an all-zero / all-infinite vector.
std::vector<Degree> normalize_vector(Calculus calculus,
                                     std::span<const Degree> raw);

enum class BeliefKind { kBelieved, kDisbelieved, kUncommitted };

struct BeliefStatus {
  BeliefKind kind = BeliefKind::kUncommitted;
  Rank strength;  // 0 when uncommitted

  friend bool operator==(const BeliefStatus&, const BeliefStatus&) = default;
};

std::string to_string(const BeliefStatus& status);

// Plain-belief classification of the value at `positive` in a normalized
// binary kappa posterior. Throws kContractViolation for probability input,
// non-binary variables, or a vector whose minimum is not 0.
BeliefStatus classify_belief(const PosteriorVector& posterior,
                             std::size_t positive = 0);

}  // namespace kappanet

#endif  // KAPPANET_INFERENCE_HPP_

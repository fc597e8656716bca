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

// Fault ranking under both calculi and agreement between orderings.

#ifndef KAPPANET_DIAGNOSIS_HPP_
#define KAPPANET_DIAGNOSIS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappanet/abstraction.hpp"
#include "kappanet/degree.hpp"
#include "kappanet/network.hpp"

namespace kappanet {

struct Fault {
  std::string variable;
  std::string faulty_value;

  friend bool operator==(const Fault&, const Fault&) = default;
};

struct FaultSet {
  std::vector<Fault> faults;

  friend bool operator==(const FaultSet&, const FaultSet&) = default;
};

// "Var=value[,Var=value...]", same syntax as evidence.
FaultSet parse_fault_set(std::string_view text);

// Throws kInvalidArgument naming an unknown variable or value.
void check_fault_set(const Network& net, const FaultSet& faults);

// "+" believed, "?" uncommitted, "" otherwise.
enum class Annotation { kNone, kBelieved, kUncommitted };

std::string_view sigil(Annotation annotation);

// Annotation of the value at `faulty` in a normalized kappa vector: "+" when
// it alone has rank 0, "?" when it shares rank 0 with another value.
Annotation annotate(std::span<const Degree> ranks, std::size_t faulty);

struct FaultRow {
  std::string fault;
  Degree degree = Degree::probability(0.0);
  Annotation annotation = Annotation::kNone;

  friend bool operator==(const FaultRow&, const FaultRow&) = default;
};

struct FaultRanking {
  Calculus calculus = Calculus::kProbability;
  Assignment evidence;
  // Most plausible first; equal degrees keep fault-set order.
  std::vector<FaultRow> rows;

  friend bool operator==(const FaultRanking&, const FaultRanking&) = default;
};

FaultRanking rank_faults(const Network& net, const Assignment& evidence,
                         const FaultSet& faults);

// Number of distinct degrees among the rows.
std::size_t distinct_levels(const FaultRanking& ranking);

struct OrderingAgreement {
  std::size_t comparable = 0;
  std::size_t agreeing = 0;
  double score = 1.0;
  std::vector<std::pair<std::string, std::string>> inverted;
};

// Pairs strictly ordered in both rankings are comparable; a tie in either
// leaves the pair out. Throws kInvalidArgument for different fault sets.
OrderingAgreement compare_orderings(const FaultRanking& a,
                                    const FaultRanking& b);

// Table-2 style status of a fault: believed present, believed absent, or
// unknown.
enum class FaultStatus { kOk, kBad, kUnknown };

std::string_view to_string(FaultStatus status);

struct BeliefCell {
  std::string fault;
  FaultStatus kappa = FaultStatus::kOk;       // from the kappa network (C2)
  FaultStatus abstracted = FaultStatus::kOk;  // from abstracted posteriors (C1)
  bool differs = false;
};

struct SweepBlock {
  double epsilon = 0.0;
  FaultRanking ranking;  // kappa network ranking
  OrderingAgreement agreement;  // against the probability ranking
  std::size_t levels = 0;
  std::vector<BeliefCell> cells;
};

struct SweepRun {
  Assignment evidence;
  std::optional<std::string> error;  // set when the evidence is impossible
  FaultRanking probability;
  std::vector<SweepBlock> blocks;  // one per epsilon, in sweep order
};

struct SweepReport {
  FaultSet faults;
  std::vector<double> epsilons;
  std::vector<SweepRun> runs;
};

// For each run: the probability ranking, then per epsilon the kappa network
// ranking, its agreement with the probability ranking, and C1-vs-C2 fault
// status cells. Impossible evidence is recorded in the run and the sweep
// continues.
SweepReport epsilon_sweep(const Network& net, std::span<const Assignment> runs,
                          const FaultSet& faults,
                          std::span<const Epsilon> epsilons);

// Tab-separated renderings.
std::string render_ranking(const FaultRanking& ranking);
std::string render_sweep(const SweepReport& report);

}  // namespace kappanet

#endif  // KAPPANET_DIAGNOSIS_HPP_

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

// Chain and fork structures: network builders and closed-form posteriors.
//
// The closed forms are plain recurrences that never touch the factor
// engine, so comparing them with eliminate_posterior() on the built networks
// checks one implementation against another.
//
// Chain X1 -> X2 -> ... -> Xn, queried for Xi given X1 = true.
// Fork Y -> {X1, ..., Xn}, queried for Y or Xn given X1..Xi = true.
// Binary variables use the value names "true" and "false", in that order.

#ifndef KAPPANET_ANALYTIC_HPP_
#define KAPPANET_ANALYTIC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "kappanet/abstraction.hpp"
#include "kappanet/degree.hpp"
#include "kappanet/inference.hpp"
#include "kappanet/network.hpp"

namespace kappanet {

struct ChainSpec {
  std::size_t length = 3;
  double prior = 0.5;        // Pr[x1+]
  double persistence = 0.8;  // Pr[xi+ | x(i-1)+]
  double innovation = 0.2;   // Pr[xi+ | x(i-1)-]
  double epsilon = 0.2;      // used for the kappa variant
};

struct ForkSpec {
  std::size_t effects = 10;
  double prior = 0.04;                // P[y+]
  double effect_given_cause = 0.8;    // P[xi+ | y+]
  double effect_given_absence = 0.2;  // P[xi+ | y-]
  // Kappa quantification, set directly rather than by abstraction.
  Rank cause_rank = Rank(5);        // kappa[y+]
  Rank missed_effect_rank = Rank(1);  // kappa[xi- | y+]
  Rank spurious_effect_rank = Rank(1);  // kappa[xi+ | y-]
};

// Throws kInvalidArgument for out-of-range parameters.
void check_spec(const ChainSpec& spec);
void check_spec(const ForkSpec& spec);

std::string chain_variable(std::size_t i);   // "X<i>", 1-based
std::string effect_variable(std::size_t i);  // "X<i>", 1-based
inline constexpr const char* kCauseVariable = "Y";

// The kappa variant is translate_network() of the probability variant at
// spec.epsilon.
Network chain_network(const ChainSpec& spec, Calculus calculus);

// Posterior of X_i given X1 = true, 2 <= i <= length.
PosteriorVector chain_posterior(const ChainSpec& spec, std::size_t i,
                                Calculus calculus);

Network fork_network(const ForkSpec& spec, Calculus calculus);

enum class ForkTarget { kCause, kLastEffect };

// Posterior of Y or X_n given X1..X_observed = true, 0 <= observed <= n - 1.
PosteriorVector fork_posterior(const ForkSpec& spec, std::size_t observed,
                               ForkTarget target, Calculus calculus);

// kappa[z-] - kappa[z+] of a binary ("true", "false") kappa posterior.
RankDifference belief_margin(const PosteriorVector& posterior);

// "certain" / "-certain" for infinite margins.
std::string margin_text(const RankDifference& margin);

struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Distance i-1 against belief in X_i, distances 1..spec.length-1.
FigureTable chain_figure(const ChainSpec& spec);
// Observed effects i against P[y+] and P[xn+], i = 0..n-1.
FigureTable fork_probability_figure(const ForkSpec& spec);
// Observed effects i against the belief margins of Y and X_n, i = 0..n-1.
FigureTable fork_margin_figure(const ForkSpec& spec);

// Header row then one tab-separated line per row.
std::string render_table(const FigureTable& table);

}  // namespace kappanet

#endif  // KAPPANET_ANALYTIC_HPP_

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

// Tab-separated text reports shared by the C API and the command line tool.
// Probabilities print with 6 decimals, ranks as integers or "inf"; lines
// starting with '#' carry metadata.

#ifndef KAPPANET_REPORT_HPP_
#define KAPPANET_REPORT_HPP_

#include <string>

#include "kappanet/abstraction.hpp"
#include "kappanet/analytic.hpp"
#include "kappanet/inference.hpp"
#include "kappanet/network.hpp"

namespace kappanet {

std::string render_posterior(const Network& net, const Assignment& evidence,
                             const PosteriorVector& posterior);

// `raw` adds the posterior probability and the unnormalized C1 ranks.
std::string render_discrepancy(const DiscrepancyReport& report,
                               const Assignment& evidence, bool raw);

// X_n given X1 = true under both calculi; `figure` appends the distance
// table.
std::string render_chain(const ChainSpec& spec, bool figure);

// Y and X_n given X1..X_observe = true under both calculi; `figure` appends
// the probability and margin tables.
std::string render_fork(const ForkSpec& spec, std::size_t observe, bool figure);

}  // namespace kappanet

#endif  // KAPPANET_REPORT_HPP_

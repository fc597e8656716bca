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

#include "kappanet/abstraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kappanet/error.hpp"

namespace kappanet {

Epsilon::Epsilon(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie strictly between 0 and 1, got " +
                    std::to_string(value));
  }
}

Rank translate_degree(double p, Epsilon eps) {
  if (!std::isfinite(p) || p < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot abstract probability " + std::to_string(p));
  }
  if (p == 0.0) return Rank::infinity();
  double q = std::min(p, 1.0);
  // q = p / eps^(k+1) after each division; stop once it leaves (0, 1].
  for (std::uint64_t k = 0;; ++k) {
    q /= eps.value();
    if (q > 1.0 + kBoundaryTolerance) return Rank(k);
  }
}

Network translate_network(const Network& net, Epsilon eps) {
  require_valid(net);
  if (net.calculus() != Calculus::kProbability) {
    throw Error(ErrorCode::kInvalidArgument,
                "only probability networks can be abstracted");
  }
  std::vector<ConditionalTable> tables;
  tables.reserve(net.tables().size());
  for (const auto& table : net.tables()) {
    ConditionalTable out{table.child, table.parents, {}};
    out.rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
      std::vector<Rank> ranks;
      for (const auto& degree : row) {
        ranks.push_back(translate_degree(degree.prob(), eps));
      }
      const Rank min = *std::min_element(ranks.begin(), ranks.end());
      std::vector<Degree> kappa_row;
      for (Rank r : ranks) kappa_row.push_back(Degree::kappa(r.shifted_down(min)));
      out.rows.push_back(std::move(kappa_row));
    }
    tables.push_back(std::move(out));
  }
  return Network(Calculus::kKappa, net.variables(), std::move(tables),
                 eps.value());
}

namespace {

void require_probability(const Network& net) {
  if (net.calculus() != Calculus::kProbability) {
    throw Error(ErrorCode::kInvalidArgument,
                "the C1/C2 comparison needs a probability network");
  }
}

}  // namespace

C1Result c1_detailed(const Network& net, const Assignment& evidence,
                     std::string_view target, Epsilon eps) {
  require_probability(net);
  C1Result out;
  out.probability = eliminate_posterior(net, evidence, target);
  std::vector<Degree> raw;
  for (const auto& d : out.probability.degrees) {
    out.raw_ranks.push_back(translate_degree(d.prob(), eps));
    raw.push_back(Degree::kappa(out.raw_ranks.back()));
  }
  out.ranks = PosteriorVector{out.probability.variable, Calculus::kKappa,
                              normalize_vector(Calculus::kKappa, raw)};
  return out;
}

PosteriorVector c1_pipeline(const Network& net, const Assignment& evidence,
                            std::string_view target, Epsilon eps) {
  return c1_detailed(net, evidence, target, eps).ranks;
}

PosteriorVector c2_pipeline(const Network& net, const Assignment& evidence,
                            std::string_view target, Epsilon eps) {
  require_probability(net);
  return eliminate_posterior(translate_network(net, eps), evidence, target);
}

RankDifference RankDifference::between(Rank c1, Rank c2) {
  using Kind = RankDifference::Kind;
  if (c1.is_infinite() && c2.is_infinite()) return {Kind::kBothImpossible, 0};
  if (c1.is_infinite()) return {Kind::kPlusInfinity, 0};
  if (c2.is_infinite()) return {Kind::kMinusInfinity, 0};
  return {Kind::kFinite, static_cast<std::int64_t>(c1.value()) -
                             static_cast<std::int64_t>(c2.value())};
}

std::string to_string(const RankDifference& difference) {
  switch (difference.kind) {
    case RankDifference::Kind::kBothImpossible:
      return "both-impossible";
    case RankDifference::Kind::kPlusInfinity:
      return "inf";
    case RankDifference::Kind::kMinusInfinity:
      return "-inf";
    case RankDifference::Kind::kFinite:
      break;
  }
  return std::to_string(difference.value);
}

std::vector<std::pair<std::size_t, std::size_t>> rank_inversions(
    std::span<const Rank> a, std::span<const Rank> b) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((a[i] < a[j] && b[j] < b[i]) || (a[j] < a[i] && b[i] < b[j])) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

DiscrepancyReport compare_c1_c2(const Network& net, const Assignment& evidence,
                                std::string_view target, Epsilon eps) {
  const C1Result c1 = c1_detailed(net, evidence, target, eps);
  const PosteriorVector c2 = c2_pipeline(net, evidence, target, eps);

  DiscrepancyReport report;
  report.target = std::string(target);
  report.epsilon = eps.value();
  const Variable& var = net.variable(net.require_index(target));
  std::vector<Rank> c1_ranks;
  std::vector<Rank> c2_ranks;
  for (std::size_t v = 0; v < var.cardinality(); ++v) {
    DiscrepancyRecord rec;
    rec.value = var.values[v];
    rec.probability = c1.probability.degrees[v].prob();
    rec.c1_raw = c1.raw_ranks[v];
    rec.c1 = c1.ranks.degrees[v].rank();
    rec.c2 = c2.degrees[v].rank();
    rec.difference = RankDifference::between(rec.c1, rec.c2);
    c1_ranks.push_back(rec.c1);
    c2_ranks.push_back(rec.c2);
    report.records.push_back(std::move(rec));
  }
  for (const auto& [i, j] : rank_inversions(c1_ranks, c2_ranks)) {
    report.inversions.emplace_back(var.values[i], var.values[j]);
  }
  report.orderings_agree = report.inversions.empty();
  return report;
}

}  // namespace kappanet

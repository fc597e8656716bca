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

#include "kappanet/inference.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "kappanet/error.hpp"
#include "kappanet/factor.hpp"

namespace kappanet {
namespace {

// Per-variable view of the tables: table and resolved parent indices.
struct NodeTable {
  const ConditionalTable* table = nullptr;
  std::vector<std::size_t> parents;
  std::vector<std::size_t> parent_cards;
};

std::vector<NodeTable> node_tables(const Network& net) {
  std::vector<NodeTable> nodes(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) {
    nodes[v].table = net.table_for(net.variable(v).name);
    for (const auto& parent : nodes[v].table->parents) {
      const std::size_t p = net.require_index(parent);
      nodes[v].parents.push_back(p);
      nodes[v].parent_cards.push_back(net.variable(p).cardinality());
    }
  }
  return nodes;
}

template <class S>
typename S::value_type joint_value(const std::vector<NodeTable>& nodes,
                                   std::span<const std::size_t> values) {
  auto acc = S::one();
  std::vector<std::size_t> parent_values;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const auto& node = nodes[v];
    parent_values.clear();
    for (std::size_t p : node.parents) parent_values.push_back(values[p]);
    const std::size_t row = flat_index(parent_values, node.parent_cards);
    acc = S::combine(acc, S::from_degree(node.table->rows[row][values[v]]));
  }
  return acc;
}

std::string impossible_message(const Assignment& evidence) {
  return evidence.empty() ? std::string("the network has no possible world")
                          : "evidence " + evidence.to_string() + " cannot occur";
}

struct Query {
  std::size_t target = 0;
  std::vector<std::pair<std::size_t, std::size_t>> evidence;
};

Query resolve_query(const Network& net, const Assignment& evidence,
                    std::string_view target) {
  Query q;
  q.evidence = resolve_assignment(net, evidence);
  q.target = net.require_index(target);
  if (evidence.contains(target)) {
    throw Error(ErrorCode::kInvalidArgument,
                "target '" + std::string(target) + "' is also observed");
  }
  return q;
}

template <class S>
PosteriorVector finish(const Network& net, std::size_t target,
                       const std::vector<typename S::value_type>& raw,
                       const Assignment& evidence) {
  std::vector<Degree> degrees;
  degrees.reserve(raw.size());
  for (const auto& v : raw) degrees.push_back(S::to_degree(v));
  try {
    degrees = normalize_vector(S::kCalculus, degrees);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kImpossibleEvidence) {
      throw Error(ErrorCode::kImpossibleEvidence, impossible_message(evidence));
    }
    throw;
  }
  return PosteriorVector{net.variable(target).name, S::kCalculus,
                         std::move(degrees)};
}

template <class S>
PosteriorVector enumerate_impl(const Network& net, const Assignment& evidence,
                               std::string_view target) {
  const Query q = resolve_query(net, evidence, target);
  const auto nodes = node_tables(net);
  std::vector<std::size_t> cards;
  for (const auto& var : net.variables()) cards.push_back(var.cardinality());

  std::vector<typename S::value_type> raw(cards[q.target], S::zero());
  std::vector<std::size_t> values(cards.size());
  const std::size_t total = radix_product(cards);
  for (std::size_t i = 0; i < total; ++i) {
    unflatten(i, cards, values);
    bool consistent = true;
    for (const auto& [var, val] : q.evidence) {
      if (values[var] != val) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    auto& slot = raw[values[q.target]];
    slot = S::merge(slot, joint_value<S>(nodes, values));
  }
  return finish<S>(net, q.target, raw, evidence);
}

template <class S>
PosteriorVector eliminate_impl(const Network& net, const Assignment& evidence,
                               std::string_view target,
                               const EliminationOrder& order) {
  const Query q = resolve_query(net, evidence, target);

  std::vector<bool> eliminable(net.size(), true);
  eliminable[q.target] = false;
  for (const auto& [var, val] : q.evidence) eliminable[var] = false;
  const auto expected = static_cast<std::size_t>(
      std::count(eliminable.begin(), eliminable.end(), true));
  std::vector<std::size_t> steps;
  std::vector<bool> seen(net.size(), false);
  for (const auto& name : order.order) {
    const std::size_t var = net.require_index(name);
    if (!eliminable[var] || seen[var]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "elimination order entry '" + name +
                      "' is the target, observed, or repeated");
    }
    seen[var] = true;
    steps.push_back(var);
  }
  if (steps.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                "elimination order does not cover every eliminable variable");
  }

  std::vector<Factor<S>> factors;
  factors.reserve(net.size());
  for (const auto& var : net.variables()) {
    auto f = Factor<S>::from_table(net, *net.table_for(var.name));
    // Zero outside the observed value, then merge the observed variable out:
    // only the observed slice survives the merge.
    for (const auto& [ev, val] : q.evidence) {
      if (!f.mentions(ev)) continue;
      f = merge_out(restrict_to(f, ev, val), ev);
    }
    factors.push_back(std::move(f));
  }

  for (std::size_t var : steps) {
    Factor<S> bucket;
    std::vector<Factor<S>> rest;
    for (auto& f : factors) {
      if (f.mentions(var)) {
        bucket = product(bucket, f);
      } else {
        rest.push_back(std::move(f));
      }
    }
    rest.push_back(merge_out(bucket, var));
    factors = std::move(rest);
  }

  Factor<S> result;
  for (const auto& f : factors) result = product(result, f);
  // The target's own table keeps it in scope, so `result` is over {target}.
  if (result.scope().size() != 1 || result.scope()[0] != q.target) {
    throw Error(ErrorCode::kContractViolation,
                "elimination left variables besides the target");
  }
  return finish<S>(net, q.target, result.values(), evidence);
}

}  // namespace

Degree joint_degree(const Network& net, const Assignment& full) {
  require_valid(net);
  const auto resolved = resolve_assignment(net, full);
  std::vector<std::optional<std::size_t>> bound(net.size());
  for (const auto& [var, val] : resolved) bound[var] = val;
  std::vector<std::size_t> values(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (!bound[v]) {
      throw Error(ErrorCode::kContractViolation,
                  "joint_degree needs a full assignment; '" +
                      net.variable(v).name + "' is unbound");
    }
    values[v] = *bound[v];
  }
  const auto nodes = node_tables(net);
  if (net.calculus() == Calculus::kProbability) {
    return Degree::probability(joint_value<ProbabilitySemiring>(nodes, values));
  }
  return Degree::kappa(joint_value<KappaSemiring>(nodes, values));
}

PosteriorVector enumerate_posterior(const Network& net,
                                    const Assignment& evidence,
                                    std::string_view target) {
  require_valid(net);
  if (net.calculus() == Calculus::kProbability) {
    return enumerate_impl<ProbabilitySemiring>(net, evidence, target);
  }
  return enumerate_impl<KappaSemiring>(net, evidence, target);
}

PosteriorVector eliminate_posterior(const Network& net,
                                    const Assignment& evidence,
                                    std::string_view target,
                                    const EliminationOrder& order) {
  require_valid(net);
  if (net.calculus() == Calculus::kProbability) {
    return eliminate_impl<ProbabilitySemiring>(net, evidence, target, order);
  }
  return eliminate_impl<KappaSemiring>(net, evidence, target, order);
}

PosteriorVector eliminate_posterior(const Network& net,
                                    const Assignment& evidence,
                                    std::string_view target) {
  require_valid(net);
  std::vector<std::string> keep{std::string(target)};
  for (const auto& [name, value] : evidence) keep.push_back(name);
  // Resolve names first so unknown variables are reported as such.
  resolve_query(net, evidence, target);
  return eliminate_posterior(net, evidence, target, min_fill_order(net, keep));
}

EliminationOrder min_fill_order(const Network& net,
                                std::span<const std::string> keep) {
  require_valid(net);
  const std::size_t n = net.size();
  std::vector<std::set<std::size_t>> adj(n);
  auto connect = [&adj](std::size_t a, std::size_t b) {
    if (a == b) return;
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (std::size_t v = 0; v < n; ++v) {
    const auto* table = net.table_for(net.variable(v).name);
    std::vector<std::size_t> family{v};
    for (const auto& parent : table->parents) {
      family.push_back(net.require_index(parent));
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        connect(family[i], family[j]);
      }
    }
  }

  std::vector<bool> remaining(n, true);
  std::vector<bool> kept(n, false);
  for (const auto& name : keep) kept[net.require_index(name)] = true;

  EliminationOrder out;
  while (true) {
    std::size_t best = n;
    std::size_t best_fill = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!remaining[v] || kept[v]) continue;
      std::vector<std::size_t> nbrs(adj[v].begin(), adj[v].end());
      std::size_t fill = 0;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          if (!adj[nbrs[i]].contains(nbrs[j])) ++fill;
        }
      }
      if (best == n || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    if (best == n) break;
    std::vector<std::size_t> nbrs(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        connect(nbrs[i], nbrs[j]);
      }
    }
    for (std::size_t u : nbrs) adj[u].erase(best);
    adj[best].clear();
    remaining[best] = false;
    out.order.push_back(net.variable(best).name);
  }
  return out;
}

std::vector<Degree> normalize_vector(Calculus calculus,
                                     std::span<const Degree> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::kContractViolation, "cannot normalize an empty vector");
  }
  std::vector<Degree> out;
  out.reserve(raw.size());
  if (calculus == Calculus::kProbability) {
    double sum = 0.0;
    for (const auto& d : raw) sum += d.prob();
    if (sum == 0.0) throw Error(ErrorCode::kImpossibleEvidence, "all degrees are zero");
    for (const auto& d : raw) out.push_back(Degree::probability(d.prob() / sum));
  } else {
    Rank min = Rank::infinity();
    for (const auto& d : raw) min = std::min(min, d.rank());
    if (min.is_infinite()) {
      throw Error(ErrorCode::kImpossibleEvidence, "all degrees are zero");
    }
    for (const auto& d : raw) out.push_back(Degree::kappa(d.rank().shifted_down(min)));
  }
  return out;
}

std::string to_string(const BeliefStatus& status) {
  switch (status.kind) {
    case BeliefKind::kBelieved:
      return "believed(" + to_string(status.strength) + ")";
    case BeliefKind::kDisbelieved:
      return "disbelieved(" + to_string(status.strength) + ")";
    case BeliefKind::kUncommitted:
      break;
  }
  return "uncommitted";
}

BeliefStatus classify_belief(const PosteriorVector& posterior,
                             std::size_t positive) {
  if (posterior.calculus != Calculus::kKappa) {
    throw Error(ErrorCode::kContractViolation,
                "belief classification is defined for kappa rankings only");
  }
  if (posterior.degrees.size() != 2 || positive > 1) {
    throw Error(ErrorCode::kContractViolation,
                "belief classification needs a binary variable");
  }
  const Rank pos = posterior.degrees[positive].rank();
  const Rank neg = posterior.degrees[1 - positive].rank();
  if (std::min(pos, neg) != Rank(0)) {
    throw Error(ErrorCode::kContractViolation,
                "belief classification needs a normalized ranking");
  }
  if (pos == Rank(0) && neg == Rank(0)) return {BeliefKind::kUncommitted, Rank(0)};
  if (pos == Rank(0)) return {BeliefKind::kBelieved, neg};
  return {BeliefKind::kDisbelieved, pos};
}

}  // namespace kappanet

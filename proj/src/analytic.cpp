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

#include "kappanet/analytic.hpp"

#include <algorithm>
#include <sstream>

#include "format.hpp"
#include "kappanet/error.hpp"

namespace kappanet {
namespace {

const std::vector<std::string> kBinary{"true", "false"};

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::vector<Degree> prob_row(double p_true) {
  return {Degree::probability(p_true), Degree::probability(1.0 - p_true)};
}

std::vector<Degree> rank_row(Rank r_true, Rank r_false) {
  return {Degree::kappa(r_true), Degree::kappa(r_false)};
}

PosteriorVector make_posterior(std::string variable, Calculus calculus,
                               std::vector<Degree> raw) {
  return PosteriorVector{std::move(variable), calculus,
                         normalize_vector(calculus, raw)};
}

// kappa pair (true, false) for a probability row, shifted to minimum 0 the
// same way translate_network() shifts rows.
std::pair<Rank, Rank> abstract_row(double p_true, Epsilon eps) {
  const Rank t = translate_degree(p_true, eps);
  const Rank f = translate_degree(1.0 - p_true, eps);
  const Rank min = std::min(t, f);
  return {t.shifted_down(min), f.shifted_down(min)};
}

}  // namespace

void check_spec(const ChainSpec& spec) {
  if (spec.length < 2) {
    throw Error(ErrorCode::kInvalidArgument, "chain length must be at least 2");
  }
  if (!is_probability(spec.prior) || !is_probability(spec.persistence) ||
      !is_probability(spec.innovation)) {
    throw Error(ErrorCode::kInvalidArgument,
                "chain probabilities must lie in [0, 1]");
  }
  Epsilon{spec.epsilon};
}

void check_spec(const ForkSpec& spec) {
  if (spec.effects < 1) {
    throw Error(ErrorCode::kInvalidArgument, "a fork needs at least one effect");
  }
  if (!is_probability(spec.prior) || !is_probability(spec.effect_given_cause) ||
      !is_probability(spec.effect_given_absence)) {
    throw Error(ErrorCode::kInvalidArgument,
                "fork probabilities must lie in [0, 1]");
  }
}

std::string chain_variable(std::size_t i) { return "X" + std::to_string(i); }
std::string effect_variable(std::size_t i) { return "X" + std::to_string(i); }

Network chain_network(const ChainSpec& spec, Calculus calculus) {
  check_spec(spec);
  std::vector<Variable> vars;
  std::vector<ConditionalTable> tables;
  for (std::size_t i = 1; i <= spec.length; ++i) {
    vars.push_back({chain_variable(i), kBinary});
    if (i == 1) {
      tables.push_back({chain_variable(1), {}, {prob_row(spec.prior)}});
    } else {
      tables.push_back({chain_variable(i),
                        {chain_variable(i - 1)},
                        {prob_row(spec.persistence), prob_row(spec.innovation)}});
    }
  }
  Network net(Calculus::kProbability, std::move(vars), std::move(tables));
  if (calculus == Calculus::kProbability) return net;
  return translate_network(net, Epsilon(spec.epsilon));
}

PosteriorVector chain_posterior(const ChainSpec& spec, std::size_t i,
                                Calculus calculus) {
  check_spec(spec);
  if (i < 2 || i > spec.length) {
    throw Error(ErrorCode::kInvalidArgument,
                "chain index " + std::to_string(i) + " outside 2.." +
                    std::to_string(spec.length));
  }
  if (calculus == Calculus::kProbability) {
    // P_k = P_(k-1) * persistence + (1 - P_(k-1)) * innovation, P_1 = 1.
    double p = 1.0;
    for (std::size_t k = 2; k <= i; ++k) {
      p = p * spec.persistence + (1.0 - p) * spec.innovation;
    }
    return make_posterior(chain_variable(i), calculus,
                          {Degree::probability(p), Degree::probability(1.0 - p)});
  }
  const Epsilon eps(spec.epsilon);
  const auto [from_true_t, from_true_f] = abstract_row(spec.persistence, eps);
  const auto [from_false_t, from_false_f] = abstract_row(spec.innovation, eps);
  // Min-sum recurrence from (kappa[x1+], kappa[x1-]) = (0, inf).
  Rank t(0);
  Rank f = Rank::infinity();
  for (std::size_t k = 2; k <= i; ++k) {
    const Rank next_t = std::min(t + from_true_t, f + from_false_t);
    const Rank next_f = std::min(t + from_true_f, f + from_false_f);
    t = next_t;
    f = next_f;
  }
  return make_posterior(chain_variable(i), calculus,
                        {Degree::kappa(t), Degree::kappa(f)});
}

Network fork_network(const ForkSpec& spec, Calculus calculus) {
  check_spec(spec);
  std::vector<Variable> vars{{kCauseVariable, kBinary}};
  std::vector<ConditionalTable> tables;
  if (calculus == Calculus::kProbability) {
    tables.push_back({kCauseVariable, {}, {prob_row(spec.prior)}});
  } else {
    tables.push_back({kCauseVariable, {}, {rank_row(spec.cause_rank, Rank(0))}});
  }
  for (std::size_t i = 1; i <= spec.effects; ++i) {
    vars.push_back({effect_variable(i), kBinary});
    if (calculus == Calculus::kProbability) {
      tables.push_back({effect_variable(i),
                        {kCauseVariable},
                        {prob_row(spec.effect_given_cause),
                         prob_row(spec.effect_given_absence)}});
    } else {
      tables.push_back({effect_variable(i),
                        {kCauseVariable},
                        {rank_row(Rank(0), spec.missed_effect_rank),
                         rank_row(spec.spurious_effect_rank, Rank(0))}});
    }
  }
  return Network(calculus, std::move(vars), std::move(tables));
}

PosteriorVector fork_posterior(const ForkSpec& spec, std::size_t observed,
                               ForkTarget target, Calculus calculus) {
  check_spec(spec);
  if (observed >= spec.effects) {
    throw Error(ErrorCode::kInvalidArgument,
                "observed count " + std::to_string(observed) +
                    " must be below the effect count " +
                    std::to_string(spec.effects));
  }
  const std::string name = target == ForkTarget::kCause
                               ? std::string(kCauseVariable)
                               : effect_variable(spec.effects);
  if (calculus == Calculus::kProbability) {
    // Joint weight of y and the observed effects, per value of y.
    double w_true = spec.prior;
    double w_false = 1.0 - spec.prior;
    for (std::size_t k = 0; k < observed; ++k) {
      w_true *= spec.effect_given_cause;
      w_false *= spec.effect_given_absence;
    }
    if (target == ForkTarget::kCause) {
      return make_posterior(name, calculus,
                            {Degree::probability(w_true),
                             Degree::probability(w_false)});
    }
    const double xn_true = spec.effect_given_cause * w_true +
                           spec.effect_given_absence * w_false;
    const double xn_false = (1.0 - spec.effect_given_cause) * w_true +
                            (1.0 - spec.effect_given_absence) * w_false;
    return make_posterior(name, calculus,
                          {Degree::probability(xn_true),
                           Degree::probability(xn_false)});
  }
  Rank w_true = spec.cause_rank;
  Rank w_false(0);
  for (std::size_t k = 0; k < observed; ++k) {
    w_false = w_false + spec.spurious_effect_rank;
  }
  if (target == ForkTarget::kCause) {
    return make_posterior(name, calculus,
                          {Degree::kappa(w_true), Degree::kappa(w_false)});
  }
  // kappa[xn] = min over y of kappa[xn | y] + weight(y).
  const Rank xn_true = std::min(w_true, spec.spurious_effect_rank + w_false);
  const Rank xn_false = std::min(spec.missed_effect_rank + w_true, w_false);
  return make_posterior(name, calculus,
                        {Degree::kappa(xn_true), Degree::kappa(xn_false)});
}

RankDifference belief_margin(const PosteriorVector& posterior) {
  if (posterior.calculus != Calculus::kKappa || posterior.degrees.size() != 2) {
    throw Error(ErrorCode::kContractViolation,
                "belief margin needs a binary kappa posterior");
  }
  return RankDifference::between(posterior.degrees[1].rank(),
                                 posterior.degrees[0].rank());
}

std::string margin_text(const RankDifference& margin) {
  switch (margin.kind) {
    case RankDifference::Kind::kPlusInfinity:
      return "certain";
    case RankDifference::Kind::kMinusInfinity:
      return "-certain";
    case RankDifference::Kind::kBothImpossible:
      return "impossible";
    case RankDifference::Kind::kFinite:
      break;
  }
  return std::to_string(margin.value);
}

FigureTable chain_figure(const ChainSpec& spec) {
  check_spec(spec);
  FigureTable table{{"distance", "probability", "kappa_margin"}, {}};
  for (std::size_t i = 2; i <= spec.length; ++i) {
    const auto p = chain_posterior(spec, i, Calculus::kProbability);
    const auto k = chain_posterior(spec, i, Calculus::kKappa);
    table.rows.push_back({std::to_string(i - 1),
                          internal::format_fixed(p.degrees[0].prob()),
                          margin_text(belief_margin(k))});
  }
  return table;
}

FigureTable fork_probability_figure(const ForkSpec& spec) {
  check_spec(spec);
  FigureTable table{{"observed", "p_" + std::string(kCauseVariable),
                     "p_" + effect_variable(spec.effects)},
                    {}};
  for (std::size_t i = 0; i < spec.effects; ++i) {
    const auto y = fork_posterior(spec, i, ForkTarget::kCause,
                                  Calculus::kProbability);
    const auto x = fork_posterior(spec, i, ForkTarget::kLastEffect,
                                  Calculus::kProbability);
    table.rows.push_back({std::to_string(i),
                          internal::format_fixed(y.degrees[0].prob()),
                          internal::format_fixed(x.degrees[0].prob())});
  }
  return table;
}

FigureTable fork_margin_figure(const ForkSpec& spec) {
  check_spec(spec);
  FigureTable table{{"observed", "margin_" + std::string(kCauseVariable),
                     "margin_" + effect_variable(spec.effects)},
                    {}};
  for (std::size_t i = 0; i < spec.effects; ++i) {
    const auto y = fork_posterior(spec, i, ForkTarget::kCause, Calculus::kKappa);
    const auto x = fork_posterior(spec, i, ForkTarget::kLastEffect,
                                  Calculus::kKappa);
    table.rows.push_back({std::to_string(i), margin_text(belief_margin(y)),
                          margin_text(belief_margin(x))});
  }
  return table;
}

std::string render_table(const FigureTable& table) {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << '\t';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out.str();
}

}  // namespace kappanet

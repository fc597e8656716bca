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

#include "kappanet/diagnosis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "format.hpp"
#include "kappanet/error.hpp"
#include "kappanet/inference.hpp"

namespace kappanet {

FaultSet parse_fault_set(std::string_view text) {
  FaultSet out;
  for (const auto& [variable, value] : parse_assignment(text)) {
    out.faults.push_back({variable, value});
  }
  return out;
}

void check_fault_set(const Network& net, const FaultSet& faults) {
  Assignment as_assignment;
  for (const auto& f : faults.faults) as_assignment.bind(f.variable, f.faulty_value);
  resolve_assignment(net, as_assignment);
}

std::string_view sigil(Annotation annotation) {
  switch (annotation) {
    case Annotation::kBelieved:
      return "+";
    case Annotation::kUncommitted:
      return "?";
    case Annotation::kNone:
      break;
  }
  return "";
}

Annotation annotate(std::span<const Degree> ranks, std::size_t faulty) {
  if (ranks[faulty].rank() != Rank(0)) return Annotation::kNone;
  for (std::size_t v = 0; v < ranks.size(); ++v) {
    if (v != faulty && ranks[v].rank() == Rank(0)) return Annotation::kUncommitted;
  }
  return Annotation::kBelieved;
}

namespace {

// Strictly more plausible: higher probability, or lower rank.
bool more_plausible(const Degree& a, const Degree& b) {
  if (a.calculus() == Calculus::kProbability) return a.prob() > b.prob();
  return a.rank() < b.rank();
}

}  // namespace

FaultRanking rank_faults(const Network& net, const Assignment& evidence,
                         const FaultSet& faults) {
  check_fault_set(net, faults);
  FaultRanking out;
  out.calculus = net.calculus();
  out.evidence = evidence;
  for (const auto& fault : faults.faults) {
    if (evidence.contains(fault.variable)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fault variable '" + fault.variable + "' is observed");
    }
    const auto posterior = eliminate_posterior(net, evidence, fault.variable);
    const std::size_t faulty = *net.variable(net.require_index(fault.variable))
                                    .value_index(fault.faulty_value);
    FaultRow row{fault.variable, posterior.degrees[faulty], Annotation::kNone};
    if (net.calculus() == Calculus::kKappa) {
      row.annotation = annotate(posterior.degrees, faulty);
    }
    out.rows.push_back(std::move(row));
  }
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const FaultRow& a, const FaultRow& b) {
                     return more_plausible(a.degree, b.degree);
                   });
  return out;
}

std::size_t distinct_levels(const FaultRanking& ranking) {
  std::vector<Degree> seen;
  for (const auto& row : ranking.rows) {
    if (std::find(seen.begin(), seen.end(), row.degree) == seen.end()) {
      seen.push_back(row.degree);
    }
  }
  return seen.size();
}

OrderingAgreement compare_orderings(const FaultRanking& a,
                                    const FaultRanking& b) {
  std::map<std::string, const Degree*> in_b;
  for (const auto& row : b.rows) in_b[row.fault] = &row.degree;
  std::map<std::string, const Degree*> in_a;
  for (const auto& row : a.rows) in_a[row.fault] = &row.degree;
  if (in_a.size() != in_b.size() || in_a.size() != a.rows.size() ||
      in_b.size() != b.rows.size() ||
      !std::equal(in_a.begin(), in_a.end(), in_b.begin(),
                  [](const auto& x, const auto& y) { return x.first == y.first; })) {
    throw Error(ErrorCode::kInvalidArgument,
                "orderings compare different fault sets");
  }

  // Walk pairs in name order so the result does not depend on which ranking
  // comes first.
  OrderingAgreement out;
  for (auto i = in_a.begin(); i != in_a.end(); ++i) {
    for (auto j = std::next(i); j != in_a.end(); ++j) {
      const Degree& ai = *i->second;
      const Degree& aj = *j->second;
      const Degree& bi = *in_b[i->first];
      const Degree& bj = *in_b[j->first];
      const int a_order = more_plausible(ai, aj) ? 1 : more_plausible(aj, ai) ? -1 : 0;
      const int b_order = more_plausible(bi, bj) ? 1 : more_plausible(bj, bi) ? -1 : 0;
      if (a_order == 0 || b_order == 0) continue;
      ++out.comparable;
      if (a_order == b_order) {
        ++out.agreeing;
      } else {
        out.inverted.emplace_back(i->first, j->first);
      }
    }
  }
  out.score = out.comparable == 0 ? 1.0
                                  : static_cast<double>(out.agreeing) /
                                        static_cast<double>(out.comparable);
  return out;
}

std::string_view to_string(FaultStatus status) {
  switch (status) {
    case FaultStatus::kBad:
      return "bad";
    case FaultStatus::kUnknown:
      return "?";
    case FaultStatus::kOk:
      break;
  }
  return "ok";
}

namespace {

FaultStatus status_of(Annotation annotation) {
  switch (annotation) {
    case Annotation::kBelieved:
      return FaultStatus::kBad;
    case Annotation::kUncommitted:
      return FaultStatus::kUnknown;
    case Annotation::kNone:
      break;
  }
  return FaultStatus::kOk;
}

SweepBlock sweep_block(const Network& net, const Network& kappa_net,
                       const SweepRun& run, const FaultSet& faults,
                       Epsilon eps) {
  SweepBlock block;
  block.epsilon = eps.value();
  block.ranking = rank_faults(kappa_net, run.evidence, faults);
  block.agreement = compare_orderings(run.probability, block.ranking);
  block.levels = distinct_levels(block.ranking);
  for (const auto& fault : faults.faults) {
    const std::size_t faulty = *net.variable(net.require_index(fault.variable))
                                    .value_index(fault.faulty_value);
    const auto c1 = c1_pipeline(net, run.evidence, fault.variable, eps);
    const auto c2 = eliminate_posterior(kappa_net, run.evidence, fault.variable);
    BeliefCell cell;
    cell.fault = fault.variable;
    cell.kappa = status_of(annotate(c2.degrees, faulty));
    cell.abstracted = status_of(annotate(c1.degrees, faulty));
    cell.differs = cell.kappa != cell.abstracted;
    block.cells.push_back(std::move(cell));
  }
  return block;
}

}  // namespace

SweepReport epsilon_sweep(const Network& net, std::span<const Assignment> runs,
                          const FaultSet& faults,
                          std::span<const Epsilon> epsilons) {
  require_valid(net);
  if (net.calculus() != Calculus::kProbability) {
    throw Error(ErrorCode::kInvalidArgument,
                "an epsilon sweep needs a probability network");
  }
  check_fault_set(net, faults);

  SweepReport report;
  report.faults = faults;
  std::vector<Network> kappa_nets;
  for (const Epsilon& eps : epsilons) {
    report.epsilons.push_back(eps.value());
    kappa_nets.push_back(translate_network(net, eps));
  }
  for (const Assignment& evidence : runs) {
    SweepRun run;
    run.evidence = evidence;
    try {
      run.probability = rank_faults(net, evidence, faults);
      for (std::size_t e = 0; e < epsilons.size(); ++e) {
        run.blocks.push_back(
            sweep_block(net, kappa_nets[e], run, faults, epsilons[e]));
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kImpossibleEvidence) throw;
      run.error = err.what();
      run.blocks.clear();
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

std::string render_ranking(const FaultRanking& ranking) {
  std::ostringstream out;
  out << "# fault ranking calculus=" << to_string(ranking.calculus)
      << " evidence=" << ranking.evidence.to_string() << '\n';
  out << "position\tfault\tdegree\tannotation\n";
  for (std::size_t i = 0; i < ranking.rows.size(); ++i) {
    const auto& row = ranking.rows[i];
    out << i + 1 << '\t' << row.fault << '\t' << to_string(row.degree) << '\t'
        << sigil(row.annotation) << '\n';
  }
  return out.str();
}

std::string render_sweep(const SweepReport& report) {
  std::ostringstream out;
  out << "# fault orderings\n";
  out << "run\tevidence\tcalculus\tagreement\tlevels\tordering\n";
  for (std::size_t r = 0; r < report.runs.size(); ++r) {
    const auto& run = report.runs[r];
    const std::string prefix =
        std::to_string(r + 1) + '\t' + run.evidence.to_string() + '\t';
    if (run.error) {
      out << prefix << "error\t-\t-\t" << *run.error << '\n';
      continue;
    }
    out << prefix << "Pr\t-\t" << distinct_levels(run.probability);
    for (const auto& row : run.probability.rows) out << '\t' << row.fault;
    out << '\n';
    for (const auto& block : run.blocks) {
      out << prefix << "kappa eps=" << internal::format_epsilon(block.epsilon)
          << '\t' << internal::format_fixed(block.agreement.score) << '\t'
          << block.levels;
      for (const auto& row : block.ranking.rows) {
        out << '\t' << row.fault << sigil(row.annotation);
      }
      out << '\n';
    }
  }

  for (std::size_t e = 0; e < report.epsilons.size(); ++e) {
    out << "\n# fault status eps=" << internal::format_epsilon(report.epsilons[e])
        << " (kappa: kappa network; pr: abstracted posterior; * marks a "
           "difference)\n";
    out << "run\tevidence";
    for (const auto& fault : report.faults.faults) {
      out << '\t' << fault.variable << ":kappa\t" << fault.variable << ":pr";
    }
    out << '\n';
    for (std::size_t r = 0; r < report.runs.size(); ++r) {
      const auto& run = report.runs[r];
      out << r + 1 << '\t' << run.evidence.to_string();
      if (run.error) {
        out << "\terror\n";
        continue;
      }
      for (const auto& cell : run.blocks[e].cells) {
        out << '\t' << to_string(cell.kappa) << '\t' << to_string(cell.abstracted)
            << (cell.differs ? "*" : "");
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace kappanet

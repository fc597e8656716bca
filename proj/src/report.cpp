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

#include "kappanet/report.hpp"

#include <sstream>

#include "format.hpp"

namespace kappanet {
namespace {

std::string belief_cell(const PosteriorVector& posterior) {
  if (posterior.calculus != Calculus::kKappa || posterior.degrees.size() != 2) {
    return "-";
  }
  return to_string(classify_belief(posterior));
}

void posterior_row(std::ostream& out, const PosteriorVector& posterior) {
  out << to_string(posterior.calculus);
  for (const auto& d : posterior.degrees) out << '\t' << to_string(d);
  out << '\t' << belief_cell(posterior) << '\n';
}

}  // namespace

std::string render_posterior(const Network& net, const Assignment& evidence,
                             const PosteriorVector& posterior) {
  std::ostringstream out;
  out << "# query target=" << posterior.variable
      << " evidence=" << evidence.to_string()
      << " calculus=" << to_string(posterior.calculus) << '\n';
  out << "value\tdegree\n";
  const Variable& var = net.variable(net.require_index(posterior.variable));
  for (std::size_t v = 0; v < var.cardinality(); ++v) {
    out << var.values[v] << '\t' << to_string(posterior.degrees[v]) << '\n';
  }
  if (posterior.calculus == Calculus::kKappa && var.cardinality() == 2) {
    out << "# " << var.values[0] << ": " << belief_cell(posterior) << '\n';
  }
  return out.str();
}

std::string render_discrepancy(const DiscrepancyReport& report,
                               const Assignment& evidence, bool raw) {
  std::ostringstream out;
  out << "# compare target=" << report.target
      << " epsilon=" << internal::format_epsilon(report.epsilon)
      << " evidence=" << evidence.to_string() << '\n';
  out << "value";
  if (raw) out << "\tprobability\tc1_raw";
  out << "\tc1\tc2\tdifference\n";
  for (const auto& rec : report.records) {
    out << rec.value;
    if (raw) {
      out << '\t' << internal::format_fixed(rec.probability) << '\t'
          << to_string(rec.c1_raw);
    }
    out << '\t' << to_string(rec.c1) << '\t' << to_string(rec.c2) << '\t'
        << to_string(rec.difference) << '\n';
  }
  if (report.orderings_agree) {
    out << "# ordering: compatible\n";
  } else {
    out << "# ordering: inverted";
    for (const auto& [a, b] : report.inversions) out << " (" << a << "," << b << ")";
    out << '\n';
  }
  return out.str();
}

std::string render_chain(const ChainSpec& spec, bool figure) {
  std::ostringstream out;
  const std::string target = chain_variable(spec.length);
  out << "# chain length=" << spec.length
      << " epsilon=" << internal::format_epsilon(spec.epsilon)
      << " target=" << target << " evidence=" << chain_variable(1) << "=true\n";
  out << "calculus\ttrue\tfalse\tbelief\n";
  posterior_row(out, chain_posterior(spec, spec.length, Calculus::kProbability));
  posterior_row(out, chain_posterior(spec, spec.length, Calculus::kKappa));
  if (figure) {
    out << "\n# figure: belief in X_i against distance i-1 from X1\n"
        << render_table(chain_figure(spec));
  }
  return out.str();
}

std::string render_fork(const ForkSpec& spec, std::size_t observe, bool figure) {
  std::ostringstream out;
  std::string evidence;
  for (std::size_t i = 1; i <= observe; ++i) {
    if (i > 1) evidence += ',';
    evidence += effect_variable(i) + "=true";
  }
  out << "# fork effects=" << spec.effects << " observe=" << observe
      << " evidence=" << evidence << '\n';
  out << "target\tcalculus\ttrue\tfalse\tbelief\n";
  for (ForkTarget target : {ForkTarget::kCause, ForkTarget::kLastEffect}) {
    for (Calculus calculus : {Calculus::kProbability, Calculus::kKappa}) {
      const auto posterior = fork_posterior(spec, observe, target, calculus);
      out << posterior.variable << '\t';
      posterior_row(out, posterior);
    }
  }
  if (figure) {
    out << "\n# figure: probability of Y and X_n against observed effects\n"
        << render_table(fork_probability_figure(spec))
        << "\n# figure: kappa[z-] - kappa[z+] against observed effects\n"
        << render_table(fork_margin_figure(spec));
  }
  return out.str();
}

}  // namespace kappanet

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

#include "kappanet/kappanet.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "kappanet/abstraction.hpp"
#include "kappanet/analytic.hpp"
#include "kappanet/diagnosis.hpp"
#include "kappanet/document.hpp"
#include "kappanet/error.hpp"
#include "kappanet/inference.hpp"
#include "kappanet/report.hpp"

struct kn_network {
  kappanet::Network net;
};

namespace {

using kappanet::Error;
using kappanet::ErrorCode;

thread_local std::string last_error;

kn_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return KN_INVALID_ARGUMENT;
    case ErrorCode::kContractViolation:
      return KN_CONTRACT_VIOLATION;
    case ErrorCode::kValidation:
      return KN_VALIDATION;
    case ErrorCode::kParse:
      return KN_PARSE;
    case ErrorCode::kImpossibleEvidence:
      return KN_IMPOSSIBLE_EVIDENCE;
    case ErrorCode::kIo:
      return KN_IO;
  }
  return KN_INTERNAL;
}

template <class F>
kn_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return KN_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return KN_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

kn_network* wrap(kappanet::Network net) {
  return new kn_network{std::move(net)};
}

kappanet::Calculus calculus_of(kn_calculus c) {
  return c == KN_KAPPA ? kappanet::Calculus::kKappa
                       : kappanet::Calculus::kProbability;
}

kn_degree degree_of(const kappanet::Degree& d) {
  kn_degree out{};
  if (d.calculus() == kappanet::Calculus::kProbability) {
    out.calculus = KN_PROBABILITY;
    out.probability = d.prob();
  } else {
    out.calculus = KN_KAPPA;
    out.infinite = d.rank().is_infinite() ? 1 : 0;
    out.rank = d.rank().is_infinite() ? 0 : d.rank().value();
  }
  return out;
}

std::string text_or_empty(const char* s) { return s == nullptr ? "" : s; }

}  // namespace

extern "C" {

const char* kn_last_error(void) { return last_error.c_str(); }

const char* kn_status_name(kn_status status) {
  switch (status) {
    case KN_OK:
      return "ok";
    case KN_INVALID_ARGUMENT:
      return "invalid argument";
    case KN_CONTRACT_VIOLATION:
      return "contract violation";
    case KN_VALIDATION:
      return "invalid network";
    case KN_PARSE:
      return "parse error";
    case KN_IMPOSSIBLE_EVIDENCE:
      return "impossible evidence";
    case KN_IO:
      return "i/o error";
    case KN_INTERNAL:
      break;
  }
  return "internal error";
}

void kn_string_free(char* text) { std::free(text); }

kn_status kn_network_load(const char* path, kn_network** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(kappanet::load_network(path));
  });
}

kn_status kn_network_parse(const char* text, size_t length, kn_network** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(kappanet::parse_network(std::string_view(text, length)));
  });
}

kn_status kn_network_save(const kn_network* net, const char* path) {
  return guarded([&] {
    require(net, "network");
    require(path, "path");
    kappanet::save_network(net->net, path);
  });
}

kn_status kn_network_serialize(const kn_network* net, char** out) {
  return guarded([&] {
    require(net, "network");
    require(out, "out");
    *out = copy_out(kappanet::serialize_network(net->net));
  });
}

void kn_network_free(kn_network* net) { delete net; }

kn_calculus kn_network_calculus(const kn_network* net) {
  return net != nullptr && net->net.calculus() == kappanet::Calculus::kKappa
             ? KN_KAPPA
             : KN_PROBABILITY;
}

size_t kn_network_variable_count(const kn_network* net) {
  return net == nullptr ? 0 : net->net.size();
}

const char* kn_network_variable_name(const kn_network* net, size_t index) {
  if (net == nullptr || index >= net->net.size()) return nullptr;
  return net->net.variable(index).name.c_str();
}

kn_status kn_network_abstract(const kn_network* net, double epsilon,
                              kn_network** out) {
  return guarded([&] {
    require(net, "network");
    require(out, "out");
    *out = wrap(kappanet::translate_network(net->net, kappanet::Epsilon(epsilon)));
  });
}

kn_status kn_chain_network(size_t length, double epsilon, kn_calculus calculus,
                           kn_network** out) {
  return guarded([&] {
    require(out, "out");
    kappanet::ChainSpec spec;
    spec.length = length;
    spec.epsilon = epsilon;
    *out = wrap(kappanet::chain_network(spec, calculus_of(calculus)));
  });
}

kn_status kn_fork_network(size_t effects, kn_calculus calculus,
                          kn_network** out) {
  return guarded([&] {
    require(out, "out");
    kappanet::ForkSpec spec;
    spec.effects = effects;
    *out = wrap(kappanet::fork_network(spec, calculus_of(calculus)));
  });
}

kn_status kn_query(const kn_network* net, const char* evidence,
                   const char* target, kn_degree* degrees, size_t capacity,
                   size_t* count) {
  return guarded([&] {
    require(net, "network");
    require(target, "target");
    require(count, "count");
    const auto posterior = kappanet::eliminate_posterior(
        net->net, kappanet::parse_assignment(text_or_empty(evidence)), target);
    *count = posterior.degrees.size();
    if (posterior.degrees.size() > capacity || degrees == nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  "degree buffer holds " + std::to_string(capacity) +
                      " entries, need " +
                      std::to_string(posterior.degrees.size()));
    }
    for (std::size_t i = 0; i < posterior.degrees.size(); ++i) {
      degrees[i] = degree_of(posterior.degrees[i]);
    }
  });
}

kn_status kn_translate_degree(double probability, double epsilon,
                              kn_degree* out) {
  return guarded([&] {
    require(out, "out");
    *out = degree_of(kappanet::Degree::kappa(
        kappanet::translate_degree(probability, kappanet::Epsilon(epsilon))));
  });
}

kn_status kn_report_query(const kn_network* net, const char* evidence,
                          const char* target, char** out) {
  return guarded([&] {
    require(net, "network");
    require(target, "target");
    require(out, "out");
    const auto assignment = kappanet::parse_assignment(text_or_empty(evidence));
    const auto posterior =
        kappanet::eliminate_posterior(net->net, assignment, target);
    *out = copy_out(kappanet::render_posterior(net->net, assignment, posterior));
  });
}

kn_status kn_report_compare(const kn_network* net, const char* evidence,
                            const char* target, double epsilon, int raw,
                            char** out) {
  return guarded([&] {
    require(net, "network");
    require(target, "target");
    require(out, "out");
    const auto assignment = kappanet::parse_assignment(text_or_empty(evidence));
    const auto report = kappanet::compare_c1_c2(net->net, assignment, target,
                                                kappanet::Epsilon(epsilon));
    *out = copy_out(kappanet::render_discrepancy(report, assignment, raw != 0));
  });
}

kn_status kn_report_diagnose(const kn_network* net,
                             const char* const* evidence_runs,
                             size_t run_count, const char* faults,
                             const double* epsilons, size_t epsilon_count,
                             char** out) {
  return guarded([&] {
    require(net, "network");
    require(faults, "faults");
    require(out, "out");
    if (run_count > 0) require(evidence_runs, "evidence runs");
    if (epsilon_count > 0) require(epsilons, "epsilons");
    std::vector<kappanet::Assignment> runs;
    for (size_t i = 0; i < run_count; ++i) {
      runs.push_back(kappanet::parse_assignment(text_or_empty(evidence_runs[i])));
    }
    if (runs.empty()) runs.emplace_back();
    const auto fault_set = kappanet::parse_fault_set(faults);
    std::string text;
    if (epsilon_count == 0) {
      for (const auto& run : runs) {
        text += kappanet::render_ranking(
            kappanet::rank_faults(net->net, run, fault_set));
      }
    } else {
      std::vector<kappanet::Epsilon> eps;
      for (size_t i = 0; i < epsilon_count; ++i) eps.emplace_back(epsilons[i]);
      text = kappanet::render_sweep(
          kappanet::epsilon_sweep(net->net, runs, fault_set, eps));
    }
    *out = copy_out(text);
  });
}

kn_status kn_report_chain(size_t length, double epsilon, int figure,
                          char** out) {
  return guarded([&] {
    require(out, "out");
    kappanet::ChainSpec spec;
    spec.length = length;
    spec.epsilon = epsilon;
    *out = copy_out(kappanet::render_chain(spec, figure != 0));
  });
}

kn_status kn_report_fork(size_t effects, size_t observe, int figure,
                         char** out) {
  return guarded([&] {
    require(out, "out");
    kappanet::ForkSpec spec;
    spec.effects = effects;
    *out = copy_out(kappanet::render_fork(spec, observe, figure != 0));
  });
}

kn_status kn_figure_data(int figure, size_t size, double epsilon, char** out) {
  return guarded([&] {
    require(out, "out");
    kappanet::FigureTable table;
    if (figure == KN_FIGURE_CHAIN_BELIEF) {
      kappanet::ChainSpec spec;
      spec.length = size;
      spec.epsilon = epsilon;
      table = kappanet::chain_figure(spec);
    } else if (figure == KN_FIGURE_FORK_PROBABILITY ||
               figure == KN_FIGURE_FORK_MARGIN) {
      kappanet::ForkSpec spec;
      spec.effects = size;
      table = figure == KN_FIGURE_FORK_PROBABILITY
                  ? kappanet::fork_probability_figure(spec)
                  : kappanet::fork_margin_figure(spec);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown figure id " + std::to_string(figure));
    }
    *out = copy_out(kappanet::render_table(table));
  });
}

}  // extern "C"

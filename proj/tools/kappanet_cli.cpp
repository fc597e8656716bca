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

// kappanet command line front end. Everything goes through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kappanet/kappanet.h"

namespace {

// Library failure carrying the status and message already captured.
struct Failure {
  kn_status status;
  std::string message;
};

void check(kn_status status) {
  if (status != KN_OK) throw Failure{status, kn_last_error()};
}

struct NetworkDeleter {
  void operator()(kn_network* net) const { kn_network_free(net); }
};
using NetworkPtr = std::unique_ptr<kn_network, NetworkDeleter>;

struct StringDeleter {
  void operator()(char* s) const { kn_string_free(s); }
};
using OwnedText = std::unique_ptr<char, StringDeleter>;

NetworkPtr load(const std::string& path) {
  kn_network* net = nullptr;
  check(kn_network_load(path.c_str(), &net));
  return NetworkPtr(net);
}

void emit(char* raw) {
  OwnedText text(raw);
  std::fputs(text.get(), stdout);
}

void write_file(const std::string& path, char* raw) {
  OwnedText text(raw);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text.get()) || !out.flush()) {
    throw Failure{KN_IO, "cannot write '" + path + "'"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact inference under probability and kappa calculi"};
  app.require_subcommand(1);

  std::string network;
  std::string evidence;
  std::vector<std::string> evidence_runs;
  std::string target;
  std::string out_path;
  std::string faults;
  std::string figure_dir;
  std::vector<double> epsilons;
  double epsilon = 0.2;
  std::size_t length = 0;
  std::size_t effects = 0;
  std::size_t observe = 0;
  bool raw = false;
  bool figure = false;

  auto* query = app.add_subcommand("query", "Posterior of a target variable");
  query->add_option("--network", network, "Network file")->required();
  query->add_option("--evidence", evidence, "Var=value[,Var=value...]");
  query->add_option("--target", target, "Target variable")->required();

  auto* abstract = app.add_subcommand(
      "abstract", "Translate a probability network into a kappa network");
  abstract->add_option("--network", network, "Network file")->required();
  abstract->add_option("--epsilon", epsilon, "Abstraction parameter")->required();
  abstract->add_option("--out", out_path, "Output network file")->required();

  auto* compare = app.add_subcommand(
      "compare", "Abstract-after-inference versus inference-after-abstraction");
  compare->add_option("--network", network, "Probability network file")->required();
  compare->add_option("--epsilon", epsilon, "Abstraction parameter")->required();
  compare->add_option("--evidence", evidence, "Var=value[,Var=value...]");
  compare->add_option("--target", target, "Target variable")->required();
  compare->add_flag("--raw", raw, "Also print probabilities and unnormalized ranks");

  auto* diagnose = app.add_subcommand("diagnose", "Rank faults");
  diagnose->add_option("--network", network, "Network file")->required();
  diagnose->add_option("--evidence", evidence_runs,
                       "Var=value[,...]; repeat for several runs");
  diagnose->add_option("--faults", faults, "Var=faulty_value[,...]")->required();
  diagnose->add_option("--epsilon", epsilons, "Sweep values E[,E...]")
      ->delimiter(',');

  auto* chain = app.add_subcommand("chain", "Chain X1 -> ... -> Xn analysis");
  chain->add_option("--length", length, "Number of variables")->required();
  chain->add_option("--epsilon", epsilon, "Abstraction parameter");
  chain->add_flag("--figure", figure, "Append figure data");
  chain->add_option("--figure-dir", figure_dir, "Write chain_belief.tsv here");

  auto* fork = app.add_subcommand("fork", "Fork Y -> X1..Xn analysis");
  fork->add_option("--effects", effects, "Number of effects")->required();
  fork->add_option("--observe", observe, "Effects observed true")->required();
  fork->add_flag("--figure", figure, "Append figure data");
  fork->add_option("--figure-dir", figure_dir,
                   "Write fork_probability.tsv and fork_margin.tsv here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ExtrasError& e) {
    std::cerr << "kappanet: unknown option: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "kappanet: usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    char* text = nullptr;
    if (*query) {
      auto net = load(network);
      check(kn_report_query(net.get(), evidence.c_str(), target.c_str(), &text));
      emit(text);
    } else if (*abstract) {
      auto net = load(network);
      kn_network* translated = nullptr;
      check(kn_network_abstract(net.get(), epsilon, &translated));
      NetworkPtr owned(translated);
      check(kn_network_save(owned.get(), out_path.c_str()));
    } else if (*compare) {
      auto net = load(network);
      check(kn_report_compare(net.get(), evidence.c_str(), target.c_str(),
                              epsilon, raw ? 1 : 0, &text));
      emit(text);
    } else if (*diagnose) {
      auto net = load(network);
      std::vector<const char*> runs;
      for (const auto& run : evidence_runs) runs.push_back(run.c_str());
      check(kn_report_diagnose(net.get(), runs.data(), runs.size(),
                               faults.c_str(), epsilons.data(),
                               epsilons.size(), &text));
      emit(text);
    } else if (*chain) {
      check(kn_report_chain(length, epsilon, figure ? 1 : 0, &text));
      emit(text);
      if (!figure_dir.empty()) {
        check(kn_figure_data(KN_FIGURE_CHAIN_BELIEF, length, epsilon, &text));
        write_file(figure_dir + "/chain_belief.tsv", text);
      }
    } else if (*fork) {
      check(kn_report_fork(effects, observe, figure ? 1 : 0, &text));
      emit(text);
      if (!figure_dir.empty()) {
        check(kn_figure_data(KN_FIGURE_FORK_PROBABILITY, effects, 0.0, &text));
        write_file(figure_dir + "/fork_probability.tsv", text);
        check(kn_figure_data(KN_FIGURE_FORK_MARGIN, effects, 0.0, &text));
        write_file(figure_dir + "/fork_margin.tsv", text);
      }
    }
  } catch (const Failure& f) {
    std::cerr << "kappanet: " << kn_status_name(f.status) << ": " << f.message
              << '\n';
    return 1;
  }
  return 0;
}

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

#include "kappanet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kappanet/error.hpp"

namespace kappanet {

std::optional<std::size_t> Variable::value_index(std::string_view value) const {
  auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

Assignment::Assignment(std::initializer_list<Binding> bindings) {
  for (const auto& [variable, value] : bindings) bind(variable, value);
}

void Assignment::bind(std::string variable, std::string value) {
  if (contains(variable)) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable '" + variable + "' is bound twice");
  }
  bindings_.emplace_back(std::move(variable), std::move(value));
}

const std::string* Assignment::find(std::string_view variable) const {
  for (const auto& [name, value] : bindings_) {
    if (name == variable) return &value;
  }
  return nullptr;
}

std::string Assignment::to_string() const {
  std::string out;
  for (const auto& [name, value] : bindings_) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += value;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

}  // namespace

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    const auto eq = token.find('=');
    if (eq == std::string_view::npos || token.find('=', eq + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed evidence '" + std::string(text) +
                      "': expected Var=value, got '" + std::string(token) +
                      "'");
    }
    const auto name = trim(token.substr(0, eq));
    const auto value = trim(token.substr(eq + 1));
    if (name.empty() || value.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed evidence '" + std::string(text) +
                      "': empty name or value in '" + std::string(token) +
                      "'");
    }
    if (out.contains(name)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed evidence '" + std::string(text) + "': '" +
                      std::string(name) + "' appears twice");
    }
    out.bind(std::string(name), std::string(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Network::Network(Calculus calculus, std::vector<Variable> variables,
                 std::vector<ConditionalTable> tables,
                 std::optional<double> epsilon)
    : calculus_(calculus),
      variables_(std::move(variables)),
      tables_(std::move(tables)),
      epsilon_(epsilon) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    variable_index_.try_emplace(variables_[i].name, i);
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    table_index_.try_emplace(tables_[i].child, i);
  }
}

std::optional<std::size_t> Network::index_of(std::string_view name) const {
  auto it = variable_index_.find(name);
  if (it == variable_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Network::require_index(std::string_view name) const {
  if (auto index = index_of(name)) return *index;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown variable '" + std::string(name) + "'");
}

const ConditionalTable* Network::table_for(std::string_view child) const {
  auto it = table_index_.find(child);
  if (it == table_index_.end()) return nullptr;
  return &tables_[it->second];
}

std::string to_string(const Violation& violation) {
  return violation.element + ": " + violation.message;
}

namespace {

void check_variables(const Network& net, std::vector<Violation>& out) {
  std::set<std::string, std::less<>> seen;
  for (const auto& var : net.variables()) {
    const std::string element = "variable '" + var.name + "'";
    if (var.name.empty()) out.push_back({element, "name must be nonempty"});
    if (!seen.insert(var.name).second) {
      out.push_back({element, "duplicate variable name"});
    }
    if (var.values.size() < 2) {
      out.push_back({element, "domain must have at least 2 values"});
    }
    std::set<std::string, std::less<>> values;
    for (const auto& value : var.values) {
      if (value.empty()) out.push_back({element, "value name must be nonempty"});
      if (!values.insert(value).second) {
        out.push_back({element, "duplicate value '" + value + "'"});
      }
    }
  }
}

void check_row(const Network& net, const std::string& element,
               const std::vector<Degree>& row, std::vector<Violation>& out) {
  for (const auto& degree : row) {
    if (degree.calculus() != net.calculus()) {
      out.push_back({element, "degree does not belong to the " +
                                  std::string(to_string(net.calculus())) +
                                  " calculus"});
      return;
    }
  }
  if (net.calculus() == Calculus::kProbability) {
    double sum = 0.0;
    for (const auto& degree : row) {
      const double p = degree.prob();
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        out.push_back({element, "probability must lie in [0, 1]"});
        return;
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      out.push_back({element, "row must sum to 1"});
    }
  } else {
    Rank min = Rank::infinity();
    for (const auto& degree : row) min = std::min(min, degree.rank());
    if (min != Rank(0)) out.push_back({element, "row minimum must be 0"});
  }
}

void check_table(const Network& net, const ConditionalTable& table,
                 std::vector<Violation>& out) {
  const std::string element = "table '" + table.child + "'";
  const auto child = net.index_of(table.child);
  if (!child) {
    out.push_back({element, "child is not a declared variable"});
    return;
  }
  std::vector<std::size_t> radices;
  bool parents_ok = true;
  std::set<std::string, std::less<>> seen;
  for (const auto& parent : table.parents) {
    const auto index = net.index_of(parent);
    if (!index) {
      out.push_back({element, "parent '" + parent + "' is not a declared variable"});
      parents_ok = false;
      continue;
    }
    if (parent == table.child) {
      out.push_back({element, "variable cannot be its own parent"});
      parents_ok = false;
    }
    if (!seen.insert(parent).second) {
      out.push_back({element, "duplicate parent '" + parent + "'"});
      parents_ok = false;
    }
    radices.push_back(net.variable(*index).cardinality());
  }
  if (!parents_ok) return;
  const std::size_t expected_rows = radix_product(radices);
  if (table.rows.size() != expected_rows) {
    out.push_back({element, "has " + std::to_string(table.rows.size()) +
                                " rows, expected " +
                                std::to_string(expected_rows)});
    return;
  }
  const std::size_t width = net.variable(*child).cardinality();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string row_element = element + " row " + std::to_string(r);
    if (table.rows[r].size() != width) {
      out.push_back({row_element, "has " + std::to_string(table.rows[r].size()) +
                                      " degrees, expected " +
                                      std::to_string(width)});
      continue;
    }
    check_row(net, row_element, table.rows[r], out);
  }
}

// Kahn's algorithm over the declared parent links; whatever cannot be
// scheduled lies on or downstream of a cycle.
std::vector<std::size_t> kahn_order(const Network& net,
                                    std::vector<std::size_t>* stuck) {
  const std::size_t n = net.size();
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto* table = net.table_for(net.variable(v).name);
    if (!table) continue;
    for (const auto& parent : table->parents) {
      const auto p = net.index_of(parent);
      if (!p || *p == v) continue;
      children[*p].push_back(v);
      ++indegree[v];
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  // Repeatedly take the earliest-declared ready variable: deterministic.
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == n) break;
    done[pick] = true;
    order.push_back(pick);
    for (std::size_t c : children[pick]) --indegree[c];
  }
  if (stuck) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v]) stuck->push_back(v);
    }
  }
  return order;
}

}  // namespace

std::vector<Violation> validate_network(const Network& net) {
  std::vector<Violation> out;
  if (auto eps = net.epsilon(); eps && !(*eps > 0.0 && *eps < 1.0)) {
    out.push_back({"network", "epsilon must lie strictly between 0 and 1"});
  }
  check_variables(net, out);

  std::map<std::string, int, std::less<>> table_count;
  for (const auto& table : net.tables()) {
    ++table_count[table.child];
    check_table(net, table, out);
  }
  for (const auto& var : net.variables()) {
    const auto it = table_count.find(var.name);
    if (it == table_count.end()) {
      out.push_back({"variable '" + var.name + "'", "has no table"});
    } else if (it->second > 1) {
      out.push_back({"variable '" + var.name + "'", "has more than one table"});
    }
  }

  std::vector<std::size_t> stuck;
  kahn_order(net, &stuck);
  if (!stuck.empty()) {
    std::string names;
    for (std::size_t v : stuck) {
      if (!names.empty()) names += ", ";
      names += net.variable(v).name;
    }
    out.push_back({"network", "cycle detected among {" + names + "}"});
  }
  return out;
}

void require_valid(const Network& net) {
  const auto violations = validate_network(net);
  if (violations.empty()) return;
  std::string message = "invalid network";
  for (const auto& v : violations) message += "; " + to_string(v);
  throw Error(ErrorCode::kValidation, message);
}

std::vector<std::size_t> topological_order(const Network& net) {
  std::vector<std::size_t> stuck;
  auto order = kahn_order(net, &stuck);
  if (!stuck.empty()) {
    throw Error(ErrorCode::kValidation, "network is not acyclic");
  }
  return order;
}

std::size_t flat_index(std::span<const std::size_t> digits,
                       std::span<const std::size_t> radices) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    index = index * radices[i] + digits[i];
  }
  return index;
}

void unflatten(std::size_t index, std::span<const std::size_t> radices,
               std::span<std::size_t> digits) {
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = index % radices[i];
    index /= radices[i];
  }
}

std::size_t radix_product(std::span<const std::size_t> radices) {
  std::size_t product = 1;
  for (std::size_t r : radices) product *= r;
  return product;
}

std::vector<std::pair<std::size_t, std::size_t>> resolve_assignment(
    const Network& net, const Assignment& assignment) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(assignment.size());
  for (const auto& [name, value] : assignment) {
    const std::size_t var = net.require_index(name);
    const auto val = net.variable(var).value_index(value);
    if (!val) {
      throw Error(ErrorCode::kInvalidArgument,
                  "value '" + value + "' is not in the domain of '" + name +
                      "'");
    }
    out.emplace_back(var, *val);
  }
  return out;
}

}  // namespace kappanet

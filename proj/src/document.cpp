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

#include "kappanet/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kappanet/error.hpp"

namespace kappanet {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<const char*> allowed,
               const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown key '" + key + "'");
  }
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Degree parse_degree(const Json& j, Calculus calculus, const std::string& where) {
  if (calculus == Calculus::kProbability) {
    if (!j.is_number()) fail(where, "expected a number");
    return Degree::probability(j.get<double>());
  }
  if (j.is_string() && j.get<std::string>() == "inf") {
    return Degree::kappa(Rank::infinity());
  }
  if (!j.is_number_unsigned() &&
      !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(where, "expected a nonnegative integer or \"inf\"");
  }
  return Degree::kappa(Rank(j.get<std::uint64_t>()));
}

std::string describe_row(const std::vector<std::string>& parents,
                         const std::vector<std::string>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (i) out += ", ";
    out += parents[i] + "=" + values[i];
  }
  return out + ")";
}

ConditionalTable parse_table(const Json& j, Calculus calculus,
                             const std::vector<Variable>& variables,
                             const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  only_keys(j, {"child", "parents", "rows"}, where);
  ConditionalTable table;
  table.child = as_string(member(j, "child", where), where + ".child");
  const std::string name = where + " ('" + table.child + "')";
  if (j.contains("parents")) {
    table.parents = as_strings(j["parents"], name + ".parents");
  }

  // Resolve parent domains; unknown parents are left to validation, which
  // reports them by name, so rows can only be keyed when all parents exist.
  std::vector<const Variable*> parent_vars;
  for (const auto& p : table.parents) {
    const Variable* found = nullptr;
    for (const auto& v : variables) {
      if (v.name == p) found = &v;
    }
    if (!found) fail(name, "parent '" + p + "' is not a declared variable");
    parent_vars.push_back(found);
  }
  std::vector<std::size_t> radices;
  for (const auto* v : parent_vars) radices.push_back(v->cardinality());

  const Json& rows = member(j, "rows", name);
  if (!rows.is_array()) fail(name + ".rows", "expected an array");
  std::vector<std::optional<std::vector<Degree>>> slots(radix_product(radices));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rw = name + ".rows[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    if (!row.is_object()) fail(rw, "expected an object");
    only_keys(row, {"parents", "degrees"}, rw);
    std::vector<std::string> key;
    if (row.contains("parents")) key = as_strings(row["parents"], rw + ".parents");
    if (key.size() != table.parents.size()) {
      fail(rw, "row key has " + std::to_string(key.size()) +
                   " parent values, expected " +
                   std::to_string(table.parents.size()));
    }
    std::vector<std::size_t> digits;
    for (std::size_t p = 0; p < key.size(); ++p) {
      const auto idx = parent_vars[p]->value_index(key[p]);
      if (!idx) {
        fail(rw, "value '" + key[p] + "' is not in the domain of '" +
                     table.parents[p] + "'");
      }
      digits.push_back(*idx);
    }
    auto& slot = slots[flat_index(digits, radices)];
    if (slot) {
      fail(name, "duplicate row for parent assignment " +
                     describe_row(table.parents, key));
    }
    const Json& degrees = member(row, "degrees", rw);
    if (!degrees.is_array()) fail(rw + ".degrees", "expected an array");
    std::vector<Degree> values;
    for (std::size_t d = 0; d < degrees.size(); ++d) {
      values.push_back(parse_degree(
          degrees[d], calculus, rw + ".degrees[" + std::to_string(d) + "]"));
    }
    slot = std::move(values);
  }

  std::vector<std::size_t> digits(radices.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      unflatten(i, radices, digits);
      std::vector<std::string> key;
      for (std::size_t p = 0; p < digits.size(); ++p) {
        key.push_back(parent_vars[p]->values[digits[p]]);
      }
      fail(name, "missing row for parent assignment " +
                     describe_row(table.parents, key));
    }
    table.rows.push_back(std::move(*slots[i]));
  }
  return table;
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Network parse_network(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Keep only the reason; the position is reported in our own form.
    std::string reason = e.what();
    if (const auto colon = reason.find(": "); colon != std::string::npos) {
      reason = reason.substr(colon + 2);
    }
    throw Error(ErrorCode::kParse,
                "syntax error at " + position_of(text, e.byte) + ": " + reason);
  }
  if (!root.is_object()) fail("document", "expected a JSON object");
  only_keys(root, {"calculus", "epsilon", "variables", "tables"}, "document");

  const std::string calc_text =
      as_string(member(root, "calculus", "document"), "calculus");
  const auto calculus = parse_calculus(calc_text);
  if (!calculus) fail("calculus", "expected \"probability\" or \"kappa\"");

  std::optional<double> epsilon;
  if (root.contains("epsilon")) {
    if (!root["epsilon"].is_number()) fail("epsilon", "expected a number");
    epsilon = root["epsilon"].get<double>();
  }

  const Json& vars = member(root, "variables", "document");
  if (!vars.is_array()) fail("variables", "expected an array");
  std::vector<Variable> variables;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "variables[" + std::to_string(i) + "]";
    if (!vars[i].is_object()) fail(where, "expected an object");
    only_keys(vars[i], {"name", "values"}, where);
    variables.push_back(
        {as_string(member(vars[i], "name", where), where + ".name"),
         as_strings(member(vars[i], "values", where), where + ".values")});
  }

  const Json& tabs = member(root, "tables", "document");
  if (!tabs.is_array()) fail("tables", "expected an array");
  std::vector<ConditionalTable> tables;
  for (std::size_t i = 0; i < tabs.size(); ++i) {
    tables.push_back(parse_table(tabs[i], *calculus, variables,
                                 "tables[" + std::to_string(i) + "]"));
  }

  Network net(*calculus, std::move(variables), std::move(tables), epsilon);
  require_valid(net);
  return net;
}

std::string serialize_network(const Network& net) {
  Json root;
  root["calculus"] = std::string(to_string(net.calculus()));
  if (net.epsilon()) root["epsilon"] = *net.epsilon();
  root["variables"] = Json::array();
  for (const auto& v : net.variables()) {
    root["variables"].push_back(Json{{"name", v.name}, {"values", v.values}});
  }
  root["tables"] = Json::array();
  for (const ConditionalTable& t : net.tables()) {
    const ConditionalTable* table = &t;
    std::vector<std::size_t> radices;
    for (const auto& p : table->parents) {
      radices.push_back(net.variable(net.require_index(p)).cardinality());
    }
    Json rows = Json::array();
    std::vector<std::size_t> digits(radices.size());
    for (std::size_t r = 0; r < table->rows.size(); ++r) {
      unflatten(r, radices, digits);
      Json key = Json::array();
      for (std::size_t p = 0; p < digits.size(); ++p) {
        key.push_back(
            net.variable(net.require_index(table->parents[p])).values[digits[p]]);
      }
      Json degrees = Json::array();
      for (const auto& d : table->rows[r]) {
        if (d.calculus() == Calculus::kProbability) {
          degrees.push_back(d.prob());
        } else if (d.rank().is_infinite()) {
          degrees.push_back("inf");
        } else {
          degrees.push_back(d.rank().value());
        }
      }
      rows.push_back(Json{{"parents", key}, {"degrees", degrees}});
    }
    root["tables"].push_back(
        Json{{"child", table->child}, {"parents", table->parents}, {"rows", rows}});
  }
  return root.dump(2) + "\n";
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo,
                "cannot read network file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

void save_network(const Network& net, const std::filesystem::path& path) {
  const std::string text = serialize_network(net);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw Error(ErrorCode::kIo,
                "cannot write network file '" + path.string() + "'");
  }
}

}  // namespace kappanet

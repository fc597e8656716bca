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

// Causal networks over finite-domain variables.
//
// A Network is immutable once built. Construction never fails: structural
// problems (cycles, bad rows, unknown names) are reported as data by
// validate_network(), and every inference entry point calls require_valid()
// before touching the tables.

#ifndef KAPPANET_NETWORK_HPP_
#define KAPPANET_NETWORK_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kappanet/degree.hpp"

namespace kappanet {

// Tolerance on probability row sums.
inline constexpr double kRowSumTolerance = 1e-9;

struct Variable {
  std::string name;
  std::vector<std::string> values;

  std::size_t cardinality() const noexcept { return values.size(); }
  std::optional<std::size_t> value_index(std::string_view value) const;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Partial assignment of variables to value names. Insertion order is kept so
// that evidence can be echoed back the way it was written.
class Assignment {
 public:
  using Binding = std::pair<std::string, std::string>;

  Assignment() = default;
  Assignment(std::initializer_list<Binding> bindings);

  // Throws kInvalidArgument when `variable` is already bound.
  void bind(std::string variable, std::string value);

  const std::string* find(std::string_view variable) const;
  bool contains(std::string_view variable) const {
    return find(variable) != nullptr;
  }

  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }
  auto begin() const noexcept { return bindings_.begin(); }
  auto end() const noexcept { return bindings_.end(); }

  // "A=x,B=y"; empty string for the empty assignment.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Binding> bindings_;
};

// Parses "Var=value[,Var=value...]". Whitespace around tokens is ignored and
// an empty string yields the empty assignment. Throws kInvalidArgument with a
// "malformed evidence" diagnostic.
Assignment parse_assignment(std::string_view text);

// Rows are indexed by parent assignment in lexicographic order (first parent
// most significant, values in declared order); each row holds one degree per
// child value.
struct ConditionalTable {
  std::string child;
  std::vector<std::string> parents;
  std::vector<std::vector<Degree>> rows;

  friend bool operator==(const ConditionalTable&,
                         const ConditionalTable&) = default;
};

class Network {
 public:
  Network(Calculus calculus, std::vector<Variable> variables,
          std::vector<ConditionalTable> tables,
          std::optional<double> epsilon = std::nullopt);

  Calculus calculus() const noexcept { return calculus_; }
  const std::vector<Variable>& variables() const noexcept {
    return variables_;
  }
  const std::vector<ConditionalTable>& tables() const noexcept {
    return tables_;
  }
  // Abstraction parameter that produced a kappa network, if any.
  std::optional<double> epsilon() const noexcept { return epsilon_; }

  std::size_t size() const noexcept { return variables_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws kInvalidArgument naming the variable when it is not declared.
  std::size_t require_index(std::string_view name) const;
  const Variable& variable(std::size_t index) const {
    return variables_.at(index);
  }
  const ConditionalTable* table_for(std::string_view child) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.calculus_ == b.calculus_ && a.variables_ == b.variables_ &&
           a.tables_ == b.tables_ && a.epsilon_ == b.epsilon_;
  }

 private:
  Calculus calculus_;
  std::vector<Variable> variables_;
  std::vector<ConditionalTable> tables_;
  std::optional<double> epsilon_;
  std::map<std::string, std::size_t, std::less<>> variable_index_;
  std::map<std::string, std::size_t, std::less<>> table_index_;
};

struct Violation {
  std::string element;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& violation);

// Every invariant violation, each naming the offending element. Empty when
// the network is valid.
std::vector<Violation> validate_network(const Network& net);

// Throws kValidation listing the violations, if any.
void require_valid(const Network& net);

// Variable indices in an order where parents precede children. The network
// must be valid.
std::vector<std::size_t> topological_order(const Network& net);

// Mixed-radix helpers for the dense lexicographic layouts used by tables and
// factors; the first digit is the most significant.
std::size_t flat_index(std::span<const std::size_t> digits,
                       std::span<const std::size_t> radices);
void unflatten(std::size_t index, std::span<const std::size_t> radices,
               std::span<std::size_t> digits);
std::size_t radix_product(std::span<const std::size_t> radices);

// Checks that every binding names a declared variable and a value in its
// domain; throws kInvalidArgument naming the offender. Returns (variable
// index, value index) pairs.
std::vector<std::pair<std::size_t, std::size_t>> resolve_assignment(
    const Network& net, const Assignment& assignment);

}  // namespace kappanet

#endif  // KAPPANET_NETWORK_HPP_

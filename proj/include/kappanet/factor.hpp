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

// Dense factors over network variables, generic in the semiring.

#ifndef KAPPANET_FACTOR_HPP_
#define KAPPANET_FACTOR_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "kappanet/error.hpp"
#include "kappanet/network.hpp"

namespace kappanet {

template <class S>
class Factor {
 public:
  using value_type = typename S::value_type;

  // Scalar unit factor (empty scope).
  Factor() : values_{S::one()} {}

  // `scope` holds network variable indices; entries are laid out
  // lexicographically over the scope, first variable most significant.
  Factor(std::vector<std::size_t> scope, std::vector<std::size_t> cards,
         std::vector<value_type> values)
      : scope_(std::move(scope)),
        cards_(std::move(cards)),
        values_(std::move(values)) {
    if (scope_.size() != cards_.size() ||
        values_.size() != radix_product(cards_)) {
      throw Error(ErrorCode::kContractViolation,
                  "factor entry count does not match its scope");
    }
  }

  // Scope is (parents..., child); the layout then coincides with the table's
  // row-major rows.
  static Factor from_table(const Network& net, const ConditionalTable& table) {
    std::vector<std::size_t> scope;
    std::vector<std::size_t> cards;
    for (const auto& parent : table.parents) {
      scope.push_back(net.require_index(parent));
      cards.push_back(net.variable(scope.back()).cardinality());
    }
    scope.push_back(net.require_index(table.child));
    cards.push_back(net.variable(scope.back()).cardinality());
    std::vector<value_type> values;
    values.reserve(radix_product(cards));
    for (const auto& row : table.rows) {
      for (const auto& degree : row) values.push_back(S::from_degree(degree));
    }
    return Factor(std::move(scope), std::move(cards), std::move(values));
  }

  const std::vector<std::size_t>& scope() const noexcept { return scope_; }
  const std::vector<std::size_t>& cards() const noexcept { return cards_; }
  const std::vector<value_type>& values() const noexcept { return values_; }

  bool mentions(std::size_t var) const {
    return std::find(scope_.begin(), scope_.end(), var) != scope_.end();
  }

  // Position of `var` in the scope, or scope().size() when absent.
  std::size_t position(std::size_t var) const {
    return static_cast<std::size_t>(
        std::find(scope_.begin(), scope_.end(), var) - scope_.begin());
  }

 private:
  std::vector<std::size_t> scope_;
  std::vector<std::size_t> cards_;
  std::vector<value_type> values_;
};

// Pointwise combination; the result scope is a's scope followed by b's
// variables not already in a.
template <class S>
Factor<S> product(const Factor<S>& a, const Factor<S>& b) {
  std::vector<std::size_t> scope = a.scope();
  std::vector<std::size_t> cards = a.cards();
  for (std::size_t i = 0; i < b.scope().size(); ++i) {
    if (!a.mentions(b.scope()[i])) {
      scope.push_back(b.scope()[i]);
      cards.push_back(b.cards()[i]);
    }
  }
  std::vector<std::size_t> b_pos;
  for (std::size_t var : b.scope()) {
    b_pos.push_back(static_cast<std::size_t>(
        std::find(scope.begin(), scope.end(), var) - scope.begin()));
  }
  const std::size_t n = radix_product(cards);
  std::vector<typename S::value_type> values;
  values.reserve(n);
  std::vector<std::size_t> digits(scope.size());
  std::vector<std::size_t> b_digits(b.scope().size());
  const std::size_t a_dims = a.scope().size();
  for (std::size_t i = 0; i < n; ++i) {
    unflatten(i, cards, digits);
    for (std::size_t k = 0; k < b_pos.size(); ++k) b_digits[k] = digits[b_pos[k]];
    const std::size_t ai =
        flat_index(std::span(digits).first(a_dims), a.cards());
    const std::size_t bi = flat_index(b_digits, b.cards());
    values.push_back(S::combine(a.values()[ai], b.values()[bi]));
  }
  return Factor<S>(std::move(scope), std::move(cards), std::move(values));
}

// Merges `var` out of the factor (sum for probability, min for kappa). A
// factor that does not mention `var` is returned unchanged.
template <class S>
Factor<S> merge_out(const Factor<S>& f, std::size_t var) {
  const std::size_t pos = f.position(var);
  if (pos == f.scope().size()) return f;
  std::vector<std::size_t> scope = f.scope();
  std::vector<std::size_t> cards = f.cards();
  scope.erase(scope.begin() + static_cast<std::ptrdiff_t>(pos));
  cards.erase(cards.begin() + static_cast<std::ptrdiff_t>(pos));
  std::vector<typename S::value_type> values(radix_product(cards), S::zero());
  std::vector<std::size_t> digits(f.scope().size());
  std::vector<std::size_t> kept(scope.size());
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    unflatten(i, f.cards(), digits);
    for (std::size_t k = 0, j = 0; k < digits.size(); ++k) {
      if (k != pos) kept[j++] = digits[k];
    }
    auto& slot = values[flat_index(kept, cards)];
    slot = S::merge(slot, f.values()[i]);
  }
  return Factor<S>(std::move(scope), std::move(cards), std::move(values));
}

// Sets every entry inconsistent with var=value to the semiring zero. The
// scope is unchanged.
template <class S>
Factor<S> restrict_to(const Factor<S>& f, std::size_t var, std::size_t value) {
  const std::size_t pos = f.position(var);
  if (pos == f.scope().size()) return f;
  std::vector<typename S::value_type> values = f.values();
  std::vector<std::size_t> digits(f.scope().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    unflatten(i, f.cards(), digits);
    if (digits[pos] != value) values[i] = S::zero();
  }
  return Factor<S>(f.scope(), f.cards(), std::move(values));
}

}  // namespace kappanet

#endif  // KAPPANET_FACTOR_HPP_

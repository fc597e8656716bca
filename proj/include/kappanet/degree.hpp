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

// Belief degrees under the two calculi.
//
// A probability degree is a real in [0, 1]; combining multiplies and merging
// adds. A kappa degree (a rank) is an exact nonnegative integer or infinity;
// combining adds (infinity absorbs) and merging takes the minimum.

#ifndef KAPPANET_DEGREE_HPP_
#define KAPPANET_DEGREE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace kappanet {

enum class Calculus { kProbability, kKappa };

std::string_view to_string(Calculus calculus);
std::optional<Calculus> parse_calculus(std::string_view text);

// Exact ordinal rank with a distinguished infinity.
class Rank {
 public:
  constexpr Rank() noexcept = default;
  constexpr explicit Rank(std::uint64_t value) noexcept : value_(value) {}

  static constexpr Rank infinity() noexcept {
    Rank r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  // Throws kContractViolation for infinity.
  std::uint64_t value() const;

  friend constexpr bool operator==(Rank a, Rank b) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Rank a, Rank b) noexcept {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

  // Infinity absorbs. Throws kContractViolation on integer overflow.
  friend Rank operator+(Rank a, Rank b);

  // this - base for a finite base <= this; infinity stays infinity.
  Rank shifted_down(Rank base) const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::string to_string(Rank rank);

// A belief weight tagged with the calculus it belongs to.
class Degree {
 public:
  static Degree probability(double p) { return Degree(p); }
  static Degree kappa(Rank r) { return Degree(r); }
  static Degree kappa(std::uint64_t r) { return Degree(Rank(r)); }

  Calculus calculus() const noexcept {
    return value_.index() == 0 ? Calculus::kProbability : Calculus::kKappa;
  }

  // Accessors throw kContractViolation when the calculus does not match.
  double prob() const;
  Rank rank() const;

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  explicit Degree(double p) : value_(p) {}
  explicit Degree(Rank r) : value_(r) {}

  std::variant<double, Rank> value_;
};

std::string to_string(const Degree& degree);

Degree unit(Calculus calculus);
Degree zero(Calculus calculus);

// Both operations throw kContractViolation if either degree belongs to a
// different calculus than `calculus`.
Degree combine(Calculus calculus, const Degree& a, const Degree& b);
Degree merge(Calculus calculus, const Degree& a, const Degree& b);

// Value-level semirings the inference templates are written against.
struct ProbabilitySemiring {
  using value_type = double;
  static constexpr Calculus kCalculus = Calculus::kProbability;

  static double one() noexcept { return 1.0; }
  static double zero() noexcept { return 0.0; }
  static double combine(double a, double b) noexcept { return a * b; }
  static double merge(double a, double b) noexcept { return a + b; }
  static bool is_zero(double a) noexcept { return a == 0.0; }

  static double from_degree(const Degree& d) { return d.prob(); }
  static Degree to_degree(double v) { return Degree::probability(v); }
};

struct KappaSemiring {
  using value_type = Rank;
  static constexpr Calculus kCalculus = Calculus::kKappa;

  static Rank one() noexcept { return Rank(0); }
  static Rank zero() noexcept { return Rank::infinity(); }
  static Rank combine(Rank a, Rank b) { return a + b; }
  static Rank merge(Rank a, Rank b) noexcept { return b < a ? b : a; }
  static bool is_zero(Rank a) noexcept { return a.is_infinite(); }

  static Rank from_degree(const Degree& d) { return d.rank(); }
  static Degree to_degree(Rank v) { return Degree::kappa(v); }
};

}  // namespace kappanet

#endif  // KAPPANET_DEGREE_HPP_

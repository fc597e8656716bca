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

#include "kappanet/degree.hpp"

#include <cstdio>
#include <limits>

#include "kappanet/error.hpp"

namespace kappanet {

std::string_view to_string(Calculus calculus) {
  return calculus == Calculus::kProbability ? "probability" : "kappa";
}

std::optional<Calculus> parse_calculus(std::string_view text) {
  if (text == "probability") return Calculus::kProbability;
  if (text == "kappa") return Calculus::kKappa;
  return std::nullopt;
}

std::uint64_t Rank::value() const {
  if (infinite_) {
    throw Error(ErrorCode::kContractViolation,
                "finite value requested from an infinite rank");
  }
  return value_;
}

Rank operator+(Rank a, Rank b) {
  if (a.infinite_ || b.infinite_) return Rank::infinity();
  if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) {
    throw Error(ErrorCode::kContractViolation, "rank addition overflows");
  }
  return Rank(a.value_ + b.value_);
}

Rank Rank::shifted_down(Rank base) const {
  if (base.infinite_) {
    throw Error(ErrorCode::kContractViolation,
                "cannot shift a rank down by infinity");
  }
  if (infinite_) return *this;
  if (base.value_ > value_) {
    throw Error(ErrorCode::kContractViolation,
                "rank shift base exceeds the rank");
  }
  return Rank(value_ - base.value_);
}

std::string to_string(Rank rank) {
  return rank.is_infinite() ? std::string("inf")
                            : std::to_string(rank.value());
}

double Degree::prob() const {
  if (const double* p = std::get_if<double>(&value_)) return *p;
  throw Error(ErrorCode::kContractViolation,
              "probability requested from a kappa degree");
}

Rank Degree::rank() const {
  if (const Rank* r = std::get_if<Rank>(&value_)) return *r;
  throw Error(ErrorCode::kContractViolation,
              "rank requested from a probability degree");
}

std::string to_string(const Degree& degree) {
  if (degree.calculus() == Calculus::kKappa) return to_string(degree.rank());
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", degree.prob());
  return buf;
}

Degree unit(Calculus calculus) {
  return calculus == Calculus::kProbability
             ? ProbabilitySemiring::to_degree(ProbabilitySemiring::one())
             : KappaSemiring::to_degree(KappaSemiring::one());
}

Degree zero(Calculus calculus) {
  return calculus == Calculus::kProbability
             ? ProbabilitySemiring::to_degree(ProbabilitySemiring::zero())
             : KappaSemiring::to_degree(KappaSemiring::zero());
}

namespace {

void check_conforms(Calculus calculus, const Degree& a, const Degree& b) {
  if (a.calculus() != calculus || b.calculus() != calculus) {
    throw Error(ErrorCode::kContractViolation,
                "degree does not belong to the " +
                    std::string(to_string(calculus)) + " calculus");
  }
}

}  // namespace

Degree combine(Calculus calculus, const Degree& a, const Degree& b) {
  check_conforms(calculus, a, b);
  if (calculus == Calculus::kProbability) {
    return Degree::probability(
        ProbabilitySemiring::combine(a.prob(), b.prob()));
  }
  return Degree::kappa(KappaSemiring::combine(a.rank(), b.rank()));
}

Degree merge(Calculus calculus, const Degree& a, const Degree& b) {
  check_conforms(calculus, a, b);
  if (calculus == Calculus::kProbability) {
    return Degree::probability(ProbabilitySemiring::merge(a.prob(), b.prob()));
  }
  return Degree::kappa(KappaSemiring::merge(a.rank(), b.rank()));
}

}  // namespace kappanet

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

// JSON network documents.
//
//   {
//     "calculus": "probability" | "kappa",
//     "epsilon": 0.2,                          (optional)
//     "variables": [{"name": "A", "values": ["true", "false"]}, ...],
//     "tables": [
//       {"child": "B", "parents": ["A"],
//        "rows": [{"parents": ["true"], "degrees": [0.8, 0.2]}, ...]},
//       ...
//     ]
//   }
//
// Rows are keyed by their parent values, so their order in the file does
// not matter. Kappa degrees are nonnegative integers or the string "inf".

#ifndef KAPPANET_DOCUMENT_HPP_
#define KAPPANET_DOCUMENT_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "kappanet/network.hpp"

namespace kappanet {

// Throws kParse (syntax errors carry line and column; missing or duplicate
// rows name the parent assignment) or kValidation for a network that parses
// but violates an invariant.
Network parse_network(std::string_view text);

// Deterministic output that parse_network() reads back to an equal network.
std::string serialize_network(const Network& net);

// File wrappers; unreadable or unwritable files throw kIo.
Network load_network(const std::filesystem::path& path);
void save_network(const Network& net, const std::filesystem::path& path);

}  // namespace kappanet

#endif  // KAPPANET_DOCUMENT_HPP_

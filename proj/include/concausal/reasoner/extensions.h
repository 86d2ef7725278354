// Copyright 2026 The Concausal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <set>
#include <string_view>
#include <vector>

#include "concausal/reasoner/logic.h"

namespace concausal::reasoner {

struct Extension {
  // Entailed literals over the theory's atoms.
  std::set<Literal> literals;
  // Indices into Theory::defaults, ascending.
  std::vector<std::size_t> generating_defaults;

  bool contains(const Literal& literal) const { return literals.count(literal) > 0; }
  bool operator==(const Extension&) const = default;
};

enum class InferenceMode { Credulous, Skeptical };
enum class Verdict { Believed, Disbelieved, Unknown };

std::string_view to_string(InferenceMode mode);
std::string_view to_string(Verdict verdict);
std::optional<InferenceMode> parse_mode(std::string_view text);

// Indices of defaults that take part in reasoning: defaults tagged with a
// defeated pair are dropped; with specificity on, a default is also
// dropped when another default with the complementary consequent has a
// strictly larger prerequisite set that the facts and implications
// already entail.
std::vector<std::size_t> active_defaults(const Theory& theory, bool specificity);

// All Reiter extensions, found by exploring the process tree over sets of
// applied defaults. Sorted by literal set. Throws InconsistentTheory when
// facts and implications alone are unsatisfiable.
std::vector<Extension> compute_extensions(const Theory& theory, bool specificity = false);

// Credulous: Believed if some extension contains the query, else
// Disbelieved if some contains its negation. Skeptical: the same with
// "every extension". No extension at all yields Unknown.
Verdict conclude(const Theory& theory, const Literal& query, InferenceMode mode,
                 bool specificity = false);
Verdict conclude(std::span<const Extension> extensions, const Literal& query,
                 InferenceMode mode);

}  // namespace concausal::reasoner

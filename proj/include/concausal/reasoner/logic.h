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

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concausal::reasoner {

class ReasonerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Facts plus implication closure derive both some atom and its negation.
class InconsistentTheory : public ReasonerError {
 public:
  using ReasonerError::ReasonerError;
};

struct Literal {
  std::string atom;
  bool negated = false;

  Literal() = default;
  Literal(std::string a, bool neg = false);

  Literal operator!() const { return Literal(atom, !negated); }
  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;

  std::string to_string() const { return negated ? "!" + atom : atom; }
};

// "A", "!A", "!!A" (double negation cancels). Throws ReasonerError on an
// empty or malformed symbol.
Literal parse_literal(std::string_view text);
bool is_valid_atom(std::string_view atom);

using Conjunction = std::vector<Literal>;  // empty = true

std::string to_string(const Conjunction& conjunction);

struct Implication {
  Conjunction body;
  Literal head;

  auto operator<=>(const Implication&) const = default;
  bool operator==(const Implication&) const = default;
  std::string to_string() const;
};

using ConceptPair = std::pair<std::string, std::string>;  // (cause, effect)

// Reiter default  prerequisite : justifications / consequent.
struct DefaultRule {
  Conjunction prerequisite;
  std::vector<Literal> justifications;
  Literal consequent;
  // Set on defaults produced from procausal claims; defeaters match it.
  std::optional<ConceptPair> pro_pair;

  static DefaultRule normal(Conjunction prerequisite, Literal consequent);

  bool is_normal() const {
    return justifications.size() == 1 && justifications.front() == consequent;
  }
  bool operator==(const DefaultRule&) const = default;
  std::string to_string() const;
};

struct Theory {
  std::vector<Literal> facts;
  std::vector<Implication> implications;
  std::vector<DefaultRule> defaults;
  // Concausal claims: every default tagged with one of these pairs is
  // removed before reasoning.
  std::vector<ConceptPair> defeaters;

  // Every atom mentioned anywhere, sorted.
  std::set<std::string> atoms() const;
  // Theory with the other's parts appended.
  Theory& merge(const Theory& other);
  // Throws ReasonerError on an empty atom or a default without
  // justifications.
  void validate() const;
};

}  // namespace concausal::reasoner

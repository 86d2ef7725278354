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

#include "concausal/reasoner/logic.h"

#include <cctype>

namespace concausal::reasoner {

namespace {

bool atom_char(unsigned char c, bool first) {
  if (c >= 0x80) return true;  // UTF-8 symbols are allowed as is
  if (std::isalpha(c) || c == '_') return true;
  return !first && std::isdigit(c);
}

std::string join(const std::vector<Literal>& literals, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += separator;
    out += literals[i].to_string();
  }
  return out;
}

}  // namespace

Literal::Literal(std::string a, bool neg) : atom(std::move(a)), negated(neg) {}

bool is_valid_atom(std::string_view atom) {
  if (atom.empty()) return false;
  for (std::size_t i = 0; i < atom.size(); ++i)
    if (!atom_char(static_cast<unsigned char>(atom[i]), i == 0)) return false;
  return true;
}

Literal parse_literal(std::string_view text) {
  bool negated = false;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  while (!text.empty() && text.front() == '!') {
    negated = !negated;
    text.remove_prefix(1);
  }
  if (!is_valid_atom(text))
    throw ReasonerError("invalid literal symbol '" + std::string(text) + "'");
  return Literal(std::string(text), negated);
}

std::string to_string(const Conjunction& conjunction) {
  return conjunction.empty() ? "T" : join(conjunction, " & ");
}

std::string Implication::to_string() const {
  return reasoner::to_string(body) + " -> " + head.to_string();
}

DefaultRule DefaultRule::normal(Conjunction prerequisite, Literal consequent) {
  DefaultRule rule;
  rule.prerequisite = std::move(prerequisite);
  rule.justifications = {consequent};
  rule.consequent = std::move(consequent);
  return rule;
}

std::string DefaultRule::to_string() const {
  return reasoner::to_string(prerequisite) + " : " + join(justifications, ", ") + " / " +
         consequent.to_string();
}

std::set<std::string> Theory::atoms() const {
  std::set<std::string> out;
  for (const auto& f : facts) out.insert(f.atom);
  for (const auto& imp : implications) {
    for (const auto& l : imp.body) out.insert(l.atom);
    out.insert(imp.head.atom);
  }
  for (const auto& d : defaults) {
    for (const auto& l : d.prerequisite) out.insert(l.atom);
    for (const auto& l : d.justifications) out.insert(l.atom);
    out.insert(d.consequent.atom);
  }
  return out;
}

Theory& Theory::merge(const Theory& other) {
  facts.insert(facts.end(), other.facts.begin(), other.facts.end());
  implications.insert(implications.end(), other.implications.begin(),
                      other.implications.end());
  defaults.insert(defaults.end(), other.defaults.begin(), other.defaults.end());
  defeaters.insert(defeaters.end(), other.defeaters.begin(), other.defeaters.end());
  return *this;
}

void Theory::validate() const {
  auto check = [](const Literal& l) {
    if (!is_valid_atom(l.atom)) throw ReasonerError("invalid atom '" + l.atom + "'");
  };
  for (const auto& f : facts) check(f);
  for (const auto& imp : implications) {
    for (const auto& l : imp.body) check(l);
    check(imp.head);
  }
  for (const auto& d : defaults) {
    if (d.justifications.empty())
      throw ReasonerError("default '" + d.to_string() + "' has no justification");
    for (const auto& l : d.prerequisite) check(l);
    for (const auto& l : d.justifications) check(l);
    check(d.consequent);
  }
}

}  // namespace concausal::reasoner

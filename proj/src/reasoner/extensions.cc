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

#include "concausal/reasoner/extensions.h"

#include <algorithm>
#include <functional>

#include "concausal/reasoner/entailment.h"

namespace concausal::reasoner {

namespace {

std::vector<Literal> premises_of(const Theory& theory, const std::vector<std::size_t>& active,
                                 const std::vector<bool>& applied) {
  std::vector<Literal> premises = theory.facts;
  for (std::size_t i = 0; i < active.size(); ++i)
    if (applied[i]) premises.push_back(theory.defaults[active[i]].consequent);
  return premises;
}

bool prerequisite_holds(const Entailment& logic, std::span<const Literal> premises,
                        const DefaultRule& rule) {
  return std::all_of(rule.prerequisite.begin(), rule.prerequisite.end(),
                     [&](const Literal& l) { return logic.entails(premises, l); });
}

bool justified(const Entailment& logic, std::span<const Literal> premises,
               const DefaultRule& rule) {
  return std::all_of(rule.justifications.begin(), rule.justifications.end(),
                     [&](const Literal& l) { return logic.consistent_with(premises, l); });
}

}  // namespace

std::string_view to_string(InferenceMode mode) {
  return mode == InferenceMode::Credulous ? "credulous" : "skeptical";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Believed: return "believed";
    case Verdict::Disbelieved: return "disbelieved";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<InferenceMode> parse_mode(std::string_view text) {
  if (text == "credulous") return InferenceMode::Credulous;
  if (text == "skeptical" || text == "sceptical") return InferenceMode::Skeptical;
  return std::nullopt;
}

std::vector<std::size_t> active_defaults(const Theory& theory, bool specificity) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < theory.defaults.size(); ++i) {
    const auto& d = theory.defaults[i];
    const bool defeated =
        d.pro_pair && std::find(theory.defeaters.begin(), theory.defeaters.end(),
                                *d.pro_pair) != theory.defeaters.end();
    if (!defeated) active.push_back(i);
  }
  if (!specificity) return active;

  const Entailment logic(theory.implications);
  auto base_entails = [&](const DefaultRule& d) {
    return prerequisite_holds(logic, theory.facts, d);
  };
  std::vector<std::size_t> kept;
  for (auto i : active) {
    const auto& weaker = theory.defaults[i];
    const std::set<Literal> pre(weaker.prerequisite.begin(), weaker.prerequisite.end());
    const bool suppressed = std::any_of(active.begin(), active.end(), [&](std::size_t j) {
      const auto& stronger = theory.defaults[j];
      if (j == i || stronger.consequent != !weaker.consequent) return false;
      const std::set<Literal> pre2(stronger.prerequisite.begin(), stronger.prerequisite.end());
      const bool strict_superset =
          pre2.size() > pre.size() && std::includes(pre2.begin(), pre2.end(), pre.begin(), pre.end());
      return strict_superset && base_entails(stronger);
    });
    if (!suppressed) kept.push_back(i);
  }
  return kept;
}

std::vector<Extension> compute_extensions(const Theory& theory, bool specificity) {
  theory.validate();
  const Entailment logic(theory.implications);
  if (!logic.satisfiable(theory.facts))
    throw InconsistentTheory("facts and implications are inconsistent");

  const auto active = active_defaults(theory, specificity);
  const auto atoms = theory.atoms();
  std::set<std::vector<bool>> visited;
  std::vector<Extension> found;

  std::function<void(const std::vector<bool>&)> explore = [&](const std::vector<bool>& applied) {
    const auto premises = premises_of(theory, active, applied);
    bool closed = true;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (applied[k]) continue;
      const auto& rule = theory.defaults[active[k]];
      if (!prerequisite_holds(logic, premises, rule) || !justified(logic, premises, rule))
        continue;
      closed = false;
      auto next = applied;
      next[k] = true;
      if (!visited.insert(next).second) continue;
      // Successful: no applied default's justification is contradicted.
      const auto next_premises = premises_of(theory, active, next);
      bool success = logic.satisfiable(next_premises);
      for (std::size_t m = 0; success && m < active.size(); ++m)
        if (next[m]) success = justified(logic, next_premises, theory.defaults[active[m]]);
      if (success) explore(next);
    }
    if (!closed) return;

    Extension ext;
    ext.literals = logic.closure(premises, atoms);
    for (std::size_t k = 0; k < active.size(); ++k) {
      const auto& rule = theory.defaults[active[k]];
      if (prerequisite_holds(logic, premises, rule) && justified(logic, premises, rule))
        ext.generating_defaults.push_back(active[k]);
    }
    if (std::find(found.begin(), found.end(), ext) == found.end())
      found.push_back(std::move(ext));
  };

  const std::vector<bool> root(active.size(), false);
  visited.insert(root);
  explore(root);
  std::sort(found.begin(), found.end(), [](const Extension& a, const Extension& b) {
    return a.literals < b.literals;
  });
  return found;
}

Verdict conclude(std::span<const Extension> extensions, const Literal& query,
                 InferenceMode mode) {
  if (extensions.empty()) return Verdict::Unknown;
  auto holds = [&](const Literal& l) {
    auto in = [&](const Extension& e) { return e.contains(l); };
    return mode == InferenceMode::Credulous
               ? std::any_of(extensions.begin(), extensions.end(), in)
               : std::all_of(extensions.begin(), extensions.end(), in);
  };
  if (holds(query)) return Verdict::Believed;
  if (holds(!query)) return Verdict::Disbelieved;
  return Verdict::Unknown;
}

Verdict conclude(const Theory& theory, const Literal& query, InferenceMode mode,
                 bool specificity) {
  const auto extensions = compute_extensions(theory, specificity);
  return conclude(extensions, query, mode);
}

}  // namespace concausal::reasoner

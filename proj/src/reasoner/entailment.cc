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

#include "concausal/reasoner/entailment.h"

#include <cstdlib>
#include <optional>

namespace concausal::reasoner {

namespace {

// Literals are +v / -v for variable v >= 1.
using Clause = std::vector<int>;

class Dpll {
 public:
  Dpll(std::size_t variables, const std::vector<Clause>& clauses)
      : clauses_(clauses), value_(variables + 1, 0) {}

  std::optional<std::vector<signed char>> solve() {
    if (!search()) return std::nullopt;
    return value_;
  }

 private:
  int eval(int lit) const {
    const int v = value_[std::abs(lit)];
    return lit > 0 ? v : -v;
  }

  // Returns false on conflict; records assignments on the trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool satisfied = false;
        for (int lit : clause) {
          const int v = eval(lit);
          if (v > 0) {
            satisfied = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          value_[std::abs(last)] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) value_[v] = 0;
      return false;
    }
    std::size_t pick = 0;
    for (std::size_t v = 1; v < value_.size(); ++v)
      if (value_[v] == 0) {
        pick = v;
        break;
      }
    if (pick == 0) return true;
    for (signed char choice : {1, -1}) {
      value_[pick] = choice;
      if (search()) return true;
      value_[pick] = 0;
    }
    for (int v : trail) value_[v] = 0;
    return false;
  }

  const std::vector<Clause>& clauses_;
  std::vector<signed char> value_;
};

}  // namespace

struct Entailment::Problem {
  std::map<std::string, int> index;
  std::vector<Clause> clauses;

  int var(const std::string& atom) {
    auto [it, inserted] = index.try_emplace(atom, static_cast<int>(index.size()) + 1);
    return it->second;
  }
  int lit(const Literal& l) { return l.negated ? -var(l.atom) : var(l.atom); }

  std::optional<std::vector<signed char>> solve(const Clause& extra = {}) {
    std::vector<Clause> all = clauses;
    if (!extra.empty()) all.push_back(extra);
    return Dpll(index.size(), all).solve();
  }
};

Entailment::Entailment(std::vector<Implication> implications)
    : implications_(std::move(implications)) {}

Entailment::Problem Entailment::encode(std::span<const Literal> premises) const {
  Problem p;
  for (const auto& imp : implications_) {
    Clause clause;
    for (const auto& b : imp.body) clause.push_back(-p.lit(b));
    clause.push_back(p.lit(imp.head));
    p.clauses.push_back(std::move(clause));
  }
  for (const auto& premise : premises) p.clauses.push_back({p.lit(premise)});
  return p;
}

bool Entailment::satisfiable(std::span<const Literal> premises) const {
  return encode(premises).solve().has_value();
}

bool Entailment::entails(std::span<const Literal> premises, const Literal& query) const {
  auto p = encode(premises);
  return !p.solve({p.lit(!query)}).has_value();
}

bool Entailment::consistent_with(std::span<const Literal> premises,
                                 const Literal& literal) const {
  auto p = encode(premises);
  return p.solve({p.lit(literal)}).has_value();
}

std::set<Literal> Entailment::closure(std::span<const Literal> premises,
                                      const std::set<std::string>& atoms) const {
  auto p = encode(premises);
  for (const auto& atom : atoms) p.var(atom);
  std::set<Literal> out;
  const auto model = p.solve();
  if (!model) {
    for (const auto& atom : atoms) {
      out.emplace(atom, false);
      out.emplace(atom, true);
    }
    return out;
  }
  // Only the polarity true in one model can be entailed.
  for (const auto& atom : atoms) {
    const int v = p.index.at(atom);
    const Literal candidate(atom, (*model)[v] < 0);
    if (!p.solve({p.lit(!candidate)})) out.insert(candidate);
  }
  return out;
}

}  // namespace concausal::reasoner

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

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "concausal/reasoner/logic.h"

namespace concausal::reasoner {

// Classical propositional consequence over a fixed set of implications
// (each body -> head is the clause !b1 | ... | !bn | head), decided by a
// small DPLL solver. Sized for theories of tens of atoms.
class Entailment {
 public:
  explicit Entailment(std::vector<Implication> implications);

  bool satisfiable(std::span<const Literal> premises) const;
  // premises + implications |= query
  bool entails(std::span<const Literal> premises, const Literal& query) const;
  // premises + implications + {literal} is satisfiable
  bool consistent_with(std::span<const Literal> premises, const Literal& literal) const;
  // Every literal over `atoms` entailed by the premises. An unsatisfiable
  // premise set yields both polarities of every atom.
  std::set<Literal> closure(std::span<const Literal> premises,
                            const std::set<std::string>& atoms) const;

 private:
  struct Problem;
  Problem encode(std::span<const Literal> premises) const;

  std::vector<Implication> implications_;
};

}  // namespace concausal::reasoner

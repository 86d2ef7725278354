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

#include <string>
#include <string_view>
#include <vector>

#include "concausal/reasoner/claims.h"
#include "concausal/reasoner/logic.h"

namespace concausal::reasoner {

class DslError : public ReasonerError {
 public:
  DslError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ClaimsDocument {
  Theory theory;  // facts, rules and defaults as written
  std::vector<CausalClaim> claims;

  // theory plus claims_to_rules(claims).
  Theory combined_theory() const;
};

// Statements end with '.'; '#' starts a comment running to end of line.
//   fact <lit>.
//   rule <conj> -> <lit>.
//   default <conj> : <lit>, <lit> / <lit>.
//   pro(X, Y).   con(X, Y).   neg(X, Y) [src1, "src 2"].
// Conjunctions join literals with '&' or ',' and may be empty. Literals
// are symbols with optional '!' prefixes. A claim without a bracketed
// support list is supported by "line:<n>". Duplicate facts and self-loop
// claims are errors.
ClaimsDocument parse_claims_dsl(std::string_view text);

}  // namespace concausal::reasoner

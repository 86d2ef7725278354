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
#include <string>
#include <string_view>
#include <vector>

#include "concausal/reasoner/logic.h"

namespace concausal::reasoner {

// pro: cause brings about effect. con: cause does not bring about effect.
// negative: cause brings about the absence of effect ("A prevents B").
enum class ClaimPolarity { Pro, Con, Negative };

std::string_view to_string(ClaimPolarity polarity);  // "pro", "con", "neg"
std::optional<ClaimPolarity> parse_claim_polarity(std::string_view text);

struct CausalClaim {
  std::string cause;
  std::string effect;
  ClaimPolarity polarity = ClaimPolarity::Pro;
  std::vector<std::string> support;  // provenance ids
  bool derived = false;              // produced by derive_implied_con

  bool same_relation(const CausalClaim& other) const {
    return cause == other.cause && effect == other.effect && polarity == other.polarity;
  }
  bool operator==(const CausalClaim&) const = default;
  std::string to_string() const;  // e.g. "pro(Fire,Smoke)"
};

// Throws ReasonerError on a self-loop, an invalid concept symbol or an
// empty support list.
void validate_claim(const CausalClaim& claim);

// pro(A,B)  -> default A : B / B tagged with (A,B)
// neg(A,B)  -> default A : !B / !B
// con(A,B)  -> defeater for (A,B)
Theory claim_to_rules(const CausalClaim& claim);
Theory claims_to_rules(const std::vector<CausalClaim>& claims);

// neg(A,B) implies con(A,B); pro(A,B) implies con(B,A). Results are marked
// derived, carry the source support, and skip relations already present
// among the input claims (or emitted earlier).
std::vector<CausalClaim> derive_implied_con(const std::vector<CausalClaim>& claims);

}  // namespace concausal::reasoner

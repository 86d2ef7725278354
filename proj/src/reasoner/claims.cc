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

#include "concausal/reasoner/claims.h"

#include <algorithm>

namespace concausal::reasoner {

std::string_view to_string(ClaimPolarity polarity) {
  switch (polarity) {
    case ClaimPolarity::Pro: return "pro";
    case ClaimPolarity::Con: return "con";
    case ClaimPolarity::Negative: return "neg";
  }
  return "pro";
}

std::optional<ClaimPolarity> parse_claim_polarity(std::string_view text) {
  if (text == "pro") return ClaimPolarity::Pro;
  if (text == "con") return ClaimPolarity::Con;
  if (text == "neg" || text == "negative") return ClaimPolarity::Negative;
  return std::nullopt;
}

std::string CausalClaim::to_string() const {
  return std::string(reasoner::to_string(polarity)) + "(" + cause + "," + effect + ")";
}

void validate_claim(const CausalClaim& claim) {
  if (!is_valid_atom(claim.cause) || !is_valid_atom(claim.effect))
    throw ReasonerError("invalid concept symbol in " + claim.to_string());
  if (claim.cause == claim.effect)
    throw ReasonerError("self-loop claim " + claim.to_string());
  if (claim.support.empty())
    throw ReasonerError("claim " + claim.to_string() + " has no support");
}

Theory claim_to_rules(const CausalClaim& claim) {
  Theory fragment;
  const Literal cause(claim.cause);
  switch (claim.polarity) {
    case ClaimPolarity::Pro: {
      auto rule = DefaultRule::normal({cause}, Literal(claim.effect));
      rule.pro_pair = ConceptPair{claim.cause, claim.effect};
      fragment.defaults.push_back(std::move(rule));
      break;
    }
    case ClaimPolarity::Negative:
      fragment.defaults.push_back(DefaultRule::normal({cause}, Literal(claim.effect, true)));
      break;
    case ClaimPolarity::Con:
      fragment.defeaters.emplace_back(claim.cause, claim.effect);
      break;
  }
  return fragment;
}

Theory claims_to_rules(const std::vector<CausalClaim>& claims) {
  Theory theory;
  for (const auto& claim : claims) theory.merge(claim_to_rules(claim));
  return theory;
}

std::vector<CausalClaim> derive_implied_con(const std::vector<CausalClaim>& claims) {
  std::vector<CausalClaim> out;
  auto known = [&](const CausalClaim& c) {
    auto same = [&](const CausalClaim& other) { return other.same_relation(c); };
    return std::any_of(claims.begin(), claims.end(), same) ||
           std::any_of(out.begin(), out.end(), same);
  };
  for (const auto& claim : claims) {
    CausalClaim implied;
    implied.polarity = ClaimPolarity::Con;
    implied.support = claim.support;
    implied.derived = true;
    if (claim.polarity == ClaimPolarity::Negative) {
      implied.cause = claim.cause;
      implied.effect = claim.effect;
    } else if (claim.polarity == ClaimPolarity::Pro) {
      implied.cause = claim.effect;
      implied.effect = claim.cause;
    } else {
      continue;
    }
    if (!known(implied)) out.push_back(std::move(implied));
  }
  return out;
}

}  // namespace concausal::reasoner

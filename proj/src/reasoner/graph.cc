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

#include "concausal/reasoner/graph.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>

namespace concausal::reasoner {

void CausalGraph::assert_claim(const CausalClaim& claim) {
  validate_claim(claim);
  const Key key{claim.cause, claim.effect, claim.polarity};
  auto it = edges_.find(key);
  if (it == edges_.end()) {
    edges_.emplace(key, Edge{claim, std::nullopt});
  } else {
    auto& support = it->second.claim.support;
    for (const auto& id : claim.support)
      if (std::find(support.begin(), support.end(), id) == support.end()) support.push_back(id);
    it->second.claim.derived = it->second.claim.derived && claim.derived;
  }
  nodes_.insert(claim.cause);
  nodes_.insert(claim.effect);
}

CausalGraph CausalGraph::with_claim(const CausalClaim& claim) const {
  CausalGraph copy = *this;
  copy.assert_claim(claim);
  return copy;
}

const Edge* CausalGraph::find(const std::string& cause, const std::string& effect,
                              ClaimPolarity polarity) const {
  auto it = edges_.find(Key{cause, effect, polarity});
  return it == edges_.end() ? nullptr : &it->second;
}

Edge* CausalGraph::find(const std::string& cause, const std::string& effect,
                        ClaimPolarity polarity) {
  auto it = edges_.find(Key{cause, effect, polarity});
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<std::string> CausalGraph::successors(const std::string& node,
                                                 ClaimPolarity polarity) const {
  std::vector<std::string> out;
  for (auto it = edges_.lower_bound(Key{node, "", ClaimPolarity::Pro});
       it != edges_.end() && std::get<0>(it->first) == node; ++it)
    if (std::get<2>(it->first) == polarity) out.push_back(std::get<1>(it->first));
  return out;
}

nlohmann::ordered_json CausalGraph::to_json() const {
  nlohmann::ordered_json out;
  out["nodes"] = nodes_;
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& [key, edge] : edges_) {
    nlohmann::ordered_json e;
    e["cause"] = edge.claim.cause;
    e["effect"] = edge.claim.effect;
    e["polarity"] = to_string(edge.claim.polarity);
    e["support"] = edge.claim.support;
    if (edge.claim.derived) e["derived"] = true;
    if (edge.prevailing) e["prevailing"] = *edge.prevailing;
    out["edges"].push_back(std::move(e));
  }
  return out;
}

std::vector<Conflict> detect_inconsistencies(const CausalGraph& graph) {
  std::vector<Conflict> out;
  for (const auto& [key, edge] : graph.edges()) {
    if (std::get<2>(key) != ClaimPolarity::Con) continue;
    const auto& [source, target, polarity] = key;

    // Nodes that can still reach the target over pro edges.
    std::set<std::string> reaches{target};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& [k, e] : graph.edges())
        if (std::get<2>(k) == ClaimPolarity::Pro && reaches.count(std::get<1>(k)) &&
            reaches.insert(std::get<0>(k)).second)
          grew = true;
    }
    if (!reaches.count(source)) continue;

    std::vector<std::string> path{source};
    std::set<std::string> on_path{source};
    std::function<void(const std::string&)> walk = [&](const std::string& node) {
      for (const auto& next : graph.successors(node, ClaimPolarity::Pro)) {
        if (on_path.count(next) || !reaches.count(next)) continue;
        path.push_back(next);
        if (next == target) {
          out.push_back({path, edge.claim});
        } else {
          on_path.insert(next);
          walk(next);
          on_path.erase(next);
        }
        path.pop_back();
      }
    };
    walk(source);
  }
  return out;
}

std::string_view to_string(ResolutionPolicy policy) {
  return policy == ResolutionPolicy::SupportMajority ? "support-majority" : "flag-only";
}

std::optional<ResolutionPolicy> parse_policy(std::string_view text) {
  if (text == "support-majority" || text == "majority") return ResolutionPolicy::SupportMajority;
  if (text == "flag-only" || text == "flag") return ResolutionPolicy::FlagOnly;
  return std::nullopt;
}

std::string_view to_string(Resolution resolution) {
  switch (resolution) {
    case Resolution::ProPrevails: return "pro";
    case Resolution::ConPrevails: return "con";
    case Resolution::Unresolved: return "unresolved";
  }
  return "unresolved";
}

std::size_t ResolvedGraph::unresolved() const {
  return static_cast<std::size_t>(
      std::count_if(conflicts.begin(), conflicts.end(), [](const ResolvedConflict& c) {
        return c.resolution == Resolution::Unresolved;
      }));
}

nlohmann::ordered_json ResolvedGraph::to_json() const {
  auto out = graph.to_json();
  out["conflicts"] = nlohmann::ordered_json::array();
  for (const auto& c : conflicts) {
    nlohmann::ordered_json j;
    j["pro_path"] = c.conflict.pro_path;
    j["con_edge"] = {{"cause", c.conflict.con_edge.cause},
                     {"effect", c.conflict.con_edge.effect}};
    j["pro_support"] = c.pro_support;
    j["con_support"] = c.con_support;
    j["resolution"] = to_string(c.resolution);
    out["conflicts"].push_back(std::move(j));
  }
  return out;
}

ResolvedGraph resolve(const CausalGraph& graph, ResolutionPolicy policy) {
  ResolvedGraph result{graph, {}};
  auto mark = [&](Edge* edge, bool won) {
    if (!edge) return;
    // A loss anywhere sticks.
    edge->prevailing = edge->prevailing.value_or(true) && won;
  };

  for (auto& conflict : detect_inconsistencies(graph)) {
    ResolvedConflict rc;
    rc.con_support = conflict.con_edge.support.size();
    rc.pro_support = SIZE_MAX;
    for (std::size_t i = 0; i + 1 < conflict.pro_path.size(); ++i) {
      const auto* edge = graph.find(conflict.pro_path[i], conflict.pro_path[i + 1],
                                    ClaimPolarity::Pro);
      rc.pro_support = std::min(rc.pro_support, edge->claim.support.size());
    }
    if (policy == ResolutionPolicy::SupportMajority) {
      if (rc.pro_support > rc.con_support) rc.resolution = Resolution::ProPrevails;
      if (rc.con_support > rc.pro_support) rc.resolution = Resolution::ConPrevails;
    }
    if (rc.resolution != Resolution::Unresolved) {
      const bool pro_won = rc.resolution == Resolution::ProPrevails;
      for (std::size_t i = 0; i + 1 < conflict.pro_path.size(); ++i)
        mark(result.graph.find(conflict.pro_path[i], conflict.pro_path[i + 1],
                               ClaimPolarity::Pro),
             pro_won);
      mark(result.graph.find(conflict.con_edge.cause, conflict.con_edge.effect,
                             ClaimPolarity::Con),
           !pro_won);
    }
    rc.conflict = std::move(conflict);
    result.conflicts.push_back(std::move(rc));
  }
  return result;
}

Theory KnowledgeBase::Snapshot::combined_theory() const {
  Theory out = theory;
  out.merge(claims_to_rules(claims));
  return out;
}

KnowledgeBase::KnowledgeBase() : current_(std::make_shared<const Snapshot>()) {}

std::shared_ptr<const KnowledgeBase::Snapshot> KnowledgeBase::snapshot() const {
  std::shared_lock lock(mutex_);
  return current_;
}

void KnowledgeBase::add_claim(const CausalClaim& claim) {
  std::unique_lock lock(mutex_);
  auto next = std::make_shared<Snapshot>(*current_);
  next->graph.assert_claim(claim);
  auto existing = std::find_if(next->claims.begin(), next->claims.end(),
                               [&](const CausalClaim& c) { return c.same_relation(claim); });
  if (existing == next->claims.end())
    next->claims.push_back(claim);
  else
    existing->support = next->graph.find(claim.cause, claim.effect, claim.polarity)->claim.support;
  current_ = std::move(next);
}

void KnowledgeBase::add_theory(const Theory& theory) {
  theory.validate();
  std::unique_lock lock(mutex_);
  auto next = std::make_shared<Snapshot>(*current_);
  next->theory.merge(theory);
  current_ = std::move(next);
}

Verdict KnowledgeBase::conclude(const Literal& query, InferenceMode mode,
                                bool specificity) const {
  return reasoner::conclude(snapshot()->combined_theory(), query, mode, specificity);
}

std::vector<Conflict> KnowledgeBase::inconsistencies() const {
  return detect_inconsistencies(snapshot()->graph);
}

}  // namespace concausal::reasoner

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
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "concausal/reasoner/claims.h"
#include "concausal/reasoner/extensions.h"

namespace concausal::reasoner {

struct Edge {
  CausalClaim claim;
  // Set by resolve(): true when the edge's side prevailed in every
  // resolved conflict it takes part in, false when it lost any.
  std::optional<bool> prevailing;
};

class CausalGraph {
 public:
  using Key = std::tuple<std::string, std::string, ClaimPolarity>;

  // Adds the claim, merging support into an existing edge with the same
  // (cause, effect, polarity). Throws ReasonerError on invalid claims.
  void assert_claim(const CausalClaim& claim);
  // Value-returning variant; the receiver is left unchanged.
  CausalGraph with_claim(const CausalClaim& claim) const;

  const std::set<std::string>& nodes() const { return nodes_; }
  const std::map<Key, Edge>& edges() const { return edges_; }
  const Edge* find(const std::string& cause, const std::string& effect,
                   ClaimPolarity polarity) const;
  Edge* find(const std::string& cause, const std::string& effect, ClaimPolarity polarity);
  std::size_t edge_count() const { return edges_.size(); }

  // Successors over edges of one polarity, sorted.
  std::vector<std::string> successors(const std::string& node, ClaimPolarity polarity) const;

  nlohmann::ordered_json to_json() const;

 private:
  std::set<std::string> nodes_;
  std::map<Key, Edge> edges_;
};

struct Conflict {
  std::vector<std::string> pro_path;  // X, ..., Y over pro edges
  CausalClaim con_edge;               // con(X, Y)

  bool operator==(const Conflict&) const = default;
};

// Every simple pro path X -> ... -> Y paired with each con edge X -/-> Y,
// ordered by con edge then path.
std::vector<Conflict> detect_inconsistencies(const CausalGraph& graph);

enum class ResolutionPolicy { SupportMajority, FlagOnly };
enum class Resolution { ProPrevails, ConPrevails, Unresolved };

std::string_view to_string(ResolutionPolicy policy);
std::optional<ResolutionPolicy> parse_policy(std::string_view text);
std::string_view to_string(Resolution resolution);

struct ResolvedConflict {
  Conflict conflict;
  std::size_t pro_support = 0;  // weakest edge along the path
  std::size_t con_support = 0;
  Resolution resolution = Resolution::Unresolved;
};

struct ResolvedGraph {
  CausalGraph graph;  // edges annotated with prevailing
  std::vector<ResolvedConflict> conflicts;

  std::size_t unresolved() const;
  nlohmann::ordered_json to_json() const;
};

// Support-majority: a path's support is the smallest support count of its
// edges; the side with strictly more support prevails. Ties and the
// flag-only policy leave the conflict unresolved.
ResolvedGraph resolve(const CausalGraph& graph, ResolutionPolicy policy);

// Thread-safe store: writers are serialized and publish a new immutable
// snapshot; readers take the current snapshot without blocking writers.
class KnowledgeBase {
 public:
  struct Snapshot {
    Theory theory;  // facts, rules and defaults given directly
    std::vector<CausalClaim> claims;
    CausalGraph graph;

    // theory plus the rules of all claims.
    Theory combined_theory() const;
  };

  KnowledgeBase();

  std::shared_ptr<const Snapshot> snapshot() const;

  void add_claim(const CausalClaim& claim);
  void add_theory(const Theory& theory);

  Verdict conclude(const Literal& query, InferenceMode mode, bool specificity) const;
  std::vector<Conflict> inconsistencies() const;

 private:
  mutable std::shared_mutex mutex_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace concausal::reasoner

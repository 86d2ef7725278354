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

#include "concausal/annotation/guidelines.h"

#include <algorithm>

namespace concausal::annotation {

namespace {

nlohmann::ordered_json build() {
  using json = nlohmann::ordered_json;
  json g;
  g["labels"] = json::array({
      {{"label", "procausal"}, {"key", "1"},
       {"description", "The text states that A causes B."},
       {"example", "Not permiting bars caused a protest."}},
      {{"label", "concausal"}, {"key", "2"},
       {"description", "The text states that A does not cause B."},
       {"example", "Not a single person was left stranded by the strike."}},
      {{"label", "uncausal"}, {"key", "3"},
       {"description", "The text is neither procausal nor concausal."},
       {"example", "We are not on strike."}},
  });

  g["checklist"] = json::array({
      {{"test", "temporal_order"}, {"kind", "required"},
       {"question", "Can the effect have happened before the cause?"},
       {"example", "The vase broke before the fall."}},
      {{"test", "counterfactuality"}, {"kind", "required"},
       {"question", "Is the effect less likely without the cause?"},
       {"example", "He came home and his mailbox is empty."}},
      {{"test", "ontological_asymmetry"}, {"kind", "required"},
       {"question", "Could the effect only rarely cause the cause?"},
       {"example", "It is a triangle because it has three sides."}},
      {{"test", "causal_chain"}, {"kind", "help"},
       {"question", "Can you build a chain of immediate causes from A to B?"},
       {"example", "The vase broke because it fell."}},
      {{"test", "linguistic_test"}, {"kind", "help"},
       {"question", "Can the text be rephrased as 'A causes B'?"},
       {"example", "It is Johns birthday, and he is happy."}},
  });

  auto family = [](std::string name, std::string title, std::vector<std::string> examples) {
    return json{{"category", std::move(name)}, {"title", std::move(title)},
                {"examples", std::move(examples)}};
  };
  g["concausal_categories"] = json::array({
      family("DirectNegation", "Direct negation",
             {"A does not cause B", "B is caused by something else than A",
              "B is only caused by events in M (A not in M)"}),
      family("NegatedContext", "Negated context",
             {"It is wrong that A causes B", "There is no evidence that A causes B"}),
      family("LackOfCounterfactuality", "Lack of counterfactuality",
             {"B is equally likely without A", "A and B happened coincidentally"}),
      family("LackOfEffect", "Lack of effect",
             {"A happened and B did not happen", "A was done in vain to achieve B",
              "A is insufficient to achieve B"}),
      family("ImplicitLackOfEffect", "Implicit lack of effect",
             {"He is happy. He did not win the lottery.",
              "He told a joke and no one laughed."}),
      family("NegativeCausation", "Negative causation (label procausal)",
             {"A causes not B", "A prevents B"}),
      family("UsualInverseEffect", "Usual inverse effect", {"B happened despite A"}),
      family("Coincidence", "Coincidence", {"A happened; B happened independently of A"}),
      family("TemporalOrder", "Temporal order", {"A happened only after B"}),
      family("Contradiction", "Contradiction", {"B never happens"}),
      family("SpatialRelation", "Spatial relation", {"A wasn't present when B happened"}),
  });

  g["rules"] = json::array({
      "Label concausal only if the text explicitly denies causality or if causation would "
      "otherwise be conceivable.",
      "Negative causation (A prevents B) is labeled procausal; the implied counterclaim is "
      "not annotated separately.",
      "For B happened despite A, annotate only the directly stated concausal relation.",
      "A purpose relation is procausal when it names the trigger (A is done to protest "
      "against B) or an immediate result (money is put in the bank to keep it safe), and "
      "uncausal when it only names an abstract goal.",
      "Statements that are neither procausal nor concausal, such as 'He ate.', are "
      "uncausal.",
      "Checklist outcomes are notes for discussion; they never decide the label.",
  });
  return g;
}

}  // namespace

bool is_checklist_test(std::string_view name) {
  return std::find(kChecklistTests.begin(), kChecklistTests.end(), name) !=
         kChecklistTests.end();
}

const nlohmann::ordered_json& guidelines() {
  static const nlohmann::ordered_json content = build();
  return content;
}

}  // namespace concausal::annotation

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

#include <array>
#include <string_view>

#include <json.hpp>

namespace concausal::annotation {

// Names of the reflective tests an annotator may record per label.
inline constexpr std::array<std::string_view, 5> kChecklistTests = {
    "temporal_order", "counterfactuality", "ontological_asymmetry", "causal_chain",
    "linguistic_test"};

bool is_checklist_test(std::string_view name);

// Instructions served to annotators: the five tests with examples, the
// concausal expression families with examples, and labeling rules.
const nlohmann::ordered_json& guidelines();

}  // namespace concausal::annotation

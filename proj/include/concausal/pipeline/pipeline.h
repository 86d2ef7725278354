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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "concausal/corpus/record.h"
#include "concausal/extractor/extractor.h"
#include "concausal/metrics/report.h"

namespace concausal::pipeline {

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One extracted sentence. `record` carries the predicted ternary label and
// the predicted cause/effect spans (relation k = k-th extracted pair), so
// a predictions file is also a valid claims-jsonl corpus.
struct Prediction {
  corpus::SentenceRecord record;
  // Identification of each gold relation that has both a cause and an
  // effect span, in relation order.
  std::vector<corpus::CausalityLabel> pair_labels;
  std::optional<corpus::BinaryLabel> binary;  // set in binary mode
  std::vector<std::string> rules;
};

// Detection, candidate extraction and pair identification for every
// record, fanned out over `threads` workers (0 = hardware concurrency).
// Output is sorted by id.
std::vector<Prediction> run_extraction(const extractor::Extractor& extractor,
                                       std::span<const corpus::SentenceRecord> records,
                                       extractor::DetectionMode mode, unsigned threads = 0);

// claims-jsonl plus "pair_labels", "rules" and, in binary mode, "binary".
std::string serialize_predictions(std::span<const Prediction> predictions);
std::vector<Prediction> parse_predictions(std::string_view text);

enum class EvalTask { Detection, DetectionBinary, Extraction, Identification };

inline constexpr std::array<EvalTask, 4> kAllTasks = {
    EvalTask::Detection, EvalTask::DetectionBinary, EvalTask::Extraction,
    EvalTask::Identification};

std::string_view to_string(EvalTask task);
std::optional<EvalTask> parse_task(std::string_view text);

// Scores predictions against gold records. Both sides must hold the same
// ids; order does not matter. Extraction is token-level over merged
// BIO-CE tags; identification scores the gold relations' pairs.
metrics::TaskReport evaluate(std::span<const corpus::SentenceRecord> gold,
                             std::span<const Prediction> predictions, EvalTask task);

// Gold pairs in the order run_extraction identifies them.
std::vector<std::pair<corpus::Span, corpus::Span>> gold_pairs(
    const corpus::SentenceRecord& record);

}  // namespace concausal::pipeline

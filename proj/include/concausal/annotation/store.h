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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "concausal/corpus/record.h"
#include "concausal/metrics/metrics.h"

namespace concausal::annotation {

// Error with a machine-readable code and the HTTP status it maps to.
class AnnotationError : public std::runtime_error {
 public:
  AnnotationError(std::string code, const std::string& message, int status);
  const std::string& code() const { return code_; }
  int status() const { return status_; }

 private:
  std::string code_;
  int status_;
};

enum class ChecklistOutcome { Pass, Fail, NotApplicable };
std::string_view to_string(ChecklistOutcome outcome);
std::optional<ChecklistOutcome> parse_outcome(std::string_view text);

struct LabelEvent {
  std::string item_id;
  std::string annotator;
  corpus::CausalityLabel label = corpus::CausalityLabel::Uncausal;
  std::map<std::string, ChecklistOutcome> checklist;
  int round = 1;
  std::string timestamp;  // filled in by the store when empty
};

struct Adjudication {
  std::string item_id;
  int round = 1;
  corpus::CausalityLabel label = corpus::CausalityLabel::Uncausal;
  std::string rationale;
  std::string resolved_by;
  std::string timestamp;
};

struct AgreementReport {
  metrics::AgreementResult result;
  std::vector<std::string> common_items;
  std::vector<std::string> disagreements;
};

struct Progress {
  std::size_t labeled = 0;
  std::size_t total = 0;
};

// Items, annotators and an append-only JSONL event log. State is rebuilt
// by replaying the log on construction. Writers are serialized; readers
// share the lock.
class AnnotationStore {
 public:
  // log may be empty for an in-memory store.
  AnnotationStore(std::vector<corpus::SentenceRecord> items, std::vector<std::string> annotators,
                  std::filesystem::path log = {});

  // Loads items.csv or items.jsonl and annotators.txt (one id per line)
  // from dir and appends to dir/events.jsonl.
  static AnnotationStore open(const std::filesystem::path& dir);

  std::size_t item_count() const { return items_.size(); }
  const std::vector<std::string>& annotators() const { return annotators_; }

  // Lowest id in the round without a label from this annotator.
  std::optional<corpus::SentenceRecord> next_item(const std::string& annotator, int round) const;
  Progress progress(const std::string& annotator, int round) const;

  // Returns the event's 1-based position in the log.
  std::size_t submit_label(LabelEvent event);
  std::size_t adjudicate(Adjudication adjudication);

  // Latest label per item of one annotator in one round.
  std::map<std::string, corpus::CausalityLabel> labels(const std::string& annotator,
                                                       int round) const;

  // Kappa over items both annotators labeled in the round.
  AgreementReport agreement(const std::string& a, const std::string& b, int round) const;

  // unicausal-csv of the round's items with final labels. Every item
  // needs at least one label and disagreements need an adjudication.
  std::string export_corpus(int round) const;

  // Seeded sample of `size` round items, balanced across the items'
  // current labels; recorded in the log and used as the round's item set.
  std::vector<std::string> sample_round(int round, std::size_t size, std::uint64_t seed);
  // Item ids of the round: the sampled set, or all items.
  std::vector<std::string> round_items(int round) const;

  std::size_t event_count() const;

 private:
  void apply(const nlohmann::json& event);
  void append(const nlohmann::ordered_json& event);
  void require_item(const std::string& id) const;
  void require_annotator(const std::string& id) const;
  std::vector<std::string> round_items_locked(int round) const;
  std::map<std::string, corpus::CausalityLabel> labels_locked(const std::string& annotator,
                                                              int round) const;

  std::map<std::string, corpus::SentenceRecord> items_;
  std::vector<std::string> annotators_;
  std::filesystem::path log_;

  mutable std::shared_mutex mutex_;
  std::vector<LabelEvent> label_events_;
  std::map<std::pair<int, std::string>, Adjudication> adjudications_;
  std::map<int, std::vector<std::string>> rounds_;
  std::size_t events_ = 0;
};

nlohmann::ordered_json to_json(const LabelEvent& event);
nlohmann::ordered_json to_json(const Adjudication& adjudication);

}  // namespace concausal::annotation

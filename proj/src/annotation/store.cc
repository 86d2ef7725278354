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

#include "concausal/annotation/store.h"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <mutex>
#include <random>
#include <set>

#include "concausal/annotation/guidelines.h"
#include "concausal/corpus/io.h"

namespace concausal::annotation {

namespace {

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

corpus::CausalityLabel label_from(const nlohmann::json& value) {
  if (!value.is_string())
    throw AnnotationError("invalid_label", "label must be a string", 400);
  auto label = corpus::parse_label(value.get<std::string>());
  if (!label)
    throw AnnotationError("invalid_label", "unknown label '" + value.get<std::string>() + "'",
                          400);
  return *label;
}

std::vector<std::string> read_annotators(const std::filesystem::path& path) {
  std::vector<std::string> out;
  std::ifstream in(path);
  if (!in) throw AnnotationError("io_error", "cannot read " + path.string(), 500);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line.front() != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

AnnotationError::AnnotationError(std::string code, const std::string& message, int status)
    : std::runtime_error(message), code_(std::move(code)), status_(status) {}

std::string_view to_string(ChecklistOutcome outcome) {
  switch (outcome) {
    case ChecklistOutcome::Pass: return "pass";
    case ChecklistOutcome::Fail: return "fail";
    case ChecklistOutcome::NotApplicable: return "n/a";
  }
  return "n/a";
}

std::optional<ChecklistOutcome> parse_outcome(std::string_view text) {
  if (text == "pass") return ChecklistOutcome::Pass;
  if (text == "fail") return ChecklistOutcome::Fail;
  if (text == "n/a" || text == "na") return ChecklistOutcome::NotApplicable;
  return std::nullopt;
}

nlohmann::ordered_json to_json(const LabelEvent& event) {
  nlohmann::ordered_json j;
  j["type"] = "label";
  j["item"] = event.item_id;
  j["annotator"] = event.annotator;
  j["label"] = corpus::to_string(event.label);
  j["round"] = event.round;
  auto checklist = nlohmann::ordered_json::object();
  for (const auto& [test, outcome] : event.checklist) checklist[test] = to_string(outcome);
  j["checklist"] = std::move(checklist);
  j["timestamp"] = event.timestamp;
  return j;
}

nlohmann::ordered_json to_json(const Adjudication& a) {
  return {{"type", "adjudication"}, {"item", a.item_id},       {"round", a.round},
          {"label", corpus::to_string(a.label)}, {"rationale", a.rationale},
          {"resolved_by", a.resolved_by},        {"timestamp", a.timestamp}};
}

AnnotationStore::AnnotationStore(std::vector<corpus::SentenceRecord> items,
                                 std::vector<std::string> annotators, std::filesystem::path log)
    : annotators_(std::move(annotators)), log_(std::move(log)) {
  for (auto& item : items) {
    const auto id = item.id;
    if (!items_.emplace(id, std::move(item)).second)
      throw AnnotationError("duplicate_item", "duplicate item id '" + id + "'", 500);
  }
  if (log_.empty() || !std::filesystem::exists(log_)) return;

  std::ifstream in(log_);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      apply(nlohmann::json::parse(line));
    } catch (const std::exception& e) {
      throw AnnotationError("corrupt_log", log_.string() + ":" + std::to_string(line_no) + ": " +
                                               e.what(),
                            500);
    }
  }
}

AnnotationStore AnnotationStore::open(const std::filesystem::path& dir) {
  std::filesystem::path items_path = dir / "items.jsonl";
  if (!std::filesystem::exists(items_path)) items_path = dir / "items.csv";
  if (!std::filesystem::exists(items_path))
    throw AnnotationError("io_error", "no items.jsonl or items.csv in " + dir.string(), 500);
  auto items = corpus::load_corpus(items_path);
  return AnnotationStore(std::move(items), read_annotators(dir / "annotators.txt"),
                         dir / "events.jsonl");
}

void AnnotationStore::apply(const nlohmann::json& event) {
  const auto type = event.at("type").get<std::string>();
  if (type == "label") {
    LabelEvent e;
    e.item_id = event.at("item").get<std::string>();
    e.annotator = event.at("annotator").get<std::string>();
    e.label = label_from(event.at("label"));
    e.round = event.at("round").get<int>();
    const auto checklist = event.value("checklist", nlohmann::json::object());
    for (const auto& [test, outcome] : checklist.items())
      if (auto o = parse_outcome(outcome.get<std::string>())) e.checklist[test] = *o;
    e.timestamp = event.value("timestamp", "");
    label_events_.push_back(std::move(e));
  } else if (type == "adjudication") {
    Adjudication a;
    a.item_id = event.at("item").get<std::string>();
    a.round = event.at("round").get<int>();
    a.label = label_from(event.at("label"));
    a.rationale = event.value("rationale", "");
    a.resolved_by = event.value("resolved_by", "");
    a.timestamp = event.value("timestamp", "");
    adjudications_[{a.round, a.item_id}] = std::move(a);
  } else if (type == "round") {
    rounds_[event.at("round").get<int>()] = event.at("items").get<std::vector<std::string>>();
  } else {
    throw AnnotationError("corrupt_log", "unknown event type '" + type + "'", 500);
  }
  ++events_;
}

void AnnotationStore::append(const nlohmann::ordered_json& event) {
  if (!log_.empty()) {
    std::ofstream out(log_, std::ios::app);
    out << event.dump() << '\n';
    out.flush();
    if (!out) throw AnnotationError("io_error", "cannot append to " + log_.string(), 500);
  }
  apply(nlohmann::json::parse(event.dump()));
}

void AnnotationStore::require_item(const std::string& id) const {
  if (!items_.count(id)) throw AnnotationError("unknown_item", "unknown item '" + id + "'", 404);
}

void AnnotationStore::require_annotator(const std::string& id) const {
  if (std::find(annotators_.begin(), annotators_.end(), id) == annotators_.end())
    throw AnnotationError("unknown_annotator", "unknown annotator '" + id + "'", 404);
}

std::vector<std::string> AnnotationStore::round_items_locked(int round) const {
  if (auto it = rounds_.find(round); it != rounds_.end()) return it->second;
  std::vector<std::string> all;
  for (const auto& [id, record] : items_) all.push_back(id);
  return all;
}

std::vector<std::string> AnnotationStore::round_items(int round) const {
  std::shared_lock lock(mutex_);
  return round_items_locked(round);
}

std::map<std::string, corpus::CausalityLabel> AnnotationStore::labels_locked(
    const std::string& annotator, int round) const {
  std::map<std::string, corpus::CausalityLabel> out;
  for (const auto& e : label_events_)
    if (e.annotator == annotator && e.round == round) out[e.item_id] = e.label;
  return out;
}

std::map<std::string, corpus::CausalityLabel> AnnotationStore::labels(
    const std::string& annotator, int round) const {
  require_annotator(annotator);
  std::shared_lock lock(mutex_);
  return labels_locked(annotator, round);
}

std::optional<corpus::SentenceRecord> AnnotationStore::next_item(const std::string& annotator,
                                                                 int round) const {
  require_annotator(annotator);
  std::shared_lock lock(mutex_);
  const auto done = labels_locked(annotator, round);
  auto ids = round_items_locked(round);
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids)
    if (!done.count(id)) return items_.at(id);
  return std::nullopt;
}

Progress AnnotationStore::progress(const std::string& annotator, int round) const {
  require_annotator(annotator);
  std::shared_lock lock(mutex_);
  const auto done = labels_locked(annotator, round);
  Progress p;
  for (const auto& id : round_items_locked(round)) {
    ++p.total;
    if (done.count(id)) ++p.labeled;
  }
  return p;
}

std::size_t AnnotationStore::submit_label(LabelEvent event) {
  require_item(event.item_id);
  require_annotator(event.annotator);
  for (const auto& [test, outcome] : event.checklist)
    if (!is_checklist_test(test))
      throw AnnotationError("invalid_request", "unknown checklist test '" + test + "'", 400);
  if (event.timestamp.empty()) event.timestamp = now_utc();
  std::unique_lock lock(mutex_);
  append(to_json(event));
  return events_;
}

std::size_t AnnotationStore::adjudicate(Adjudication adjudication) {
  require_item(adjudication.item_id);
  require_annotator(adjudication.resolved_by);
  if (adjudication.timestamp.empty()) adjudication.timestamp = now_utc();
  std::unique_lock lock(mutex_);
  append(to_json(adjudication));
  return events_;
}

AgreementReport AnnotationStore::agreement(const std::string& a, const std::string& b,
                                           int round) const {
  require_annotator(a);
  require_annotator(b);
  std::shared_lock lock(mutex_);
  const auto la = labels_locked(a, round);
  const auto lb = labels_locked(b, round);
  AgreementReport report;
  std::vector<std::string> va, vb;
  for (const auto& [id, label] : la) {
    auto it = lb.find(id);
    if (it == lb.end()) continue;
    report.common_items.push_back(id);
    va.emplace_back(corpus::to_string(label));
    vb.emplace_back(corpus::to_string(it->second));
    if (label != it->second) report.disagreements.push_back(id);
  }
  if (report.common_items.empty())
    throw AnnotationError("no_overlap",
                          a + " and " + b + " share no labeled item in round " +
                              std::to_string(round),
                          409);
  report.result = metrics::cohen_kappa(va, vb);
  return report;
}

std::string AnnotationStore::export_corpus(int round) const {
  std::shared_lock lock(mutex_);
  std::map<std::string, std::set<corpus::CausalityLabel>> given;
  for (const auto& annotator : annotators_)
    for (const auto& [id, label] : labels_locked(annotator, round)) given[id].insert(label);

  auto ids = round_items_locked(round);
  std::sort(ids.begin(), ids.end());
  std::vector<corpus::SentenceRecord> out;
  for (const auto& id : ids) {
    corpus::SentenceRecord record = items_.at(id);
    if (auto adj = adjudications_.find({round, id}); adj != adjudications_.end()) {
      record.label = adj->second.label;
    } else {
      auto it = given.find(id);
      if (it == given.end())
        throw AnnotationError("unlabeled_item", "item '" + id + "' has no label", 409);
      if (it->second.size() > 1)
        throw AnnotationError("pending_disagreement",
                              "item '" + id + "' has an unadjudicated disagreement", 409);
      record.label = *it->second.begin();
    }
    if (record.label == corpus::CausalityLabel::Uncausal)
      std::erase_if(record.spans,
                    [](const corpus::Span& s) { return s.role != corpus::SpanRole::Signal; });
    out.push_back(std::move(record));
  }
  const auto issues = corpus::validate_corpus(out);
  if (!issues.empty())
    throw AnnotationError("invalid_export", issues.front().to_string(), 500);
  return corpus::serialize_corpus(out, corpus::Format::UnicausalCsv);
}

std::vector<std::string> AnnotationStore::sample_round(int round, std::size_t size,
                                                       std::uint64_t seed) {
  std::unique_lock lock(mutex_);
  if (size == 0 || size > items_.size())
    throw AnnotationError("invalid_request",
                          "sample size must be between 1 and " + std::to_string(items_.size()),
                          400);
  std::map<corpus::CausalityLabel, std::vector<std::string>> strata;
  for (const auto& [id, record] : items_) strata[record.label].push_back(id);

  std::mt19937_64 rng(seed);
  for (auto& [label, ids] : strata) std::shuffle(ids.begin(), ids.end(), rng);

  // Round-robin over classes gives an even split until a class runs out.
  std::vector<std::string> chosen;
  std::map<corpus::CausalityLabel, std::size_t> taken;
  while (chosen.size() < size) {
    for (auto& [label, ids] : strata) {
      if (chosen.size() == size) break;
      if (taken[label] < ids.size()) chosen.push_back(ids[taken[label]++]);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  nlohmann::ordered_json event{{"type", "round"}, {"round", round}, {"seed", seed},
                               {"items", chosen}, {"timestamp", now_utc()}};
  append(event);
  return chosen;
}

std::size_t AnnotationStore::event_count() const {
  std::shared_lock lock(mutex_);
  return events_;
}

}  // namespace concausal::annotation

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

#include "concausal/corpus/record.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>
#include <unordered_map>

namespace concausal::corpus {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_continuation_byte(unsigned char c) { return (c & 0xC0) == 0x80; }

bool on_code_point_boundary(std::string_view text, std::size_t offset) {
  if (offset == 0 || offset >= text.size()) return true;
  return !is_continuation_byte(static_cast<unsigned char>(text[offset]));
}

}  // namespace

std::string_view to_string(CausalityLabel label) {
  switch (label) {
    case CausalityLabel::Uncausal: return "uncausal";
    case CausalityLabel::Procausal: return "procausal";
    case CausalityLabel::Concausal: return "concausal";
  }
  return "uncausal";
}

std::string_view to_string(BinaryLabel label) {
  return label == BinaryLabel::Causal ? "causal" : "uncausal";
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::Train: return "train";
    case Split::Validation: return "validation";
    case Split::Test: return "test";
  }
  return "train";
}

std::string_view to_string(Origin origin) {
  return origin == Origin::Rewritten ? "rewritten" : "original";
}

std::string_view to_string(SpanRole role) {
  switch (role) {
    case SpanRole::Cause: return "cause";
    case SpanRole::Effect: return "effect";
    case SpanRole::Signal: return "signal";
  }
  return "cause";
}

std::optional<CausalityLabel> parse_label(std::string_view text) {
  const std::string key = lower(text);
  if (key == "procausal" || key == "pro" || key == "pc")
    return CausalityLabel::Procausal;
  if (key == "concausal" || key == "con" || key == "cc")
    return CausalityLabel::Concausal;
  if (key == "uncausal" || key == "un" || key == "uc")
    return CausalityLabel::Uncausal;
  return std::nullopt;
}

std::optional<BinaryLabel> parse_binary_label(std::string_view text) {
  const std::string key = lower(text);
  if (key == "causal" || key == "1") return BinaryLabel::Causal;
  if (key == "uncausal" || key == "noncausal" || key == "0")
    return BinaryLabel::Uncausal;
  return std::nullopt;
}

std::optional<Split> parse_split(std::string_view text) {
  const std::string key = lower(text);
  if (key == "train") return Split::Train;
  if (key == "validation" || key == "val" || key == "dev")
    return Split::Validation;
  if (key == "test") return Split::Test;
  return std::nullopt;
}

std::optional<Origin> parse_origin(std::string_view text) {
  const std::string key = lower(text);
  if (key == "original") return Origin::Original;
  if (key == "rewritten") return Origin::Rewritten;
  return std::nullopt;
}

std::optional<SpanRole> parse_role(std::string_view text) {
  const std::string key = lower(text);
  if (key == "cause" || key == "c") return SpanRole::Cause;
  if (key == "effect" || key == "e") return SpanRole::Effect;
  if (key == "signal" || key == "s") return SpanRole::Signal;
  return std::nullopt;
}

BinaryLabel to_binary(CausalityLabel label) {
  return label == CausalityLabel::Uncausal ? BinaryLabel::Uncausal
                                           : BinaryLabel::Causal;
}

bool span_less(const Span& a, const Span& b) {
  return std::tuple(a.relation, a.start, a.end, static_cast<int>(a.role)) <
         std::tuple(b.relation, b.start, b.end, static_cast<int>(b.role));
}

std::string Issue::to_string() const {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!record_id.empty()) out += "record '" + record_id + "': ";
  out += message;
  return out;
}

void canonicalize(SentenceRecord& record) {
  std::sort(record.spans.begin(), record.spans.end(), span_less);
}

std::string_view slice(std::string_view text, const Span& span) {
  if (span.start > span.end || span.end > text.size()) return {};
  return text.substr(span.start, span.end - span.start);
}

std::vector<int> relation_indices(const SentenceRecord& record) {
  std::set<int> seen;
  for (const auto& span : record.spans) seen.insert(span.relation);
  return {seen.begin(), seen.end()};
}

std::vector<Span> relation_spans(const SentenceRecord& record, int relation) {
  std::vector<Span> out;
  for (const auto& span : record.spans)
    if (span.relation == relation) out.push_back(span);
  std::sort(out.begin(), out.end(), span_less);
  return out;
}

std::vector<Issue> validate_record(const SentenceRecord& record,
                                   std::size_t line) {
  std::vector<Issue> issues;
  auto report = [&](std::string message) {
    issues.push_back({record.id, line, std::move(message)});
  };

  if (record.id.empty()) report("empty id");

  bool has_cause_or_effect = false;
  for (const auto& span : record.spans) {
    const std::string where = std::string(to_string(span.role)) + " span [" +
                              std::to_string(span.start) + "," +
                              std::to_string(span.end) + ")";
    if (span.start >= span.end) {
      report(where + " is empty");
      continue;
    }
    if (span.end > record.text.size()) {
      report(where + " out of bounds (text length " +
             std::to_string(record.text.size()) + ")");
      continue;
    }
    if (!on_code_point_boundary(record.text, span.start) ||
        !on_code_point_boundary(record.text, span.end)) {
      report(where + " splits a UTF-8 character");
    }
    if (span.relation < 0) report(where + " has negative relation index");
    if (span.role != SpanRole::Signal) has_cause_or_effect = true;
  }

  for (std::size_t i = 0; i < record.spans.size(); ++i) {
    for (std::size_t j = i + 1; j < record.spans.size(); ++j) {
      const auto& a = record.spans[i];
      const auto& b = record.spans[j];
      if (a.role == b.role && a.relation == b.relation && a.overlaps(b)) {
        report("overlapping " + std::string(to_string(a.role)) +
               " spans in relation " + std::to_string(a.relation));
      }
    }
  }

  if (record.label == CausalityLabel::Uncausal && has_cause_or_effect)
    report("uncausal record carries cause/effect spans");

  return issues;
}

std::vector<Issue> validate_corpus(std::span<const SentenceRecord> records) {
  std::vector<Issue> issues;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto found = validate_record(records[i]);
    issues.insert(issues.end(), found.begin(), found.end());
    if (records[i].id.empty()) continue;
    auto [it, inserted] = seen.emplace(records[i].id, i);
    if (!inserted)
      issues.push_back({records[i].id, 0, "duplicate id '" + records[i].id + "'"});
  }
  return issues;
}

}  // namespace concausal::corpus

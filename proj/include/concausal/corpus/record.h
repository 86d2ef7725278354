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
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace concausal::corpus {

// Listed in confusion-matrix report order.
enum class CausalityLabel { Uncausal, Procausal, Concausal };

inline constexpr std::array<CausalityLabel, 3> kAllLabels = {
    CausalityLabel::Uncausal, CausalityLabel::Procausal,
    CausalityLabel::Concausal};

// Binary detection view: procausal and concausal are both "causal".
enum class BinaryLabel { Uncausal, Causal };

enum class Split { Train, Validation, Test };

inline constexpr std::array<Split, 3> kAllSplits = {
    Split::Train, Split::Validation, Split::Test};

enum class Origin { Original, Rewritten };

enum class SpanRole { Cause, Effect, Signal };

std::string_view to_string(CausalityLabel label);
std::string_view to_string(BinaryLabel label);
std::string_view to_string(Split split);
std::string_view to_string(Origin origin);
std::string_view to_string(SpanRole role);

// Parsers accept the canonical names plus a few common aliases
// ("pro"/"con"/"un", "dev"/"val"); they return nullopt on anything else.
std::optional<CausalityLabel> parse_label(std::string_view text);
std::optional<BinaryLabel> parse_binary_label(std::string_view text);
std::optional<Split> parse_split(std::string_view text);
std::optional<Origin> parse_origin(std::string_view text);
std::optional<SpanRole> parse_role(std::string_view text);

BinaryLabel to_binary(CausalityLabel label);

// A character range [start, end) in UTF-8 bytes of the record text.
// relation groups the cause/effect/signal spans of one relation.
struct Span {
  SpanRole role = SpanRole::Cause;
  std::size_t start = 0;
  std::size_t end = 0;
  int relation = 0;

  std::size_t length() const { return end - start; }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span&) const = default;
};

// Canonical span order: relation, start, end, role.
bool span_less(const Span& a, const Span& b);

struct SentenceRecord {
  std::string id;
  Split split = Split::Train;
  std::string text;
  CausalityLabel label = CausalityLabel::Uncausal;
  std::vector<Span> spans;
  Origin origin = Origin::Original;

  bool operator==(const SentenceRecord&) const = default;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One validation finding. line is the 1-based source line of the row
// that produced the record, 0 when the record did not come from text.
struct Issue {
  std::string record_id;
  std::size_t line = 0;
  std::string message;

  std::string to_string() const;
};

// Sorts spans into canonical order in place.
void canonicalize(SentenceRecord& record);

std::string_view slice(std::string_view text, const Span& span);

// Distinct relation indices that carry at least one span, ascending.
std::vector<int> relation_indices(const SentenceRecord& record);
std::vector<Span> relation_spans(const SentenceRecord& record, int relation);

// Per-record invariants: non-empty id, spans non-empty and in bounds,
// span boundaries on UTF-8 code point boundaries, no same-role overlap
// inside a relation, no cause/effect spans on uncausal records.
std::vector<Issue> validate_record(const SentenceRecord& record,
                                   std::size_t line = 0);

// validate_record over every record plus id uniqueness.
std::vector<Issue> validate_corpus(std::span<const SentenceRecord> records);

}  // namespace concausal::corpus

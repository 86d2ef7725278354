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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "concausal/corpus/record.h"
#include "concausal/corpus/tokenizer.h"

namespace concausal::corpus {

enum class BioTag {
  O,
  BeginCause,
  InsideCause,
  BeginEffect,
  InsideEffect,
  BeginSignal,   // extended scheme only
  InsideSignal,  // extended scheme only
};

// The five-tag cause/effect scheme, in report order.
inline constexpr std::array<BioTag, 5> kCauseEffectTags = {
    BioTag::BeginCause, BioTag::InsideCause, BioTag::BeginEffect,
    BioTag::InsideEffect, BioTag::O};

// CauseEffect tags signal spans as O; WithSignal adds B-S/I-S.
enum class TagScheme { CauseEffect, WithSignal };

std::string_view to_string(BioTag tag);
std::optional<BioTag> parse_tag(std::string_view text);

class BioError : public std::runtime_error {
 public:
  BioError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  // Token index (bio_to_spans) or span index (spans_to_bio).
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Position of the first I- tag that lacks a matching B-/I- predecessor.
std::optional<std::size_t> first_invalid_tag(std::span<const BioTag> tags);
inline bool is_valid_sequence(std::span<const BioTag> tags) {
  return !first_invalid_tag(tags).has_value();
}

// Tags each token. Every included span must start at a token start and
// end at a token end; overlapping included spans are rejected. Spans of
// all relations passed in are painted together, so callers that hold
// several relations convert them one relation at a time.
std::vector<BioTag> spans_to_bio(std::span<const Token> tokens,
                                 std::span<const Span> spans,
                                 TagScheme scheme = TagScheme::CauseEffect);

// Maximal B-/I- runs become spans carrying the given relation index,
// returned in start order.
std::vector<Span> bio_to_spans(std::span<const Token> tokens,
                               std::span<const BioTag> tags, int relation = 0);

// True when [span.start, span.end) begins and ends on token boundaries.
bool aligned_to_tokens(std::span<const Token> tokens, const Span& span);

// Token-level view across all relations for scoring: cause/effect spans
// are taken in start order and a span overlapping an earlier kept one is
// skipped, so the result is always a valid sequence.
std::vector<BioTag> merged_bio(std::span<const Token> tokens,
                               std::span<const Span> spans);

std::string join_tags(std::span<const BioTag> tags);
std::vector<BioTag> split_tags(std::string_view text);  // throws BioError

}  // namespace concausal::corpus

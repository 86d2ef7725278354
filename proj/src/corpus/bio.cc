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

#include "concausal/corpus/bio.h"

#include <algorithm>
#include <sstream>

namespace concausal::corpus {

namespace {

bool included(SpanRole role, TagScheme scheme) {
  return role != SpanRole::Signal || scheme == TagScheme::WithSignal;
}

BioTag begin_tag(SpanRole role) {
  switch (role) {
    case SpanRole::Cause: return BioTag::BeginCause;
    case SpanRole::Effect: return BioTag::BeginEffect;
    case SpanRole::Signal: return BioTag::BeginSignal;
  }
  return BioTag::O;
}

BioTag inside_tag(SpanRole role) {
  switch (role) {
    case SpanRole::Cause: return BioTag::InsideCause;
    case SpanRole::Effect: return BioTag::InsideEffect;
    case SpanRole::Signal: return BioTag::InsideSignal;
  }
  return BioTag::O;
}

std::optional<SpanRole> role_of(BioTag tag) {
  switch (tag) {
    case BioTag::BeginCause:
    case BioTag::InsideCause: return SpanRole::Cause;
    case BioTag::BeginEffect:
    case BioTag::InsideEffect: return SpanRole::Effect;
    case BioTag::BeginSignal:
    case BioTag::InsideSignal: return SpanRole::Signal;
    case BioTag::O: return std::nullopt;
  }
  return std::nullopt;
}

bool is_begin(BioTag tag) {
  return tag == BioTag::BeginCause || tag == BioTag::BeginEffect ||
         tag == BioTag::BeginSignal;
}

std::string describe(const Span& span) {
  return std::string(to_string(span.role)) + " span [" +
         std::to_string(span.start) + "," + std::to_string(span.end) + ")";
}

}  // namespace

std::string_view to_string(BioTag tag) {
  switch (tag) {
    case BioTag::O: return "O";
    case BioTag::BeginCause: return "B-C";
    case BioTag::InsideCause: return "I-C";
    case BioTag::BeginEffect: return "B-E";
    case BioTag::InsideEffect: return "I-E";
    case BioTag::BeginSignal: return "B-S";
    case BioTag::InsideSignal: return "I-S";
  }
  return "O";
}

std::optional<BioTag> parse_tag(std::string_view text) {
  if (text == "O") return BioTag::O;
  if (text == "B-C") return BioTag::BeginCause;
  if (text == "I-C") return BioTag::InsideCause;
  if (text == "B-E") return BioTag::BeginEffect;
  if (text == "I-E") return BioTag::InsideEffect;
  if (text == "B-S") return BioTag::BeginSignal;
  if (text == "I-S") return BioTag::InsideSignal;
  return std::nullopt;
}

std::optional<std::size_t> first_invalid_tag(std::span<const BioTag> tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const BioTag tag = tags[i];
    if (tag == BioTag::O || is_begin(tag)) continue;
    if (i == 0 || role_of(tags[i - 1]) != role_of(tag)) return i;
  }
  return std::nullopt;
}

bool aligned_to_tokens(std::span<const Token> tokens, const Span& span) {
  const bool start_ok = std::any_of(tokens.begin(), tokens.end(), [&](const Token& t) {
    return t.start == span.start;
  });
  const bool end_ok = std::any_of(tokens.begin(), tokens.end(), [&](const Token& t) {
    return t.end == span.end;
  });
  return start_ok && end_ok && span.start < span.end;
}

std::vector<BioTag> spans_to_bio(std::span<const Token> tokens,
                                 std::span<const Span> spans,
                                 TagScheme scheme) {
  std::vector<BioTag> tags(tokens.size(), BioTag::O);

  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!included(spans[i].role, scheme)) continue;
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (!included(spans[j].role, scheme)) continue;
      if (spans[i].overlaps(spans[j]))
        throw BioError("overlapping " + describe(spans[i]) + " and " +
                           describe(spans[j]),
                       j);
    }
  }

  for (std::size_t i = 0; i < spans.size(); ++i) {
    const Span& span = spans[i];
    if (!included(span.role, scheme)) continue;
    if (!aligned_to_tokens(tokens, span))
      throw BioError(describe(span) + " crosses a token boundary", i);
    bool first = true;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (tokens[t].start < span.start || tokens[t].end > span.end) continue;
      tags[t] = first ? begin_tag(span.role) : inside_tag(span.role);
      first = false;
    }
  }
  return tags;
}

std::vector<Span> bio_to_spans(std::span<const Token> tokens,
                               std::span<const BioTag> tags, int relation) {
  if (tokens.size() != tags.size())
    throw BioError("tag count " + std::to_string(tags.size()) +
                       " does not match token count " +
                       std::to_string(tokens.size()),
                   std::min(tokens.size(), tags.size()));
  if (auto bad = first_invalid_tag(tags))
    throw BioError("tag " + std::string(to_string(tags[*bad])) +
                       " at position " + std::to_string(*bad) +
                       " has no opening B- tag",
                   *bad);

  std::vector<Span> spans;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!is_begin(tags[i])) continue;
    const SpanRole role = *role_of(tags[i]);
    std::size_t last = i;
    while (last + 1 < tags.size() && tags[last + 1] == inside_tag(role)) ++last;
    spans.push_back({role, tokens[i].start, tokens[last].end, relation});
    i = last;
  }
  return spans;
}

std::vector<BioTag> merged_bio(std::span<const Token> tokens,
                               std::span<const Span> spans) {
  std::vector<Span> candidates;
  for (const auto& span : spans)
    if (span.role != SpanRole::Signal && aligned_to_tokens(tokens, span))
      candidates.push_back(span);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Span& a, const Span& b) {
                     if (a.start != b.start) return a.start < b.start;
                     return a.end > b.end;
                   });
  std::vector<Span> kept;
  for (const auto& span : candidates) {
    const bool clashes = std::any_of(kept.begin(), kept.end(), [&](const Span& k) {
      return k.overlaps(span);
    });
    if (!clashes) kept.push_back(span);
  }
  return spans_to_bio(tokens, kept);
}

std::string join_tags(std::span<const BioTag> tags) {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(tags[i]);
  }
  return out;
}

std::vector<BioTag> split_tags(std::string_view text) {
  std::vector<BioTag> tags;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    auto tag = parse_tag(word);
    if (!tag) throw BioError("unknown BIO tag '" + word + "'", tags.size());
    tags.push_back(*tag);
  }
  return tags;
}

}  // namespace concausal::corpus

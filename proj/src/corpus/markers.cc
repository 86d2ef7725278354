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

#include "concausal/corpus/markers.h"

#include <algorithm>
#include <array>

namespace concausal::corpus {

namespace {

constexpr std::array<std::string_view, 4> kMarkers = {kArg0Open, kArg0Close,
                                                      kArg1Open, kArg1Close};

void check_span(std::string_view text, const Span& span, const char* name) {
  if (span.start >= span.end || span.end > text.size())
    throw CorpusError(std::string(name) + " span [" + std::to_string(span.start) +
                      "," + std::to_string(span.end) + ") is invalid for text of length " +
                      std::to_string(text.size()));
}

}  // namespace

std::string insert_arg_markers(std::string_view text, const Span& cause,
                               const Span& effect) {
  check_span(text, cause, "cause");
  check_span(text, effect, "effect");
  if (cause.overlaps(effect)) throw CorpusError("cause and effect spans overlap");
  for (auto marker : kMarkers)
    if (text.find(marker) != std::string_view::npos)
      throw CorpusError("text already contains marker " + std::string(marker));

  struct Insertion {
    std::size_t offset;
    std::string_view marker;
  };
  // At equal offsets a closing marker goes before an opening one.
  std::array<Insertion, 4> insertions = {{{cause.start, kArg0Open},
                                          {cause.end, kArg0Close},
                                          {effect.start, kArg1Open},
                                          {effect.end, kArg1Close}}};
  std::stable_sort(insertions.begin(), insertions.end(),
                   [](const Insertion& a, const Insertion& b) {
                     if (a.offset != b.offset) return a.offset < b.offset;
                     const bool a_close = a.marker[1] == '/';
                     const bool b_close = b.marker[1] == '/';
                     return a_close && !b_close;
                   });

  std::string out;
  out.reserve(text.size() + 26);
  std::size_t cursor = 0;
  for (const auto& ins : insertions) {
    out.append(text.substr(cursor, ins.offset - cursor));
    out.append(ins.marker);
    cursor = ins.offset;
  }
  out.append(text.substr(cursor));
  return out;
}

std::string insert_arg_markers(const SentenceRecord& record, const Span& cause,
                               const Span& effect) {
  return insert_arg_markers(record.text, cause, effect);
}

MarkedPair extract_arg_markers(std::string_view marked) {
  std::array<std::size_t, 4> found{};
  for (std::size_t m = 0; m < kMarkers.size(); ++m) {
    const auto first = marked.find(kMarkers[m]);
    if (first == std::string_view::npos)
      throw CorpusError("missing marker " + std::string(kMarkers[m]));
    if (marked.find(kMarkers[m], first + 1) != std::string_view::npos)
      throw CorpusError("marker " + std::string(kMarkers[m]) + " occurs twice");
    found[m] = first;
  }
  if (found[0] > found[1] || found[2] > found[3])
    throw CorpusError("closing marker precedes its opening marker");

  // Walk the marked text, dropping markers and mapping their positions
  // back into plain-text offsets.
  MarkedPair result;
  result.cause.role = SpanRole::Cause;
  result.effect.role = SpanRole::Effect;
  std::size_t pos = 0;
  while (pos < marked.size()) {
    bool consumed = false;
    for (std::size_t m = 0; m < kMarkers.size(); ++m) {
      if (pos != found[m]) continue;
      const std::size_t offset = result.text.size();
      switch (m) {
        case 0: result.cause.start = offset; break;
        case 1: result.cause.end = offset; break;
        case 2: result.effect.start = offset; break;
        case 3: result.effect.end = offset; break;
      }
      pos += kMarkers[m].size();
      consumed = true;
      break;
    }
    if (!consumed) result.text.push_back(marked[pos++]);
  }
  if (result.cause.start >= result.cause.end ||
      result.effect.start >= result.effect.end)
    throw CorpusError("empty argument span");
  if (result.cause.overlaps(result.effect))
    throw CorpusError("argument spans overlap");
  return result;
}

}  // namespace concausal::corpus

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

#include <string>
#include <string_view>

#include "concausal/corpus/record.h"

namespace concausal::corpus {

// Argument markers wrapping the candidate cause (ARG0) and effect (ARG1).
inline constexpr std::string_view kArg0Open = "<ARG0>";
inline constexpr std::string_view kArg0Close = "</ARG0>";
inline constexpr std::string_view kArg1Open = "<ARG1>";
inline constexpr std::string_view kArg1Close = "</ARG1>";

struct MarkedPair {
  std::string text;
  Span cause;
  Span effect;

  bool operator==(const MarkedPair&) const = default;
};

// Throws CorpusError when the spans are empty, out of bounds, overlap, or
// when the text already contains a marker string (the result would not be
// invertible).
std::string insert_arg_markers(std::string_view text, const Span& cause,
                               const Span& effect);
std::string insert_arg_markers(const SentenceRecord& record, const Span& cause,
                               const Span& effect);

// Inverse of insert_arg_markers. Spans come back with roles Cause/Effect
// and relation 0. Throws CorpusError unless each marker occurs exactly
// once and each pair is properly nested.
MarkedPair extract_arg_markers(std::string_view marked);

}  // namespace concausal::corpus

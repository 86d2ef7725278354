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
#include <string_view>
#include <vector>

#include "concausal/corpus/tokenizer.h"
#include "concausal/extractor/lexicon.h"

namespace concausal::extractor {

// Half-open token index range.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const { return begin >= end; }
  std::size_t size() const { return empty() ? 0 : end - begin; }
  bool contains(std::size_t index) const { return index >= begin && index < end; }
  bool overlaps(const TokenRange& other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const TokenRange&) const = default;
};

struct PatternMatch {
  const PatternRule* rule = nullptr;
  TokenRange range;  // whole match, slots included
  std::optional<TokenRange> cause;
  std::optional<TokenRange> effect;
  std::vector<std::size_t> cue_tokens;  // tokens bound by literals and [NEG]
  // The rule's polarity, except that a procausal cue directly preceded by
  // a negation ("did not cause", "never led to") flips to con.
  Polarity polarity = Polarity::Pro;
  bool negated = false;
};

// not, no, never, n't, cannot, falsely, wrongly (case-insensitive).
bool is_negation_cue(std::string_view token);

// Clause delimiters: sentence and clause punctuation, quotes, brackets and
// the subordinating conjunctions listed in matcher.cc.
bool is_clause_boundary(std::string_view token);

// Tokens after the cue up to (excluding) the next clause boundary.
// Throws std::out_of_range for a bad index and std::invalid_argument when
// the token is not a negation cue.
TokenRange negation_scope(std::span<const corpus::Token> tokens, std::size_t cue_index);

// Every match of every rule, before overlap resolution, in rule order.
std::vector<PatternMatch> candidate_matches(const Lexicon& lexicon,
                                            std::span<const corpus::Token> tokens);

// Non-overlapping matches chosen greedily by priority (con before pro on
// ties, then earlier, then longer), returned in token order.
std::vector<PatternMatch> match_patterns(const Lexicon& lexicon,
                                         std::span<const corpus::Token> tokens);

}  // namespace concausal::extractor

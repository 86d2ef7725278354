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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "concausal/corpus/bio.h"
#include "concausal/corpus/record.h"
#include "concausal/corpus/tokenizer.h"
#include "concausal/extractor/lexicon.h"
#include "concausal/extractor/matcher.h"

namespace concausal::extractor {

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CausalPair {
  corpus::Span cause;
  corpus::Span effect;
  Polarity polarity = Polarity::Pro;
  std::string rule_id;

  bool operator==(const CausalPair&) const = default;
};

struct ExtractionResult {
  corpus::CausalityLabel label = corpus::CausalityLabel::Uncausal;
  std::vector<CausalPair> pairs;          // relation index = position
  std::vector<std::string> matched_rules;  // every selected match, token order
};

enum class DetectionMode { Binary, Ternary };

// Rule baseline over an immutable lexicon. All members are const and safe
// to call from several threads.
class Extractor {
 public:
  explicit Extractor(Lexicon lexicon);
  // Loads the shipped lexicon.
  Extractor();

  const Lexicon& lexicon() const { return lexicon_; }

  ExtractionResult extract(std::string_view text) const;

  // Concausal if any selected match is con, Procausal if any is pro,
  // Uncausal otherwise.
  corpus::CausalityLabel detect(std::string_view text) const;
  corpus::BinaryLabel detect_binary(std::string_view text) const;
  // Ternary mode returns the label; binary mode maps it through to_binary
  // and reports Causal as Procausal.
  corpus::CausalityLabel detect(const corpus::SentenceRecord& record,
                                DetectionMode mode) const;

  // BIO-CE tags over corpus::tokenize(text); always a valid sequence.
  std::vector<corpus::BioTag> extract_candidates(std::string_view text) const;

  // Classifies one given (cause, effect) pair: the strongest candidate
  // match whose cause and effect slots overlap the pair decides. Throws
  // ExtractionError for empty, out-of-range, misaligned or overlapping
  // pair spans.
  corpus::CausalityLabel identify_pair(std::string_view text, const corpus::Span& cause,
                                       const corpus::Span& effect) const;

  std::vector<PatternMatch> match_patterns(std::string_view text) const;

 private:
  Lexicon lexicon_;
};

// Byte span of a token range.
corpus::Span to_span(std::span<const corpus::Token> tokens, TokenRange range,
                     corpus::SpanRole role, int relation);

}  // namespace concausal::extractor

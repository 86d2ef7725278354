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

#include "concausal/extractor/extractor.h"

#include <algorithm>

namespace concausal::extractor {

using corpus::CausalityLabel;
using corpus::Span;
using corpus::SpanRole;

namespace {

CausalityLabel label_of(Polarity polarity) {
  return polarity == Polarity::Con ? CausalityLabel::Concausal : CausalityLabel::Procausal;
}

void check_pair_span(std::string_view text, const Span& span, std::string_view what) {
  if (span.start >= span.end)
    throw ExtractionError(std::string(what) + " span is empty");
  if (span.end > text.size())
    throw ExtractionError(std::string(what) + " span [" + std::to_string(span.start) + ", " +
                          std::to_string(span.end) + ") exceeds text length " +
                          std::to_string(text.size()));
}

bool overlaps(std::span<const corpus::Token> tokens, const std::optional<TokenRange>& slot,
              const Span& span) {
  if (!slot) return false;
  return to_span(tokens, *slot, span.role, 0).overlaps(span);
}

}  // namespace

Span to_span(std::span<const corpus::Token> tokens, TokenRange range, SpanRole role,
             int relation) {
  return Span{role, tokens[range.begin].start, tokens[range.end - 1].end, relation};
}

Extractor::Extractor(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

Extractor::Extractor() : lexicon_(Lexicon::load_default()) {}

std::vector<PatternMatch> Extractor::match_patterns(std::string_view text) const {
  const auto tokens = corpus::tokenize(text);
  return extractor::match_patterns(lexicon_, tokens);
}

ExtractionResult Extractor::extract(std::string_view text) const {
  const auto tokens = corpus::tokenize(text);
  const auto matches = extractor::match_patterns(lexicon_, tokens);

  ExtractionResult result;
  bool any_pro = false;
  bool any_con = false;
  for (const auto& match : matches) {
    result.matched_rules.push_back(match.rule->id);
    (match.polarity == Polarity::Con ? any_con : any_pro) = true;
    if (!match.cause || !match.effect) continue;
    const int relation = static_cast<int>(result.pairs.size());
    result.pairs.push_back({to_span(tokens, *match.cause, SpanRole::Cause, relation),
                            to_span(tokens, *match.effect, SpanRole::Effect, relation),
                            match.polarity, match.rule->id});
  }
  result.label = any_con   ? CausalityLabel::Concausal
                 : any_pro ? CausalityLabel::Procausal
                           : CausalityLabel::Uncausal;
  // A slotless match still decides the label, but uncausal results never
  // carry pairs.
  if (result.label == CausalityLabel::Uncausal) result.pairs.clear();
  return result;
}

CausalityLabel Extractor::detect(std::string_view text) const { return extract(text).label; }

corpus::BinaryLabel Extractor::detect_binary(std::string_view text) const {
  return corpus::to_binary(detect(text));
}

CausalityLabel Extractor::detect(const corpus::SentenceRecord& record,
                                 DetectionMode mode) const {
  const auto label = detect(record.text);
  if (mode == DetectionMode::Ternary) return label;
  return corpus::to_binary(label) == corpus::BinaryLabel::Causal ? CausalityLabel::Procausal
                                                                 : CausalityLabel::Uncausal;
}

std::vector<corpus::BioTag> Extractor::extract_candidates(std::string_view text) const {
  const auto tokens = corpus::tokenize(text);
  const auto result = extract(text);
  std::vector<Span> spans;
  for (const auto& pair : result.pairs) {
    spans.push_back(pair.cause);
    spans.push_back(pair.effect);
  }
  return corpus::merged_bio(tokens, spans);
}

CausalityLabel Extractor::identify_pair(std::string_view text, const Span& cause,
                                        const Span& effect) const {
  check_pair_span(text, cause, "cause");
  check_pair_span(text, effect, "effect");
  if (cause.overlaps(effect)) throw ExtractionError("cause and effect spans overlap");
  const auto tokens = corpus::tokenize(text);
  if (!corpus::aligned_to_tokens(tokens, cause) || !corpus::aligned_to_tokens(tokens, effect))
    throw ExtractionError("pair span does not align with token boundaries");

  const PatternMatch* best = nullptr;
  const auto candidates = candidate_matches(lexicon_, tokens);
  for (const auto& match : candidates) {
    if (!overlaps(tokens, match.cause, cause) || !overlaps(tokens, match.effect, effect))
      continue;
    if (!best || match.rule->priority > best->rule->priority ||
        (match.rule->priority == best->rule->priority && match.polarity == Polarity::Con &&
         best->polarity == Polarity::Pro))
      best = &match;
  }
  return best ? label_of(best->polarity) : CausalityLabel::Uncausal;
}

}  // namespace concausal::extractor

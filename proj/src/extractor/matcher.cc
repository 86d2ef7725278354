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

#include "concausal/extractor/matcher.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <tuple>

namespace concausal::extractor {

namespace {

using corpus::Token;
using Kind = CueElement::Kind;

constexpr std::array<std::string_view, 7> kNegationCues = {
    "not", "no", "never", "n't", "cannot", "falsely", "wrongly"};

constexpr std::array<std::string_view, 16> kBoundaryPunctuation = {
    ",", ";", ":", ".", "!", "?", "\"", "(", ")", "[", "]",
    "“", "”", "—", "–", "--"};

constexpr std::array<std::string_view, 11> kBoundaryConjunctions = {
    "but", "because", "although", "though", "while", "whereas",
    "yet", "however", "despite", "since", "unless"};

// Adverbs allowed between a negation and the cue it negates.
constexpr std::array<std::string_view, 6> kNegatableAdverbs = {
    "really", "even", "always", "necessarily", "actually", "ever"};

bool is_terminator(std::string_view token) {
  return token == "." || token == "!" || token == "?";
}

template <std::size_t N>
bool one_of(const std::array<std::string_view, N>& set, std::string_view word) {
  return std::find(set.begin(), set.end(), word) != set.end();
}

class RuleMatcher {
 public:
  RuleMatcher(const PatternRule& rule, std::span<const Token> tokens,
              const std::vector<std::string>& lower)
      : rule_(rule), tokens_(tokens), lower_(lower) {
    const auto& elements = rule.elements;
    lead_slot_ = elements.front().is_slot();
    trail_slot_ = elements.size() > 1 && elements.back().is_slot();
    core_begin_ = lead_slot_ ? 1 : 0;
    core_end_ = elements.size() - (trail_slot_ ? 1 : 0);
  }

  std::optional<PatternMatch> match_at(std::size_t start) {
    if (lead_slot_ && start == 0) return std::nullopt;
    captures_ = {};
    cues_.clear();
    std::optional<PatternMatch> found;
    match_core(core_begin_, start, start, found);
    return found;
  }

 private:
  struct Captures {
    std::optional<TokenRange> cause;
    std::optional<TokenRange> effect;
  };

  // Removes punctuation from both ends of a slot.
  std::optional<TokenRange> trimmed(TokenRange range) const {
    while (!range.empty() && corpus::is_punctuation_token(lower_[range.begin])) ++range.begin;
    while (!range.empty() && corpus::is_punctuation_token(lower_[range.end - 1])) --range.end;
    if (range.empty()) return std::nullopt;
    return range;
  }

  void bind(Kind kind, TokenRange range) {
    if (kind == Kind::CauseSlot)
      captures_.cause = range;
    else
      captures_.effect = range;
  }

  void unbind(Kind kind) {
    if (kind == Kind::CauseSlot)
      captures_.cause.reset();
    else
      captures_.effect.reset();
  }

  bool finish(std::size_t start, std::size_t end, std::optional<PatternMatch>& out) {
    const auto& elements = rule_.elements;
    std::size_t range_begin = start;
    std::size_t range_end = end;
    Captures saved = captures_;

    if (lead_slot_) {
      std::size_t from = start;
      while (from > 0 && !is_clause_boundary(lower_[from - 1])) --from;
      auto slot = trimmed({from, start});
      if (!slot) return false;
      bind(elements.front().kind, *slot);
      range_begin = slot->begin;
    }
    if (trail_slot_) {
      std::size_t to = end;
      while (to < lower_.size() && !is_clause_boundary(lower_[to])) ++to;
      auto slot = trimmed({end, to});
      if (!slot) {
        captures_ = saved;
        return false;
      }
      bind(elements.back().kind, *slot);
      range_end = slot->end;
    }

    PatternMatch match;
    match.rule = &rule_;
    match.range = {range_begin, range_end};
    match.cause = captures_.cause;
    match.effect = captures_.effect;
    match.cue_tokens = cues_;
    match.polarity = rule_.polarity;
    out = std::move(match);
    captures_ = saved;
    return true;
  }

  bool match_core(std::size_t ei, std::size_t pos, std::size_t start,
                  std::optional<PatternMatch>& out) {
    if (ei == core_end_) return finish(start, pos, out);
    const CueElement& element = rule_.elements[ei];
    const std::size_t n = lower_.size();

    switch (element.kind) {
      case Kind::Literal:
      case Kind::Negation: {
        if (pos < n) {
          const bool hit =
              element.kind == Kind::Negation
                  ? is_negation_cue(lower_[pos])
                  : std::find(element.alternatives.begin(), element.alternatives.end(),
                              lower_[pos]) != element.alternatives.end();
          if (hit) {
            cues_.push_back(pos);
            if (match_core(ei + 1, pos + 1, start, out)) return true;
            cues_.pop_back();
          }
        }
        // Duplicates from skipping at the start are removed by the caller.
        if (element.optional) return match_core(ei + 1, pos, start, out);
        return false;
      }
      case Kind::AnyToken:
        if (pos < n && !is_terminator(lower_[pos]))
          return match_core(ei + 1, pos + 1, start, out);
        return false;
      case Kind::Gap:
        for (std::size_t end = pos; end <= n; ++end) {
          if (end > pos && is_terminator(lower_[end - 1])) break;
          if (match_core(ei + 1, end, start, out)) return true;
        }
        return false;
      case Kind::CauseSlot:
      case Kind::EffectSlot:
        for (std::size_t end = pos + 1; end <= n; ++end) {
          if (is_terminator(lower_[end - 1])) break;
          auto slot = trimmed({pos, end});
          if (!slot || slot->begin != pos || slot->end != end) continue;
          bind(element.kind, *slot);
          if (match_core(ei + 1, end, start, out)) return true;
          unbind(element.kind);
        }
        return false;
    }
    return false;
  }

  const PatternRule& rule_;
  std::span<const Token> tokens_;
  const std::vector<std::string>& lower_;
  bool lead_slot_ = false;
  bool trail_slot_ = false;
  std::size_t core_begin_ = 0;
  std::size_t core_end_ = 0;
  Captures captures_;
  std::vector<std::size_t> cues_;
};

// Shortens a slot that swallowed the negation (and the auxiliaries before
// it) of a negated procausal cue.
void cut_slot_before(std::optional<TokenRange>& slot, std::size_t negation,
                     const std::vector<std::string>& lower) {
  static constexpr std::array<std::string_view, 19> kAuxiliaries = {
      "do", "does", "did", "has", "have", "had", "is", "was", "were", "are",
      "be", "will", "would", "can", "could", "may", "might", "should", "must"};
  if (!slot || !slot->contains(negation)) return;
  std::size_t end = negation;
  while (end > slot->begin && one_of(kAuxiliaries, lower[end - 1])) --end;
  if (end <= slot->begin)
    slot.reset();
  else
    slot->end = end;
}

void apply_negation_guard(PatternMatch& match, std::span<const Token> tokens,
                          const std::vector<std::string>& lower) {
  if (match.polarity != Polarity::Pro || match.cue_tokens.empty()) return;
  const std::size_t cue = match.cue_tokens.front();
  std::optional<std::size_t> negation;
  if (cue >= 1 && is_negation_cue(lower[cue - 1])) {
    negation = cue - 1;
  } else if (cue >= 2 && is_negation_cue(lower[cue - 2]) &&
             (one_of(kNegatableAdverbs, lower[cue - 1]) ||
              (lower[cue - 1].size() > 3 && lower[cue - 1].ends_with("ly")))) {
    negation = cue - 2;
  }
  if (!negation || lower[*negation] == "no") return;
  if (!negation_scope(tokens, *negation).contains(cue)) return;

  match.polarity = Polarity::Con;
  match.negated = true;
  match.range.begin = std::min(match.range.begin, *negation);
  cut_slot_before(match.cause, *negation, lower);
  cut_slot_before(match.effect, *negation, lower);
}

std::vector<std::string> lowered(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) out.push_back(corpus::to_lower(token.text));
  return out;
}

}  // namespace

bool is_negation_cue(std::string_view token) {
  return one_of(kNegationCues, corpus::to_lower(token));
}

bool is_clause_boundary(std::string_view token) {
  const std::string word = corpus::to_lower(token);
  return one_of(kBoundaryPunctuation, word) || one_of(kBoundaryConjunctions, word);
}

TokenRange negation_scope(std::span<const Token> tokens, std::size_t cue_index) {
  if (cue_index >= tokens.size())
    throw std::out_of_range("cue index " + std::to_string(cue_index) +
                            " out of range for " + std::to_string(tokens.size()) +
                            " tokens");
  if (!is_negation_cue(tokens[cue_index].text))
    throw std::invalid_argument("token '" + tokens[cue_index].text +
                                "' is not a negation cue");
  std::size_t end = cue_index + 1;
  while (end < tokens.size() && !is_clause_boundary(tokens[end].text)) ++end;
  return {cue_index + 1, end};
}

std::vector<PatternMatch> candidate_matches(const Lexicon& lexicon,
                                            std::span<const Token> tokens) {
  const auto lower = lowered(tokens);
  std::vector<PatternMatch> out;
  for (const auto& rule : lexicon.rules()) {
    RuleMatcher matcher(rule, tokens, lower);
    std::vector<PatternMatch> for_rule;
    for (std::size_t start = 0; start < tokens.size(); ++start) {
      auto match = matcher.match_at(start);
      if (!match) continue;
      apply_negation_guard(*match, tokens, lower);
      const bool duplicate = std::any_of(for_rule.begin(), for_rule.end(), [&](const PatternMatch& m) {
        return m.range == match->range && m.cause == match->cause && m.effect == match->effect;
      });
      if (!duplicate) for_rule.push_back(std::move(*match));
    }
    out.insert(out.end(), for_rule.begin(), for_rule.end());
  }
  return out;
}

std::vector<PatternMatch> match_patterns(const Lexicon& lexicon,
                                         std::span<const Token> tokens) {
  auto candidates = candidate_matches(lexicon, tokens);
  const auto* base = lexicon.rules().data();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [base](const PatternMatch& a, const PatternMatch& b) {
                     const auto key = [base](const PatternMatch& m) {
                       return std::tuple(-m.rule->priority,
                                         m.polarity == Polarity::Con ? 0 : 1,
                                         m.range.begin,
                                         -static_cast<long>(m.range.size()),
                                         m.rule - base);
                     };
                     return key(a) < key(b);
                   });
  std::vector<PatternMatch> chosen;
  for (auto& candidate : candidates) {
    const bool clashes = std::any_of(chosen.begin(), chosen.end(), [&](const PatternMatch& m) {
      return m.range.overlaps(candidate.range);
    });
    if (!clashes) chosen.push_back(std::move(candidate));
  }
  std::sort(chosen.begin(), chosen.end(), [](const PatternMatch& a, const PatternMatch& b) {
    return a.range.begin < b.range.begin;
  });
  return chosen;
}

}  // namespace concausal::extractor

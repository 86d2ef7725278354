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

#include <fstream>
#include <sstream>

#include "doctest.h"

#include "concausal/corpus/io.h"
#include "concausal/extractor/extractor.h"

using namespace concausal;
using corpus::CausalityLabel;
using extractor::Extractor;

namespace {

const std::string kFixtures = CONCAUSAL_FIXTURES;

const Extractor& shipped() {
  static const Extractor instance;
  return instance;
}

std::string slice(const std::string& text, const corpus::Span& span) {
  return text.substr(span.start, span.length());
}

}  // namespace

TEST_CASE("cue compilation") {
  using Kind = extractor::CueElement::Kind;
  const auto elements = extractor::compile_cue("{A} led|leads to? [NEG]? ... by {B}");
  REQUIRE(elements.size() == 7);
  CHECK(elements[0].kind == Kind::CauseSlot);
  CHECK(elements[1].alternatives == std::vector<std::string>{"led", "leads"});
  CHECK(elements[2].optional);
  CHECK(elements[3].kind == Kind::Negation);
  CHECK(elements[4].kind == Kind::Gap);

  CHECK_THROWS_AS(extractor::compile_cue("{A} {B}"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::compile_cue("{A} causes {A}"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::compile_cue("maybe?"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::compile_cue("... causes"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::compile_cue("{A}? causes"), extractor::LexiconError);
}

TEST_CASE("lexicon parsing") {
  const auto lexicon = extractor::Lexicon::parse(
      "# comment\n"
      "ProcausalSignal\t{A} causes {B}\tpro\t10\n"
      "\n"
      "DirectNegation\t{A} does not cause {B}\tcon\t30\n");
  REQUIRE(lexicon.rules().size() == 2);
  CHECK(lexicon.rules()[1].id == "DirectNegation#1");
  CHECK(lexicon.find("ProcausalSignal#1") != nullptr);
  CHECK(lexicon.missing_categories().size() == 10);

  CHECK_THROWS_AS(extractor::Lexicon::parse("Nope\t{A} x {B}\tpro\t1\n"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::Lexicon::parse("Coincidence\tx\tmaybe\t1\n"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::Lexicon::parse("Coincidence\tx\tpro\tten\n"), extractor::LexiconError);
  CHECK_THROWS_AS(extractor::Lexicon::parse("NegativeCausation\tx\tcon\t1\n"),
                  extractor::LexiconError);
  CHECK_THROWS_AS(extractor::Lexicon::parse("Coincidence\tx\tpro\n"), extractor::LexiconError);
}

TEST_CASE("the shipped lexicon covers every concausal family") {
  CHECK(shipped().lexicon().missing_categories().empty());
}

TEST_CASE("procausal extraction binds cause and effect") {
  const std::string text = "The vase broke because it fell.";
  const auto result = shipped().extract(text);
  CHECK(result.label == CausalityLabel::Procausal);
  REQUIRE(result.pairs.size() == 1);
  CHECK(slice(text, result.pairs[0].cause) == "it fell");
  CHECK(slice(text, result.pairs[0].effect) == "The vase broke");
  CHECK(corpus::join_tags(shipped().extract_candidates(text)) == "B-E I-E I-E O B-C I-C O");
}

TEST_CASE("negated procausal cues flip to concausal") {
  for (const char* text : {"The ANC did not cause the riot.", "The storm didn't lead to flooding.",
                           "Rain never really causes floods."}) {
    CAPTURE(text);
    CHECK(shipped().detect(text) == CausalityLabel::Concausal);
  }
  const std::string text = "The ANC did not cause the riot.";
  const auto result = shipped().extract(text);
  REQUIRE_FALSE(result.pairs.empty());
  CHECK(slice(text, result.pairs[0].cause) == "The ANC");
  CHECK(slice(text, result.pairs[0].effect) == "the riot");
}

TEST_CASE("'no' alone does not negate a cue") {
  CHECK(shipped().detect("He said no because it rained.") == CausalityLabel::Procausal);
  // Conceivable but absent effects are concausal through their own rule.
  const auto result = shipped().extract("He told a joke and no one laughed.");
  CHECK(result.label == CausalityLabel::Concausal);
  CHECK(result.matched_rules == std::vector<std::string>{"ImplicitLackOfEffect#1"});
}

TEST_CASE("plain sentences are uncausal") {
  CHECK(shipped().detect("He ate.") == CausalityLabel::Uncausal);
  CHECK(shipped().detect("") == CausalityLabel::Uncausal);
  CHECK(shipped().extract("He ate.").pairs.empty());
  CHECK(shipped().detect_binary("He ate.") == corpus::BinaryLabel::Uncausal);
  CHECK(shipped().detect_binary("A does not cause B") == corpus::BinaryLabel::Causal);
}

TEST_CASE("purpose clauses") {
  CHECK(shipped().detect("A is done to protest against B.") == CausalityLabel::Procausal);
  CHECK(shipped().detect("He puts money on the bank to keep it safe.") == CausalityLabel::Procausal);
  CHECK(shipped().detect("He moved to America to make his dreams come true.") ==
        CausalityLabel::Uncausal);
}

TEST_CASE("taxonomy fixture") {
  const auto records = corpus::load_corpus(kFixtures + "/taxonomy.jsonl");
  REQUIRE(records.size() >= 30);
  for (const auto& r : records) {
    CAPTURE(r.text);
    CHECK(shipped().detect(r, extractor::DetectionMode::Ternary) == r.label);
  }
}

TEST_CASE("binary detection on records") {
  corpus::SentenceRecord r;
  r.text = "A does not cause B";
  CHECK(shipped().detect(r, extractor::DetectionMode::Binary) == CausalityLabel::Procausal);
  r.text = "He ate.";
  CHECK(shipped().detect(r, extractor::DetectionMode::Binary) == CausalityLabel::Uncausal);
}

TEST_CASE("negation scopes match the hand-marked fixture") {
  std::ifstream in(kFixtures + "/negation_scopes.tsv");
  REQUIRE(in);
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    const std::string text = line.substr(0, t1);
    const std::size_t cue = std::stoul(line.substr(t1 + 1, t2 - t1 - 1));
    const std::string expected = line.substr(t2 + 1);
    const auto tokens = corpus::tokenize(text);
    const auto scope = extractor::negation_scope(tokens, cue);
    std::string got;
    for (std::size_t i = scope.begin; i < scope.end; ++i) got += (got.empty() ? "" : " ") + tokens[i].text;
    CAPTURE(text);
    CHECK(got == expected);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("negation scope errors") {
  const auto tokens = corpus::tokenize("It rained.");
  CHECK_THROWS_AS(extractor::negation_scope(tokens, 9), std::out_of_range);
  CHECK_THROWS_AS(extractor::negation_scope(tokens, 0), std::invalid_argument);
}

TEST_CASE("overlap resolution prefers priority, then con") {
  const auto lexicon = extractor::Lexicon::parse(
      "ProcausalSignal\t{A} causes {B}\tpro\t10\n"
      "UsualInverseEffect\t{B} despite {A}\tcon\t10\n"
      "Contradiction\tcauses\tcon\t5\n");
  const Extractor ex(lexicon);
  const auto matches = ex.match_patterns("Rain causes floods");
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].rule->id == "ProcausalSignal#1");
  // Same priority, overlapping: the con reading wins.
  const auto both = ex.match_patterns("Rain causes floods despite dams");
  REQUIRE(both.size() == 1);
  CHECK(both[0].rule->id == "UsualInverseEffect#1");
  // A comma closes the leading slot, so nothing precedes "despite" here.
  CHECK(ex.detect("Rain causes floods, despite dams") == CausalityLabel::Procausal);
}

TEST_CASE("pair identification") {
  const std::string text = "The vase broke because it fell.";
  const corpus::Span cause{corpus::SpanRole::Cause, 23, 30, 0};
  const corpus::Span effect{corpus::SpanRole::Effect, 0, 14, 0};
  CHECK(shipped().identify_pair(text, cause, effect) == CausalityLabel::Procausal);
  CHECK(shipped().identify_pair(text, {corpus::SpanRole::Cause, 0, 3, 0},
                                {corpus::SpanRole::Effect, 4, 8, 0}) == CausalityLabel::Uncausal);

  const std::string neg = "The ANC did not cause the riot.";
  CHECK(shipped().identify_pair(neg, {corpus::SpanRole::Cause, 0, 7, 0},
                                {corpus::SpanRole::Effect, 22, 30, 0}) ==
        CausalityLabel::Concausal);

  CHECK_THROWS_AS(shipped().identify_pair(text, cause, cause), extractor::ExtractionError);
  CHECK_THROWS_AS(shipped().identify_pair(text, {corpus::SpanRole::Cause, 23, 99, 0}, effect),
                  extractor::ExtractionError);
  CHECK_THROWS_AS(shipped().identify_pair(text, {corpus::SpanRole::Cause, 24, 30, 0}, effect),
                  extractor::ExtractionError);
  CHECK_THROWS_AS(shipped().identify_pair(text, {corpus::SpanRole::Cause, 5, 5, 0}, effect),
                  extractor::ExtractionError);
}

TEST_CASE("candidate tags are always valid") {
  const auto records = corpus::load_corpus(kFixtures + "/taxonomy.jsonl");
  for (const auto& r : records) {
    const auto tags = shipped().extract_candidates(r.text);
    CHECK(tags.size() == corpus::tokenize(r.text).size());
    CHECK(corpus::is_valid_sequence(tags));
  }
}

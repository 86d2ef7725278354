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

#include <random>

#include "doctest.h"

#include "concausal/corpus/bio.h"
#include "concausal/corpus/io.h"
#include "concausal/corpus/markers.h"
#include "concausal/corpus/record.h"
#include "concausal/corpus/stats.h"
#include "concausal/corpus/tokenizer.h"

using namespace concausal::corpus;

namespace {

const std::string kFixtures = CONCAUSAL_FIXTURES;

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

SentenceRecord vase() {
  SentenceRecord r;
  r.id = "train_01_2_3";
  r.text = "The vase broke because it fell.";
  r.label = CausalityLabel::Procausal;
  r.spans = {{SpanRole::Effect, 0, 14, 0}, {SpanRole::Cause, 23, 30, 0},
             {SpanRole::Signal, 15, 22, 0}};
  canonicalize(r);
  return r;
}

}  // namespace

TEST_CASE("tokenizer splits punctuation and keeps offsets") {
  const std::string text = "He didn't pay 300,000 rupees.";
  const auto tokens = tokenize(text);
  CHECK(texts(tokens) ==
        std::vector<std::string>{"He", "did", "n't", "pay", "300,000", "rupees", "."});
  for (const auto& t : tokens) CHECK(text.substr(t.start, t.end - t.start) == t.text);
  CHECK(tokenize("").empty());
  CHECK(tokenize("   ").empty());
}

TEST_CASE("tokenizer handles multibyte text") {
  const std::string text = "Café “closed” today";
  const auto tokens = tokenize(text);
  for (const auto& t : tokens) CHECK(text.substr(t.start, t.end - t.start) == t.text);
  CHECK(tokens.front().text == "Café");
}

TEST_CASE("label parsing accepts aliases") {
  CHECK(parse_label("procausal") == CausalityLabel::Procausal);
  CHECK(parse_label("con") == CausalityLabel::Concausal);
  CHECK(parse_label("un") == CausalityLabel::Uncausal);
  CHECK_FALSE(parse_label("maybe"));
  CHECK(parse_split("dev") == Split::Validation);
  CHECK(to_binary(CausalityLabel::Concausal) == BinaryLabel::Causal);
  CHECK(to_binary(CausalityLabel::Uncausal) == BinaryLabel::Uncausal);
}

TEST_CASE("spans_to_bio and bio_to_spans") {
  const auto r = vase();
  const auto tokens = tokenize(r.text);
  const auto tags = spans_to_bio(tokens, r.spans);
  CHECK(join_tags(tags) == "B-E I-E I-E O B-C I-C O");
  const auto with_signal = spans_to_bio(tokens, r.spans, TagScheme::WithSignal);
  CHECK(join_tags(with_signal) == "B-E I-E I-E B-S B-C I-C O");

  auto back = bio_to_spans(tokens, tags);
  std::vector<Span> expected = {{SpanRole::Effect, 0, 14, 0}, {SpanRole::Cause, 23, 30, 0}};
  CHECK(back == expected);
}

TEST_CASE("bio errors") {
  const auto tokens = tokenize("A causes B");
  SUBCASE("misaligned span") {
    const std::vector<Span> spans = {{SpanRole::Cause, 0, 3, 0}};
    CHECK_THROWS_AS(spans_to_bio(tokens, spans), BioError);
  }
  SUBCASE("overlap") {
    const std::vector<Span> spans = {{SpanRole::Cause, 0, 8, 0}, {SpanRole::Effect, 2, 10, 0}};
    CHECK_THROWS_AS(spans_to_bio(tokens, spans), BioError);
  }
  SUBCASE("dangling inside tag") {
    const auto tags = split_tags("O I-C O");
    CHECK(first_invalid_tag(tags) == 1u);
    CHECK_THROWS_AS(bio_to_spans(tokens, tags), BioError);
  }
  SUBCASE("unknown tag") { CHECK_THROWS_AS(split_tags("O B-X"), BioError); }
}

TEST_CASE("merged_bio skips overlapping relations") {
  SentenceRecord r;
  r.text = "Rain caused floods that closed roads";
  r.spans = {{SpanRole::Cause, 0, 4, 0},   {SpanRole::Effect, 12, 18, 0},
             {SpanRole::Cause, 12, 18, 1}, {SpanRole::Effect, 31, 36, 1}};
  const auto tags = merged_bio(tokenize(r.text), r.spans);
  CHECK(join_tags(tags) == "B-C O B-E O O B-E");
  CHECK(is_valid_sequence(tags));
}

TEST_CASE("argument markers round trip") {
  const auto r = vase();
  const Span cause{SpanRole::Cause, 23, 30, 0};
  const Span effect{SpanRole::Effect, 0, 14, 0};
  const auto marked = insert_arg_markers(r.text, cause, effect);
  CHECK(marked == "<ARG1>The vase broke</ARG1> because <ARG0>it fell</ARG0>.");
  const auto back = extract_arg_markers(marked);
  CHECK(back.text == r.text);
  CHECK(back.cause.start == 23);
  CHECK(back.effect.end == 14);
  CHECK_THROWS_AS(insert_arg_markers(r.text, cause, cause), CorpusError);
  CHECK_THROWS_AS(extract_arg_markers("<ARG0>x</ARG0>"), CorpusError);
  CHECK_THROWS_AS(insert_arg_markers("a <ARG0> b", {SpanRole::Cause, 0, 1, 0},
                                     {SpanRole::Effect, 9, 10, 0}),
                  CorpusError);
}

TEST_CASE("claims-jsonl round trip") {
  std::vector<SentenceRecord> records = {vase()};
  SentenceRecord un;
  un.id = "u1";
  un.text = "He ate.";
  un.split = Split::Test;
  un.origin = Origin::Rewritten;
  records.push_back(un);
  const auto text = serialize_corpus(records, Format::ClaimsJsonl);
  CHECK(parse_corpus(text, Format::ClaimsJsonl) == records);
}

TEST_CASE("unicausal-csv round trip with several relations") {
  SentenceRecord r;
  r.id = "train_04_257_234";
  r.text = "Rain caused floods, which closed roads.";
  r.label = CausalityLabel::Procausal;
  r.spans = {{SpanRole::Cause, 0, 4, 0},   {SpanRole::Effect, 12, 18, 0},
             {SpanRole::Signal, 5, 11, 0}, {SpanRole::Cause, 12, 18, 1},
             {SpanRole::Effect, 26, 38, 1}};
  canonicalize(r);
  SentenceRecord un;
  un.id = "plain";
  un.text = "He ate, \"quietly\".";
  const std::vector<SentenceRecord> records = {r, un};
  const auto csv = serialize_corpus(records, Format::UnicausalCsv);
  CHECK(csv.find("train_04_257,234") != std::string::npos);
  CHECK(parse_corpus(csv, Format::UnicausalCsv) == records);
}

TEST_CASE("csv spans can come from seq_label alone") {
  const std::string csv =
      "corpus,doc_id,sent_id,split,origin,text,seq_label,pair_label,causality_label,relation,spans\n"
      "cnc,d,1,train,original,A causes B,B-C O B-E,1,procausal,0,\n";
  const auto records = parse_corpus(csv, Format::UnicausalCsv);
  REQUIRE(records.size() == 1);
  CHECK(records[0].spans ==
        std::vector<Span>{{SpanRole::Cause, 0, 1, 0}, {SpanRole::Effect, 9, 10, 0}});
}

TEST_CASE("duplicate ids are reported with their line") {
  const auto result = read_corpus(read_file(kFixtures + "/dup_ids.csv"), Format::UnicausalCsv);
  REQUIRE(result.issues.size() == 1);
  CHECK(result.issues[0].record_id == "train_01_1_2");
  CHECK(result.issues[0].line == 5);
  CHECK(result.issues[0].message.find("duplicate id") != std::string::npos);
}

TEST_CASE("out of bounds span names the record") {
  const auto result = read_corpus(read_file(kFixtures + "/oob_span.jsonl"), Format::ClaimsJsonl);
  REQUIRE_FALSE(result.issues.empty());
  CHECK(result.issues[0].record_id == "bad_span_7");
  CHECK(result.issues[0].message.find("out of bounds") != std::string::npos);
  CHECK_THROWS_AS(load_corpus(kFixtures + "/oob_span.jsonl"), CorpusError);
}

TEST_CASE("misaligned spans follow the policy") {
  const std::string line =
      R"({"id":"m","split":"train","origin":"original","text":"Rainfall causes floods","label":"procausal",)"
      R"("spans":[{"role":"cause","start":0,"end":4,"relation":0},{"role":"effect","start":16,"end":22,"relation":0}]})";
  CHECK_FALSE(read_corpus(line, Format::ClaimsJsonl).issues.empty());
  const auto dropped = parse_corpus(line, Format::ClaimsJsonl, {MisalignedSpans::Drop});
  REQUIRE(dropped.size() == 1);
  CHECK(dropped[0].spans.size() == 1);
}

TEST_CASE("malformed input") {
  CHECK_FALSE(read_corpus("{not json}\n", Format::ClaimsJsonl).issues.empty());
  CHECK_FALSE(read_corpus("a,b\n1,2\n", Format::UnicausalCsv).issues.empty());
  CHECK(read_corpus("", Format::ClaimsJsonl).records.empty());
  CHECK_THROWS_AS(read_file(kFixtures + "/missing.jsonl"), CorpusError);
  CHECK(format_for_path("x.csv") == Format::UnicausalCsv);
  CHECK(format_for_path("x.jsonl") == Format::ClaimsJsonl);
  CHECK_FALSE(format_for_path("x.txt"));
}

TEST_CASE("uncausal records cannot carry cause spans") {
  SentenceRecord r = vase();
  r.label = CausalityLabel::Uncausal;
  CHECK_FALSE(validate_record(r).empty());
}

TEST_CASE("six record fixture counts") {
  const auto records = load_corpus(kFixtures + "/stats6.jsonl");
  const auto stats = corpus_stats(records);
  CHECK(stats.class_total(CausalityLabel::Procausal) == 2);
  CHECK(stats.class_total(CausalityLabel::Concausal) == 2);
  CHECK(stats.class_total(CausalityLabel::Uncausal) == 2);
  CHECK(stats.split_total(Split::Train) == 4);
  CHECK(stats.split_total(Split::Validation) == 2);
  const auto table = render_stats_table(stats);
  CHECK(table.find("Total") != std::string::npos);
  CHECK(table.find("(4/2)") != std::string::npos);
  CHECK(corpus_stats(std::vector<SentenceRecord>{}).total() == 0);
}

TEST_CASE("generated records survive both formats") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> words = {"rain", "caused", "the", "flood", ",", "despite",
                                          "warnings", "é", "protest", "."};
  std::vector<SentenceRecord> records;
  for (int i = 0; i < 200; ++i) {
    SentenceRecord r;
    r.id = "g_" + std::to_string(i);
    r.split = kAllSplits[rng() % 3];
    const std::size_t n = 2 + rng() % 8;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) r.text += ' ';
      r.text += words[rng() % words.size()];
    }
    const auto tokens = tokenize(r.text);
    if (rng() % 2 && tokens.size() >= 2) {
      r.label = CausalityLabel::Procausal;
      const std::size_t cut = 1 + rng() % (tokens.size() - 1);
      r.spans = {{SpanRole::Cause, tokens[0].start, tokens[cut - 1].end, 0},
                 {SpanRole::Effect, tokens[cut].start, tokens.back().end, 0}};
    }
    canonicalize(r);
    records.push_back(r);
  }
  for (auto format : {Format::ClaimsJsonl, Format::UnicausalCsv})
    CHECK(parse_corpus(serialize_corpus(records, format), format) == records);
}

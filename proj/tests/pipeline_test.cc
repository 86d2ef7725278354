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

#include "doctest.h"

#include "concausal/corpus/io.h"
#include "concausal/pipeline/pipeline.h"

using namespace concausal;
using corpus::CausalityLabel;
using extractor::DetectionMode;

namespace {

const std::string kFixtures = CONCAUSAL_FIXTURES;

const extractor::Extractor& shipped() {
  static const extractor::Extractor instance;
  return instance;
}

}  // namespace

TEST_CASE("extraction is sorted and thread count independent") {
  const auto records = corpus::load_corpus(kFixtures + "/taxonomy.jsonl");
  const auto one = pipeline::run_extraction(shipped(), records, DetectionMode::Ternary, 1);
  const auto many = pipeline::run_extraction(shipped(), records, DetectionMode::Ternary, 8);
  REQUIRE(one.size() == records.size());
  CHECK(pipeline::serialize_predictions(one) == pipeline::serialize_predictions(many));
  CHECK(std::is_sorted(one.begin(), one.end(), [](const auto& a, const auto& b) {
    return a.record.id < b.record.id;
  }));
  const auto report = pipeline::evaluate(records, one, pipeline::EvalTask::Detection);
  CHECK(report.macro.f1 == 1.0);
}

TEST_CASE("predictions round trip and stay a valid corpus") {
  const auto records = corpus::load_corpus(kFixtures + "/stats6.jsonl");
  const auto preds = pipeline::run_extraction(shipped(), records, DetectionMode::Binary, 2);
  const auto text = pipeline::serialize_predictions(preds);
  const auto back = pipeline::parse_predictions(text);
  REQUIRE(back.size() == preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    CHECK(back[i].record == preds[i].record);
    CHECK(back[i].pair_labels == preds[i].pair_labels);
    CHECK(back[i].binary == preds[i].binary);
    CHECK(back[i].rules == preds[i].rules);
  }
  CHECK(corpus::read_corpus(text, corpus::Format::ClaimsJsonl).issues.empty());
  CHECK_THROWS_AS(pipeline::parse_predictions("{\"id\":1}\n"), pipeline::PipelineError);
}

TEST_CASE("gold pairs are identified") {
  const auto records = corpus::load_corpus(kFixtures + "/stats6.jsonl");
  const auto preds = pipeline::run_extraction(shipped(), records, DetectionMode::Ternary);
  const auto& vase = preds.front();
  REQUIRE(vase.record.id == "s1");
  CHECK(vase.pair_labels == std::vector<CausalityLabel>{CausalityLabel::Procausal});
  const auto report = pipeline::evaluate(records, preds, pipeline::EvalTask::Identification);
  CHECK(report.items == 1);
  CHECK(report.macro.f1 == 1.0);
}

TEST_CASE("perfect predictions score 1 on every task") {
  const auto gold = corpus::load_corpus(kFixtures + "/stats6.jsonl");
  std::vector<pipeline::Prediction> preds;
  for (const auto& r : gold) {
    pipeline::Prediction p;
    p.record = r;
    for (std::size_t i = 0; i < pipeline::gold_pairs(r).size(); ++i) p.pair_labels.push_back(r.label);
    preds.push_back(p);
  }
  for (auto task : pipeline::kAllTasks) {
    CAPTURE(pipeline::to_string(task));
    const auto report = pipeline::evaluate(gold, preds, task);
    CHECK(report.macro.f1 == 1.0);
    CHECK(report.macro.precision == 1.0);
    CHECK(report.macro.recall == 1.0);
  }
}

TEST_CASE("the four item case evaluates to macro F1 0.5") {
  const auto gold = corpus::load_corpus(kFixtures + "/four_gold.jsonl");
  const auto preds = pipeline::parse_predictions(corpus::read_file(kFixtures + "/four_pred.jsonl"));
  CHECK(pipeline::evaluate(gold, preds, pipeline::EvalTask::Detection).macro.f1 == 0.5);
}

TEST_CASE("evaluation errors") {
  const auto gold = corpus::load_corpus(kFixtures + "/four_gold.jsonl");
  auto preds = pipeline::parse_predictions(corpus::read_file(kFixtures + "/four_pred.jsonl"));
  auto shorter = preds;
  shorter.pop_back();
  CHECK_THROWS_AS(pipeline::evaluate(gold, shorter, pipeline::EvalTask::Detection),
                  pipeline::PipelineError);
  auto renamed = preds;
  renamed[0].record.id = "elsewhere";
  CHECK_THROWS_AS(pipeline::evaluate(gold, renamed, pipeline::EvalTask::Detection),
                  pipeline::PipelineError);
  auto duplicated = preds;
  duplicated[1].record.id = duplicated[0].record.id;
  CHECK_THROWS_AS(pipeline::evaluate(gold, duplicated, pipeline::EvalTask::Detection),
                  pipeline::PipelineError);
  // No gold pairs at all.
  CHECK_THROWS_AS(pipeline::evaluate(gold, preds, pipeline::EvalTask::Identification),
                  pipeline::PipelineError);
  CHECK(pipeline::parse_task("detection-binary") == pipeline::EvalTask::DetectionBinary);
  CHECK_FALSE(pipeline::parse_task("nope"));
}

TEST_CASE("empty corpus gives empty predictions") {
  const std::vector<corpus::SentenceRecord> none;
  CHECK(pipeline::run_extraction(shipped(), none, DetectionMode::Ternary).empty());
  CHECK(pipeline::serialize_predictions({}).empty());
}

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

#include "concausal/metrics/metrics.h"
#include "concausal/metrics/report.h"
#include "support/oracles.h"

using namespace concausal::metrics;
using concausal::corpus::BioTag;
using concausal::corpus::split_tags;

namespace {
using Labels = std::vector<std::string>;
}

TEST_CASE("confusion counts gold rows and predicted columns") {
  const Labels gold = {"procausal", "concausal"};
  const Labels pred = {"procausal", "procausal"};
  const auto m = confusion(gold, pred, ternary_classes());
  CHECK(m.at("procausal", "procausal") == 1);
  CHECK(m.at("concausal", "procausal") == 1);
  CHECK(m.total() == 2);
  CHECK_THROWS_AS(confusion(gold, Labels{"procausal"}, ternary_classes()), MetricsError);
  CHECK_THROWS_AS(confusion(Labels{"other"}, Labels{"procausal"}, ternary_classes()), MetricsError);
  CHECK_THROWS_AS(ConfusionMatrix(Labels{"a", "a"}), MetricsError);
}

TEST_CASE("row sums equal gold class counts") {
  std::mt19937_64 rng(1);
  const auto classes = ternary_classes();
  Labels gold, pred;
  for (int i = 0; i < 1000; ++i) {
    gold.push_back(classes[rng() % 3]);
    pred.push_back(classes[rng() % 3]);
  }
  const auto m = confusion(gold, pred, classes);
  for (std::size_t c = 0; c < 3; ++c)
    CHECK(m.row_sum(c) == static_cast<std::size_t>(std::count(gold.begin(), gold.end(), classes[c])));
}

TEST_CASE("macro scores on the four item case") {
  const Labels gold = {"procausal", "concausal", "uncausal", "procausal"};
  const Labels pred = {"procausal", "concausal", "procausal", "uncausal"};
  const auto m = confusion(gold, pred, ternary_classes());
  const auto per_class = per_class_scores(m);
  CHECK(per_class[0].scores.f1 == 0.0);   // uncausal
  CHECK(per_class[1].scores.f1 == 0.5);   // procausal
  CHECK(per_class[2].scores.f1 == 1.0);   // concausal
  CHECK(macro_prf(m).f1 == 0.5);
}

TEST_CASE("macro edge cases") {
  const Labels same = {"procausal", "uncausal", "concausal"};
  const auto perfect = macro_prf(confusion(same, same, ternary_classes()));
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);
  // Classes absent from both sides do not dilute the mean.
  const Labels one = {"procausal", "procausal"};
  CHECK(macro_prf(confusion(one, one, ternary_classes())).f1 == 1.0);
  CHECK_THROWS_AS(macro_prf(ConfusionMatrix(ternary_classes())), MetricsError);
}

TEST_CASE("macro scores match the direct computation") {
  std::mt19937_64 rng(2);
  const auto classes = ternary_classes();
  for (int i = 0; i < 200; ++i) {
    Labels gold, pred;
    const std::size_t n = 1 + rng() % 30;
    for (std::size_t k = 0; k < n; ++k) {
      gold.push_back(classes[rng() % 3]);
      pred.push_back(classes[rng() % 3]);
    }
    CHECK(macro_prf(confusion(gold, pred, classes)).f1 ==
          doctest::Approx(concausal::oracle::macro_f1_direct(gold, pred)).epsilon(1e-12));
  }
}

TEST_CASE("kappa") {
  const Labels a = {"pro", "pro", "con", "un"};
  const Labels b = {"pro", "con", "con", "un"};
  const auto r = cohen_kappa(a, b);
  CHECK(r.observed == 0.75);
  CHECK(r.expected == 5.0 / 16.0);
  CHECK(r.kappa == doctest::Approx(7.0 / 11.0).epsilon(1e-15));
  CHECK(cohen_kappa(a, a).kappa == 1.0);
  const Labels constant = {"x", "x", "x"};
  CHECK(cohen_kappa(constant, constant).kappa == 1.0);
  CHECK_THROWS_AS(cohen_kappa(Labels{}, Labels{}), MetricsError);
  CHECK_THROWS_AS(cohen_kappa(a, constant), MetricsError);
}

TEST_CASE("kappa is symmetric, relabeling invariant and bounded") {
  std::mt19937_64 rng(9);
  const Labels classes = {"a", "b", "c", "d"};
  for (int i = 0; i < 200; ++i) {
    Labels a, b;
    const std::size_t n = 2 + rng() % 20;
    for (std::size_t k = 0; k < n; ++k) {
      a.push_back(classes[rng() % 4]);
      b.push_back(rng() % 3 ? a.back() : classes[rng() % 4]);
    }
    if (std::equal(a.begin() + 1, a.end(), a.begin()) && std::equal(b.begin() + 1, b.end(), b.begin()) &&
        a[0] != b[0])
      continue;  // degenerate marginals
    const auto k = cohen_kappa(a, b).kappa;
    CHECK(cohen_kappa(b, a).kappa == doctest::Approx(k).epsilon(1e-12));
    Labels ra, rb;
    for (auto& x : a) ra.push_back("L" + x);
    for (auto& x : b) rb.push_back("L" + x);
    CHECK(cohen_kappa(ra, rb).kappa == doctest::Approx(k).epsilon(1e-12));
    CHECK(k >= -1.0);
    CHECK(k <= 1.0);
  }
}

TEST_CASE("bio token scores") {
  const auto gold = split_tags("B-C I-C O B-E");
  CHECK(bio_token_prf(gold, gold).f1 == 1.0);
  const auto all_o = split_tags("O O O O");
  const auto m = bio_confusion(std::vector<std::vector<BioTag>>{gold},
                               std::vector<std::vector<BioTag>>{all_o});
  const auto per_class = per_class_scores(m);
  for (const auto& c : per_class) {
    if (c.label == "O")
      CHECK(c.scores.recall == 1.0);
    else if (c.support > 0)
      CHECK(c.scores.f1 == 0.0);
  }
  CHECK_THROWS_AS(bio_token_prf(gold, split_tags("O")), MetricsError);
  // Signal tags are scored as O.
  CHECK(bio_token_prf(split_tags("B-S O"), split_tags("O O")).f1 == 1.0);
}

TEST_CASE("bio scores equal confusion plus macro") {
  std::mt19937_64 rng(4);
  const std::vector<BioTag> pool = {BioTag::O, BioTag::BeginCause, BioTag::InsideCause,
                                    BioTag::BeginEffect, BioTag::InsideEffect};
  for (int i = 0; i < 100; ++i) {
    std::vector<BioTag> g, p;
    Labels gl, pl;
    for (int k = 0; k < 12; ++k) {
      g.push_back(pool[rng() % 5]);
      p.push_back(pool[rng() % 5]);
      gl.emplace_back(concausal::corpus::to_string(g.back()));
      pl.emplace_back(concausal::corpus::to_string(p.back()));
    }
    CHECK(bio_token_prf(g, p).f1 == doctest::Approx(macro_prf(confusion(gl, pl, bio_classes())).f1));
  }
}

TEST_CASE("reports") {
  const Labels gold = {"procausal", "concausal", "uncausal", "procausal"};
  const Labels pred = {"procausal", "concausal", "procausal", "uncausal"};
  const auto report = make_task_report("detection", confusion(gold, pred, ternary_classes()));
  CHECK(report.items == 4);
  CHECK(percent(0.832) == "83.2");
  CHECK(percent(0.5) == "50.0");
  const std::vector<TaskReport> reports = {report};
  const auto text = render_report(reports);
  CHECK(text.find("detection") != std::string::npos);
  CHECK(text.find("50.0") != std::string::npos);
  CHECK(text.find("[detection]") != std::string::npos);
  const auto json = to_json(report);
  CHECK(json["task"] == "detection");
  CHECK(json["confusion"]["counts"].size() == 3);
}

TEST_CASE("matrices add") {
  ConfusionMatrix a(binary_classes()), b(binary_classes());
  a.add("causal", "causal");
  b.add("causal", "uncausal", 2);
  a += b;
  CHECK(a.total() == 3);
  ConfusionMatrix c(ternary_classes());
  CHECK_THROWS_AS(a += c, MetricsError);
}

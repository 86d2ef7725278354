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

#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli.h"
#include "concausal/corpus/io.h"

namespace fs = std::filesystem;

namespace {

const std::string kFixtures = CONCAUSAL_FIXTURES;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "concausal");
  std::ostringstream out, err;
  const int status = concausal::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("concausal_cli_" + std::to_string(::getpid()) + "_" + name);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", fixture("stats6.jsonl")}).status == 0);
  const auto bad = run({"validate", fixture("oob_span.jsonl")});
  CHECK(bad.status == 1);
  CHECK(contains(bad.out, "bad_span_7"));
  const auto dup = run({"validate", fixture("dup_ids.csv")});
  CHECK(dup.status == 1);
  CHECK(contains(dup.out, "duplicate id"));

  const auto empty = scratch("empty.jsonl");
  concausal::corpus::write_file(empty, "");
  const auto none = run({"validate", empty.string()});
  CHECK(none.status == 1);
  CHECK(contains(none.out, "no records"));
  fs::remove(empty);

  CHECK(run({"validate", fixture("nope.jsonl")}).status == 1);
}

TEST_CASE("stats") {
  const auto report = scratch("stats.json");
  const auto r = run({"--out", report.string(), "stats", fixture("stats6.jsonl")});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "Procausal"));
  const auto j = nlohmann::json::parse(concausal::corpus::read_file(report));
  CHECK(j["procausal"]["total"] == 2);
  CHECK(j["concausal"]["total"] == 2);
  CHECK(j["uncausal"]["total"] == 2);
  CHECK(j["total"]["total"] == 6);
  fs::remove(report);

  const auto empty = scratch("empty_stats.jsonl");
  concausal::corpus::write_file(empty, "");
  const auto zero = run({"stats", empty.string()});
  CHECK(zero.status == 0);
  CHECK(contains(zero.out, "Total"));
  fs::remove(empty);
}

TEST_CASE("extract then eval") {
  const auto preds = scratch("preds.jsonl");
  const auto extract = run({"--out", preds.string(), "extract", fixture("taxonomy.jsonl")});
  REQUIRE(extract.status == 0);
  CHECK(contains(extract.out, "extracted"));

  const auto report = scratch("eval.json");
  const auto eval =
      run({"--out", report.string(), "eval", fixture("taxonomy.jsonl"), preds.string()});
  REQUIRE(eval.status == 0);
  CHECK(contains(eval.out, "detection"));
  CHECK(contains(eval.out, "[detection]"));
  CHECK(contains(eval.out, "identification: no gold pairs, skipped"));
  const auto j = nlohmann::json::parse(concausal::corpus::read_file(report));
  CHECK(j["tasks"][0]["task"] == "detection");
  CHECK(j["tasks"][0]["macro"]["f1"] == 1.0);  // fractions, not percentages
  fs::remove(preds);
  fs::remove(report);
}

TEST_CASE("extract writes predictions to stdout by default") {
  const auto r = run({"extract", "--mode", "binary", fixture("four_gold.jsonl")});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"binary\""));
  CHECK(contains(r.err, "extracted 4 records"));
  CHECK(run({"extract", "--mode", "quaternary", fixture("four_gold.jsonl")}).status != 0);
}

TEST_CASE("eval on the four item case") {
  const auto r = run({"eval", "--task", "detection", fixture("four_gold.jsonl"),
                      fixture("four_pred.jsonl")});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "50.0"));
  const auto mismatch = run({"eval", fixture("stats6.jsonl"), fixture("four_pred.jsonl")});
  CHECK(mismatch.status == 1);
  CHECK(contains(mismatch.err, "error:"));
}

TEST_CASE("reason") {
  const auto blocking = run({"reason", fixture("blocking.dsl"), "--query", "!B"});
  CHECK(blocking.status == 0);
  CHECK(contains(blocking.out, "!B: believed (skeptical)"));

  const auto plain = run({"reason", fixture("specificity.dsl"), "--query", "!B"});
  CHECK(contains(plain.out, "!B: unknown"));
  CHECK(contains(plain.out, "2 extension(s)"));
  const auto specific = run({"reason", fixture("specificity.dsl"), "--query", "!B", "--specificity"});
  CHECK(contains(specific.out, "!B: believed (skeptical, specificity)"));

  const auto chain = run({"reason", fixture("chain.dsl")});
  CHECK(chain.status == 0);
  CHECK(contains(chain.out, "1 conflict(s)"));
  CHECK(contains(chain.out, "A -> B -> C  vs  con(A,C)"));
  CHECK(contains(chain.out, "implied: con(B,A) con(C,B)"));

  CHECK(run({"reason", fixture("chain.dsl"), "--inference", "sometimes"}).status == 1);
  const auto bad = scratch("bad.dsl");
  concausal::corpus::write_file(bad, "fact A\n");
  const auto err = run({"reason", bad.string()});
  CHECK(err.status == 1);
  CHECK(contains(err.err, "1:"));
  fs::remove(bad);
}

TEST_CASE("agreement") {
  const auto r = run({"agreement", fixture("kappa_a.txt"), fixture("kappa_b.txt")});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "kappa 0.6364"));
  CHECK(run({"agreement", fixture("kappa_a.txt"), fixture("kappa_a.txt")}).out.find("kappa 1.0000") !=
        std::string::npos);
  const auto shorter = scratch("short.txt");
  concausal::corpus::write_file(shorter, "pro\n");
  CHECK(run({"agreement", fixture("kappa_a.txt"), shorter.string()}).status == 1);
  fs::remove(shorter);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status != 0);
  CHECK(run({"frobnicate"}).status != 0);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("serve needs a data directory") {
  const auto r = run({"serve", "--port", "0", "--data-dir", fixture("missing_dir")});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "no items.jsonl or items.csv"));
}

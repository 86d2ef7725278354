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
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"

#include "concausal/annotation/guidelines.h"
#include "concausal/annotation/server.h"
#include "concausal/annotation/store.h"
#include "concausal/corpus/io.h"
#include "concausal/metrics/metrics.h"

using namespace concausal;
using annotation::AnnotationError;
using annotation::AnnotationStore;
using corpus::CausalityLabel;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = CONCAUSAL_FIXTURES;

// Copy of the fixture directory so the event log starts empty.
fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("concausal_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy(kFixtures + "/annotation/items.jsonl", dir / "items.jsonl");
  fs::copy(kFixtures + "/annotation/annotators.txt", dir / "annotators.txt");
  return dir;
}

// The labels both annotators give; bob disagrees on item03.
const std::vector<std::string> kAlice = {"procausal", "concausal", "uncausal", "concausal",
                                         "procausal", "concausal", "uncausal", "procausal",
                                         "uncausal",  "procausal"};

std::vector<std::string> bob_labels() {
  auto labels = kAlice;
  labels[2] = "procausal";
  return labels;
}

std::string item(std::size_t i) {
  return std::string("item") + (i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
}

struct Running {
  explicit Running(AnnotationStore& store) : server(store) {
    port = server.bind("127.0.0.1", 0);
    thread = std::thread([this] { server.listen(); });
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    for (int i = 0; i < 100 && !server.running(); ++i)
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ~Running() {
    server.stop();
    thread.join();
  }
  annotation::AnnotationServer server;
  int port = 0;
  std::thread thread;
  std::unique_ptr<httplib::Client> client;
};

json post(httplib::Client& c, const std::string& path, const json& body, int expect) {
  auto res = c.Post(path, body.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->status == expect);
  return json::parse(res->body);
}

json get(httplib::Client& c, const std::string& path, int expect) {
  auto res = c.Get(path);
  REQUIRE(res);
  CHECK(res->status == expect);
  return json::parse(res->body);
}

}  // namespace

TEST_CASE("guidelines list the five tests and every family") {
  const auto& g = annotation::guidelines();
  CHECK(g["checklist"].size() == 5);
  CHECK(g["concausal_categories"].size() == 11);
  CHECK(annotation::is_checklist_test("causal_chain"));
  CHECK_FALSE(annotation::is_checklist_test("vibes"));
}

TEST_CASE("store labels, agreement and export") {
  const auto dir = fresh_dir("store");
  auto store = AnnotationStore::open(dir);
  CHECK(store.item_count() == 10);
  CHECK(store.next_item("alice", 1)->id == "item01");

  annotation::LabelEvent e{"item01", "alice", CausalityLabel::Procausal, {}, 1, ""};
  e.checklist["temporal_order"] = annotation::ChecklistOutcome::Pass;
  CHECK(store.submit_label(e) == 1);
  CHECK(store.next_item("alice", 1)->id == "item02");
  CHECK(store.progress("alice", 1).labeled == 1);

  auto bad = e;
  bad.checklist["vibes"] = annotation::ChecklistOutcome::Pass;
  CHECK_THROWS_AS(store.submit_label(bad), AnnotationError);
  bad = e;
  bad.item_id = "nope";
  try {
    store.submit_label(bad);
    FAIL("expected unknown_item");
  } catch (const AnnotationError& err) {
    CHECK(err.code() == "unknown_item");
    CHECK(err.status() == 404);
  }
  CHECK_THROWS_AS(store.agreement("alice", "bob", 1), AnnotationError);

  // Replaying the log restores the state.
  auto reopened = AnnotationStore::open(dir);
  CHECK(reopened.labels("alice", 1).size() == 1);
  CHECK(reopened.event_count() == 1);
  fs::remove_all(dir);
}

TEST_CASE("corrupt logs are rejected") {
  const auto dir = fresh_dir("corrupt");
  std::ofstream(dir / "events.jsonl") << "{\"type\":\"label\"\n";
  try {
    AnnotationStore::open(dir);
    FAIL("expected corrupt_log");
  } catch (const AnnotationError& err) {
    CHECK(err.code() == "corrupt_log");
  }
  fs::remove_all(dir);
}

TEST_CASE("two annotators over HTTP with one disagreement") {
  const auto dir = fresh_dir("http");
  auto store = AnnotationStore::open(dir);
  Running run(store);
  auto& c = *run.client;

  CHECK(get(c, "/api/guidelines", 200)["checklist"].size() == 5);
  auto next = get(c, "/api/items/next?annotator=alice", 200);
  CHECK(next["done"] == false);
  CHECK(next["item"]["id"] == "item01");
  CHECK(next["progress"]["total"] == 10);

  const auto bob = bob_labels();
  for (std::size_t i = 0; i < kAlice.size(); ++i) {
    post(c, "/api/items/" + item(i) + "/label",
         {{"annotator", "alice"}, {"label", kAlice[i]}, {"checklist", {{"linguistic_test", "pass"}}}},
         201);
    post(c, "/api/items/" + item(i) + "/label", {{"annotator", "bob"}, {"label", bob[i]}}, 201);
  }
  CHECK(get(c, "/api/items/next?annotator=bob", 200)["done"] == true);

  const auto agreement = get(c, "/api/agreement?a=alice&b=bob", 200);
  const auto direct = metrics::cohen_kappa(kAlice, bob);
  CHECK(agreement["kappa"].get<double>() == doctest::Approx(direct.kappa).epsilon(1e-12));
  CHECK(agreement["disagreements"] == json::array({"item03"}));
  CHECK(agreement["common_items"].size() == 10);

  // Export waits for adjudication.
  auto blocked = get(c, "/api/export", 409);
  CHECK(blocked["error"]["code"] == "pending_disagreement");
  post(c, "/api/adjudicate/item03",
       {{"label", "uncausal"}, {"resolved_by", "alice"}, {"rationale", "no causal link"}}, 201);
  auto res = c.Get("/api/export");
  REQUIRE(res);
  CHECK(res->status == 200);
  const auto records = corpus::parse_corpus(res->body, corpus::Format::UnicausalCsv);
  REQUIRE(records.size() == 10);
  CHECK(records[2].label == CausalityLabel::Uncausal);
  CHECK(corpus::validate_corpus(records).empty());
  fs::remove_all(dir);
}

TEST_CASE("the four item agreement case over HTTP") {
  const auto dir = fresh_dir("four");
  auto store = AnnotationStore::open(dir);
  Running run(store);
  auto& c = *run.client;
  const std::vector<std::string> a = {"procausal", "procausal", "concausal", "uncausal"};
  const std::vector<std::string> b = {"procausal", "concausal", "concausal", "uncausal"};
  for (std::size_t i = 0; i < 4; ++i) {
    post(c, "/api/items/" + item(i) + "/label", {{"annotator", "alice"}, {"label", a[i]}}, 201);
    post(c, "/api/items/" + item(i) + "/label", {{"annotator", "bob"}, {"label", b[i]}}, 201);
  }
  const auto agreement = get(c, "/api/agreement?a=alice&b=bob", 200);
  CHECK(agreement["kappa"].get<double>() == doctest::Approx(7.0 / 11.0).epsilon(1e-12));
  CHECK(agreement["disagreements"] == json::array({"item02"}));
  // item02 is disputed and six items are still unlabeled.
  CHECK(get(c, "/api/export", 409)["error"]["code"] == "pending_disagreement");
  post(c, "/api/adjudicate/item02", {{"label", "procausal"}, {"resolved_by", "bob"}}, 201);
  CHECK(get(c, "/api/export", 409)["error"]["code"] == "unlabeled_item");
  fs::remove_all(dir);
}

TEST_CASE("request errors") {
  const auto dir = fresh_dir("errors");
  auto store = AnnotationStore::open(dir);
  Running run(store);
  auto& c = *run.client;
  CHECK(get(c, "/api/items/next", 400)["error"]["code"] == "invalid_request");
  CHECK(get(c, "/api/items/next?annotator=carol", 404)["error"]["code"] == "unknown_annotator");
  CHECK(post(c, "/api/items/item01/label", {{"annotator", "alice"}, {"label", "maybe"}}, 400)
            ["error"]["code"] == "invalid_label");
  CHECK(post(c, "/api/items/zzz/label", {{"annotator", "alice"}, {"label", "procausal"}}, 404)
            ["error"]["code"] == "unknown_item");
  CHECK(get(c, "/api/agreement?a=alice&b=bob", 409)["error"]["code"] == "no_overlap");
  CHECK(get(c, "/api/nothing", 404)["error"]["code"] == "not_found");
  auto res = c.Post("/api/items/item01/label", "{oops", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(post(c, "/api/adjudicate/item01", {{"label", "procausal"}, {"resolved_by", "mallory"}}, 404)
            ["error"]["code"] == "unknown_annotator");
  fs::remove_all(dir);
}

TEST_CASE("seeded rounds are reproducible") {
  const auto d1 = fresh_dir("round1");
  const auto d2 = fresh_dir("round2");
  auto s1 = AnnotationStore::open(d1);
  auto s2 = AnnotationStore::open(d2);
  Running run(s1);
  const auto body = post(*run.client, "/api/rounds/2/sample", {{"size", 4}, {"seed", 7}}, 201);
  CHECK(body["items"].size() == 4);
  const auto direct = s2.sample_round(2, 4, 7);
  CHECK(body["items"].get<std::vector<std::string>>() == direct);
  CHECK(s1.round_items(2) == direct);
  CHECK(s1.round_items(1).size() == 10);
  CHECK(s1.progress("alice", 2).total == 4);
  CHECK(post(*run.client, "/api/rounds/2/sample", {{"size", 0}}, 400)["error"]["code"] ==
        "invalid_request");
  fs::remove_all(d1);
  fs::remove_all(d2);
}

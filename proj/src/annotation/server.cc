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

#include "concausal/annotation/server.h"

#include <charconv>

#include <httplib.h>

#include "concausal/annotation/guidelines.h"
#include "concausal/corpus/io.h"
#include "concausal/metrics/report.h"

namespace concausal::annotation {

namespace {

using json = nlohmann::ordered_json;

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace),
                  "application/json; charset=utf-8");
}

void send_error(httplib::Response& res, const std::string& code, const std::string& message,
                int status) {
  send_json(res, {{"error", {{"code", code}, {"message", message}}}}, status);
}

std::string required_param(const httplib::Request& req, const std::string& name) {
  if (!req.has_param(name) || req.get_param_value(name).empty())
    throw AnnotationError("invalid_request", "missing query parameter '" + name + "'", 400);
  return req.get_param_value(name);
}

int parse_round(std::string_view text) {
  int round = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), round);
  if (ec != std::errc() || ptr != text.data() + text.size() || round < 1)
    throw AnnotationError("invalid_request", "round must be a positive integer", 400);
  return round;
}

int round_param(const httplib::Request& req) {
  return req.has_param("round") ? parse_round(req.get_param_value("round")) : 1;
}

nlohmann::json body_of(const httplib::Request& req) {
  try {
    auto body = nlohmann::json::parse(req.body);
    if (!body.is_object()) throw AnnotationError("invalid_request", "body must be an object", 400);
    return body;
  } catch (const nlohmann::json::exception& e) {
    throw AnnotationError("invalid_request", std::string("malformed JSON body: ") + e.what(), 400);
  }
}

std::string string_field(const nlohmann::json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string() || it->get<std::string>().empty())
    throw AnnotationError("invalid_request", std::string("field '") + key + "' is required", 400);
  return it->get<std::string>();
}

int round_field(const nlohmann::json& body) {
  auto it = body.find("round");
  if (it == body.end()) return 1;
  if (!it->is_number_integer() || it->get<int>() < 1)
    throw AnnotationError("invalid_request", "round must be a positive integer", 400);
  return it->get<int>();
}

corpus::CausalityLabel label_field(const nlohmann::json& body) {
  const auto text = string_field(body, "label");
  auto label = corpus::parse_label(text);
  if (!label) throw AnnotationError("invalid_label", "unknown label '" + text + "'", 400);
  return *label;
}

// Runs a handler, mapping exceptions onto error responses.
template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const AnnotationError& e) {
      send_error(res, e.code(), e.what(), e.status());
    } catch (const metrics::MetricsError& e) {
      send_error(res, "invalid_request", e.what(), 400);
    } catch (const std::exception& e) {
      send_error(res, "internal", e.what(), 500);
    }
  };
}

}  // namespace

AnnotationServer::AnnotationServer(AnnotationStore& store)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
  routes();
}

AnnotationServer::~AnnotationServer() { stop(); }

void AnnotationServer::routes() {
  auto& s = *server_;

  s.Get("/api/guidelines", guarded([](const httplib::Request&, httplib::Response& res) {
          send_json(res, guidelines());
        }));

  s.Get("/api/items/next", guarded([this](const httplib::Request& req, httplib::Response& res) {
          const auto annotator = required_param(req, "annotator");
          const int round = round_param(req);
          const auto item = store_.next_item(annotator, round);
          const auto progress = store_.progress(annotator, round);
          json body;
          body["done"] = !item.has_value();
          body["round"] = round;
          body["progress"] = {{"labeled", progress.labeled}, {"total", progress.total}};
          if (item) {
            body["item"] = corpus::record_to_json(*item);
            body["guidelines"] = guidelines();
          }
          send_json(res, body);
        }));

  s.Post(R"(/api/items/([^/]+)/label)",
         guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = body_of(req);
           LabelEvent event;
           event.item_id = req.matches[1];
           event.annotator = string_field(body, "annotator");
           event.label = label_field(body);
           event.round = round_field(body);
           if (auto it = body.find("checklist"); it != body.end()) {
             if (!it->is_object())
               throw AnnotationError("invalid_request", "checklist must be an object", 400);
             for (const auto& [test, value] : it->items()) {
               auto outcome = value.is_string() ? parse_outcome(value.get<std::string>())
                                                : std::nullopt;
               if (!outcome)
                 throw AnnotationError("invalid_request",
                                       "checklist outcome for '" + test +
                                           "' must be pass, fail or n/a",
                                       400);
               event.checklist[test] = *outcome;
             }
           }
           const auto sequence = store_.submit_label(event);
           send_json(res, {{"ok", true}, {"sequence", sequence}}, 201);
         }));

  s.Get("/api/agreement", guarded([this](const httplib::Request& req, httplib::Response& res) {
          const auto report = store_.agreement(required_param(req, "a"),
                                               required_param(req, "b"), round_param(req));
          auto body = metrics::to_json(report.result);
          body["common_items"] = report.common_items;
          body["disagreements"] = report.disagreements;
          send_json(res, body);
        }));

  s.Post(R"(/api/adjudicate/([^/]+))",
         guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = body_of(req);
           Adjudication a;
           a.item_id = req.matches[1];
           a.round = round_field(body);
           a.label = label_field(body);
           a.resolved_by = string_field(body, "resolved_by");
           a.rationale = body.value("rationale", "");
           const auto sequence = store_.adjudicate(a);
           send_json(res, {{"ok", true}, {"sequence", sequence}}, 201);
         }));

  s.Get("/api/export", guarded([this](const httplib::Request& req, httplib::Response& res) {
          res.set_content(store_.export_corpus(round_param(req)), "text/csv; charset=utf-8");
        }));

  s.Post(R"(/api/rounds/(\d+)/sample)",
         guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = body_of(req);
           const int round = parse_round(req.matches[1].str());
           auto size = body.find("size");
           if (size == body.end() || !size->is_number_unsigned())
             throw AnnotationError("invalid_request", "field 'size' must be a positive integer",
                                   400);
           const auto seed = body.value("seed", std::uint64_t{42});
           const auto items = store_.sample_round(round, size->get<std::size_t>(), seed);
           send_json(res, {{"round", round}, {"items", items}}, 201);
         }));

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      if (res.status == 404)
        send_error(res, "not_found", "no such endpoint", 404);
      else
        send_error(res, "http_error", "request failed", res.status);
    }
  });
}

int AnnotationServer::bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound <= 0)
    throw AnnotationError("io_error", "cannot bind " + host + ":" + std::to_string(port), 500);
  return bound;
}

void AnnotationServer::listen() { server_->listen_after_bind(); }

void AnnotationServer::stop() {
  if (server_) server_->stop();
}

bool AnnotationServer::running() const { return server_->is_running(); }

}  // namespace concausal::annotation

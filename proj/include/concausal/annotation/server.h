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

#include <memory>
#include <string>

#include "concausal/annotation/store.h"

namespace httplib {
class Server;
}

namespace concausal::annotation {

// JSON-over-HTTP front end for an AnnotationStore.
//   GET  /api/items/next?annotator=&round=
//   POST /api/items/{id}/label        {"annotator","label","round","checklist"}
//   GET  /api/agreement?a=&b=&round=
//   GET  /api/guidelines
//   POST /api/adjudicate/{id}         {"round","label","rationale","resolved_by"}
//   GET  /api/export?round=           text/csv
//   POST /api/rounds/{round}/sample   {"size","seed"}
// Failures answer {"error":{"code","message"}} with a 4xx/5xx status.
class AnnotationServer {
 public:
  explicit AnnotationServer(AnnotationStore& store);
  ~AnnotationServer();

  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Returns the bound port; port 0 picks a free one. Throws on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();
  bool running() const;

 private:
  void routes();

  AnnotationStore& store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace concausal::annotation

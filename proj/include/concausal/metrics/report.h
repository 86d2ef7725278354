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

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "concausal/metrics/metrics.h"

namespace concausal::metrics {

// One row of an evaluation table: a task scored over some items.
struct TaskReport {
  std::string task;
  ConfusionMatrix matrix;
  Scores macro;
  std::size_t items = 0;  // sentences or pairs; tokens for tagging
};

TaskReport make_task_report(std::string task, ConfusionMatrix matrix);

// "83.2": a fraction rendered as a percentage with one decimal.
std::string percent(double fraction);

// Macro F1/P/R table followed by each task's confusion matrix.
std::string render_report(std::span<const TaskReport> reports);
std::string render_confusion(const ConfusionMatrix& matrix);

nlohmann::ordered_json to_json(const ConfusionMatrix& matrix);
nlohmann::ordered_json to_json(const TaskReport& report);
nlohmann::ordered_json to_json(const AgreementResult& agreement);

}  // namespace concausal::metrics

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

#include "concausal/metrics/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace concausal::metrics {

TaskReport make_task_report(std::string task, ConfusionMatrix matrix) {
  TaskReport report;
  report.task = std::move(task);
  report.items = matrix.total();
  report.macro = macro_prf(matrix);
  report.matrix = std::move(matrix);
  return report;
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", std::round(fraction * 1000.0) / 10.0);
  return buf;
}

std::string render_confusion(const ConfusionMatrix& matrix) {
  std::size_t width = 9;
  for (const auto& c : matrix.classes) width = std::max(width, c.size() + 2);
  for (const auto& row : matrix.counts)
    for (auto n : row) width = std::max(width, std::to_string(n).size() + 2);

  auto cell = [&](const std::string& text) {
    return std::string(width > text.size() ? width - text.size() : 1, ' ') + text;
  };
  std::string out = cell("gold\\pred");
  for (const auto& c : matrix.classes) out += cell(c);
  out += '\n';
  for (std::size_t g = 0; g < matrix.size(); ++g) {
    out += cell(matrix.classes[g]);
    for (auto n : matrix.counts[g]) out += cell(std::to_string(n));
    out += '\n';
  }
  return out;
}

std::string render_report(std::span<const TaskReport> reports) {
  std::size_t name_width = 4;
  for (const auto& r : reports) name_width = std::max(name_width, r.task.size());

  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s %7s %7s %7s %8s\n", static_cast<int>(name_width),
                "Task", "F1", "P", "R", "n");
  out += line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-*s %7s %7s %7s %8zu\n", static_cast<int>(name_width),
                  r.task.c_str(), percent(r.macro.f1).c_str(),
                  percent(r.macro.precision).c_str(), percent(r.macro.recall).c_str(), r.items);
    out += line;
  }
  for (const auto& r : reports) out += "\n[" + r.task + "]\n" + render_confusion(r.matrix);
  return out;
}

nlohmann::ordered_json to_json(const ConfusionMatrix& matrix) {
  nlohmann::ordered_json j;
  j["classes"] = matrix.classes;
  j["counts"] = matrix.counts;
  return j;
}

nlohmann::ordered_json to_json(const TaskReport& report) {
  nlohmann::ordered_json j;
  j["task"] = report.task;
  j["items"] = report.items;
  j["macro"] = {{"f1", (report.macro.f1)},
                {"precision", (report.macro.precision)},
                {"recall", (report.macro.recall)}};
  j["per_class"] = nlohmann::ordered_json::array();
  for (const auto& c : per_class_scores(report.matrix))
    j["per_class"].push_back({{"label", c.label},
                              {"f1", (c.scores.f1)},
                              {"precision", (c.scores.precision)},
                              {"recall", (c.scores.recall)},
                              {"support", c.support}});
  j["confusion"] = to_json(report.matrix);
  return j;
}

nlohmann::ordered_json to_json(const AgreementResult& agreement) {
  return {{"items", agreement.items},
          {"observed", agreement.observed},
          {"expected", agreement.expected},
          {"kappa", agreement.kappa}};
}

}  // namespace concausal::metrics

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

#include "concausal/corpus/stats.h"

#include <cstdio>

namespace concausal::corpus {

namespace {

std::size_t index(CausalityLabel label) { return static_cast<std::size_t>(label); }
std::size_t index(Split split) { return static_cast<std::size_t>(split); }

std::string label_title(CausalityLabel label) {
  switch (label) {
    case CausalityLabel::Procausal: return "Procausal";
    case CausalityLabel::Concausal: return "Concausal";
    case CausalityLabel::Uncausal: return "Uncausal";
  }
  return "";
}

}  // namespace

std::size_t CorpusStats::count(CausalityLabel label, Split split) const {
  return counts[index(label)][index(split)];
}

std::size_t CorpusStats::class_total(CausalityLabel label) const {
  std::size_t sum = 0;
  for (auto n : counts[index(label)]) sum += n;
  return sum;
}

std::size_t CorpusStats::split_total(Split split) const {
  std::size_t sum = 0;
  for (const auto& row : counts) sum += row[index(split)];
  return sum;
}

std::size_t CorpusStats::total() const {
  std::size_t sum = 0;
  for (const auto& row : counts)
    for (auto n : row) sum += n;
  return sum;
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) {
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t s = 0; s < 3; ++s) counts[l][s] += other.counts[l][s];
  return *this;
}

CorpusStats corpus_stats(std::span<const SentenceRecord> records) {
  CorpusStats stats;
  for (const auto& record : records)
    ++stats.counts[index(record.label)][index(record.split)];
  return stats;
}

std::string render_stats_table(const CorpusStats& stats) {
  const bool with_test = stats.split_total(Split::Test) > 0;
  auto splits = [&](auto get) {
    std::string out = "(" + std::to_string(get(Split::Train)) + "/" +
                      std::to_string(get(Split::Validation));
    if (with_test) out += "/" + std::to_string(get(Split::Test));
    return out + ")";
  };

  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %8s  %s\n", "Class", "#",
                with_test ? "(train/val/test)" : "(train/val)");
  out += line;
  for (auto label : {CausalityLabel::Procausal, CausalityLabel::Concausal,
                     CausalityLabel::Uncausal}) {
    const auto detail = splits([&](Split s) { return stats.count(label, s); });
    std::snprintf(line, sizeof line, "%-10s %8zu  %s\n", label_title(label).c_str(),
                  stats.class_total(label), detail.c_str());
    out += line;
  }
  const auto detail = splits([&](Split s) { return stats.split_total(s); });
  std::snprintf(line, sizeof line, "%-10s %8zu  %s\n", "Total", stats.total(),
                detail.c_str());
  out += line;
  return out;
}

}  // namespace concausal::corpus

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

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "concausal/corpus/record.h"

namespace concausal::corpus {

struct CorpusStats {
  // counts[label][split], indexed by the enum values.
  std::array<std::array<std::size_t, 3>, 3> counts{};

  std::size_t count(CausalityLabel label, Split split) const;
  std::size_t class_total(CausalityLabel label) const;
  std::size_t split_total(Split split) const;
  std::size_t total() const;

  CorpusStats& operator+=(const CorpusStats& other);
  bool operator==(const CorpusStats&) const = default;
};

CorpusStats corpus_stats(std::span<const SentenceRecord> records);

// Class rows with per-split counts in parentheses and a sum row. The test
// column is shown only when some record belongs to the test split.
std::string render_stats_table(const CorpusStats& stats);

}  // namespace concausal::corpus

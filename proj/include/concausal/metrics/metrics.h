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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "concausal/corpus/bio.h"
#include "concausal/corpus/record.h"

namespace concausal::metrics {

class MetricsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rows are gold labels, columns predictions, both in `classes` order.
struct ConfusionMatrix {
  std::vector<std::string> classes;
  std::vector<std::vector<std::size_t>> counts;

  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::vector<std::string> class_list);

  std::size_t size() const { return classes.size(); }
  std::size_t index_of(std::string_view label) const;  // throws MetricsError
  void add(std::string_view gold, std::string_view predicted, std::size_t n = 1);

  std::size_t at(std::string_view gold, std::string_view predicted) const;
  std::size_t row_sum(std::size_t gold) const;
  std::size_t column_sum(std::size_t predicted) const;
  std::size_t total() const;

  // Adds counts of a matrix over the same classes.
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);
  bool operator==(const ConfusionMatrix&) const = default;
};

// Errors on length mismatch and labels outside `classes`.
ConfusionMatrix confusion(std::span<const std::string> golds,
                          std::span<const std::string> predictions,
                          std::vector<std::string> classes);

// Uncausal, procausal, concausal: the report order.
std::vector<std::string> ternary_classes();
std::vector<std::string> binary_classes();
std::vector<std::string> bio_classes();  // B-C, I-C, B-E, I-E, O

struct Scores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct ClassScores {
  std::string label;
  Scores scores;
  std::size_t support = 0;    // gold count
  std::size_t predicted = 0;  // predicted count
};

// P = TP/(TP+FP), R = TP/(TP+FN), F1 harmonic mean; a zero denominator
// scores 0.
std::vector<ClassScores> per_class_scores(const ConfusionMatrix& matrix);

// Unweighted mean over the classes that occur in gold or predictions.
// Throws MetricsError when the matrix has no items.
Scores macro_prf(const ConfusionMatrix& matrix);

struct AgreementResult {
  double observed = 0;  // p_o
  double expected = 0;  // p_e
  double kappa = 0;
  std::size_t items = 0;
};

// Cohen's kappa. p_o = 1 gives kappa 1 even with degenerate marginals;
// p_e = 1 with p_o < 1 cannot happen for equal-length inputs but is
// rejected defensively. Errors on empty or unequal inputs.
AgreementResult cohen_kappa(std::span<const std::string> a, std::span<const std::string> b);

// Token-level scores over the five BIO-CE tags, concatenating sentences.
// Each sentence pair must have equal lengths.
ConfusionMatrix bio_confusion(std::span<const std::vector<corpus::BioTag>> gold,
                              std::span<const std::vector<corpus::BioTag>> predicted);
Scores bio_token_prf(std::span<const std::vector<corpus::BioTag>> gold,
                     std::span<const std::vector<corpus::BioTag>> predicted);
Scores bio_token_prf(std::span<const corpus::BioTag> gold,
                     std::span<const corpus::BioTag> predicted);

}  // namespace concausal::metrics

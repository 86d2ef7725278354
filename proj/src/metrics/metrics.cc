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

#include "concausal/metrics/metrics.h"

#include <algorithm>
#include <map>

namespace concausal::metrics {

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> class_list)
    : classes(std::move(class_list)),
      counts(classes.size(), std::vector<std::size_t>(classes.size(), 0)) {
  auto sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw MetricsError("duplicate class in confusion matrix");
}

std::size_t ConfusionMatrix::index_of(std::string_view label) const {
  auto it = std::find(classes.begin(), classes.end(), label);
  if (it == classes.end()) throw MetricsError("unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - classes.begin());
}

void ConfusionMatrix::add(std::string_view gold, std::string_view predicted, std::size_t n) {
  counts[index_of(gold)][index_of(predicted)] += n;
}

std::size_t ConfusionMatrix::at(std::string_view gold, std::string_view predicted) const {
  return counts[index_of(gold)][index_of(predicted)];
}

std::size_t ConfusionMatrix::row_sum(std::size_t gold) const {
  std::size_t sum = 0;
  for (auto n : counts[gold]) sum += n;
  return sum;
}

std::size_t ConfusionMatrix::column_sum(std::size_t predicted) const {
  std::size_t sum = 0;
  for (const auto& row : counts) sum += row[predicted];
  return sum;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < size(); ++i) sum += row_sum(i);
  return sum;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (other.classes != classes) throw MetricsError("cannot add matrices over different classes");
  for (std::size_t g = 0; g < size(); ++g)
    for (std::size_t p = 0; p < size(); ++p) counts[g][p] += other.counts[g][p];
  return *this;
}

ConfusionMatrix confusion(std::span<const std::string> golds,
                          std::span<const std::string> predictions,
                          std::vector<std::string> classes) {
  if (golds.size() != predictions.size())
    throw MetricsError("length mismatch: " + std::to_string(golds.size()) + " gold vs " +
                       std::to_string(predictions.size()) + " predicted labels");
  ConfusionMatrix matrix(std::move(classes));
  for (std::size_t i = 0; i < golds.size(); ++i) matrix.add(golds[i], predictions[i]);
  return matrix;
}

std::vector<std::string> ternary_classes() {
  std::vector<std::string> out;
  for (auto label : corpus::kAllLabels) out.emplace_back(corpus::to_string(label));
  return out;
}

std::vector<std::string> binary_classes() {
  return {std::string(corpus::to_string(corpus::BinaryLabel::Uncausal)),
          std::string(corpus::to_string(corpus::BinaryLabel::Causal))};
}

std::vector<std::string> bio_classes() {
  std::vector<std::string> out;
  for (auto tag : corpus::kCauseEffectTags) out.emplace_back(corpus::to_string(tag));
  return out;
}

std::vector<ClassScores> per_class_scores(const ConfusionMatrix& matrix) {
  std::vector<ClassScores> out;
  for (std::size_t c = 0; c < matrix.size(); ++c) {
    ClassScores s;
    s.label = matrix.classes[c];
    const double tp = static_cast<double>(matrix.counts[c][c]);
    s.support = matrix.row_sum(c);
    s.predicted = matrix.column_sum(c);
    s.scores.precision = s.predicted ? tp / static_cast<double>(s.predicted) : 0.0;
    s.scores.recall = s.support ? tp / static_cast<double>(s.support) : 0.0;
    const double denominator = s.scores.precision + s.scores.recall;
    s.scores.f1 = denominator > 0 ? 2 * s.scores.precision * s.scores.recall / denominator : 0.0;
    out.push_back(std::move(s));
  }
  return out;
}

Scores macro_prf(const ConfusionMatrix& matrix) {
  if (matrix.total() == 0) throw MetricsError("macro scores of an empty confusion matrix");
  Scores sum;
  std::size_t present = 0;
  for (const auto& c : per_class_scores(matrix)) {
    if (c.support == 0 && c.predicted == 0) continue;
    ++present;
    sum.precision += c.scores.precision;
    sum.recall += c.scores.recall;
    sum.f1 += c.scores.f1;
  }
  const double n = static_cast<double>(present);
  return {sum.precision / n, sum.recall / n, sum.f1 / n};
}

AgreementResult cohen_kappa(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() != b.size())
    throw MetricsError("length mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + " labels");
  if (a.empty()) throw MetricsError("agreement needs at least one item");

  std::map<std::string_view, std::pair<std::size_t, std::size_t>> marginals;
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++marginals[a[i]].first;
    ++marginals[b[i]].second;
    if (a[i] == b[i]) ++same;
  }
  const double n = static_cast<double>(a.size());
  AgreementResult r;
  r.items = a.size();
  r.observed = static_cast<double>(same) / n;
  for (const auto& [label, m] : marginals)
    r.expected += (static_cast<double>(m.first) / n) * (static_cast<double>(m.second) / n);
  if (same == a.size()) {
    r.kappa = 1.0;
  } else if (r.expected >= 1.0) {
    throw MetricsError("kappa undefined: expected agreement is 1 with disagreements");
  } else {
    r.kappa = (r.observed - r.expected) / (1.0 - r.expected);
  }
  return r;
}

ConfusionMatrix bio_confusion(std::span<const std::vector<corpus::BioTag>> gold,
                              std::span<const std::vector<corpus::BioTag>> predicted) {
  if (gold.size() != predicted.size())
    throw MetricsError("length mismatch: " + std::to_string(gold.size()) + " gold vs " +
                       std::to_string(predicted.size()) + " predicted sequences");
  ConfusionMatrix matrix(bio_classes());
  // Signal tags are scored as O.
  auto name = [](corpus::BioTag t) {
    if (t == corpus::BioTag::BeginSignal || t == corpus::BioTag::InsideSignal)
      t = corpus::BioTag::O;
    return corpus::to_string(t);
  };
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != predicted[s].size())
      throw MetricsError("sequence " + std::to_string(s) + ": " +
                         std::to_string(gold[s].size()) + " gold vs " +
                         std::to_string(predicted[s].size()) + " predicted tags");
    for (std::size_t t = 0; t < gold[s].size(); ++t)
      matrix.add(name(gold[s][t]), name(predicted[s][t]));
  }
  return matrix;
}

Scores bio_token_prf(std::span<const std::vector<corpus::BioTag>> gold,
                     std::span<const std::vector<corpus::BioTag>> predicted) {
  return macro_prf(bio_confusion(gold, predicted));
}

Scores bio_token_prf(std::span<const corpus::BioTag> gold,
                     std::span<const corpus::BioTag> predicted) {
  const std::vector<std::vector<corpus::BioTag>> g{{gold.begin(), gold.end()}};
  const std::vector<std::vector<corpus::BioTag>> p{{predicted.begin(), predicted.end()}};
  return bio_token_prf(g, p);
}

}  // namespace concausal::metrics

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

#include "concausal/pipeline/pipeline.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "concausal/corpus/bio.h"
#include "concausal/corpus/io.h"
#include "concausal/corpus/tokenizer.h"

namespace concausal::pipeline {

using corpus::CausalityLabel;
using corpus::SentenceRecord;

std::vector<std::pair<corpus::Span, corpus::Span>> gold_pairs(const SentenceRecord& record) {
  std::vector<std::pair<corpus::Span, corpus::Span>> out;
  for (int relation : corpus::relation_indices(record)) {
    std::optional<corpus::Span> cause, effect;
    for (const auto& span : corpus::relation_spans(record, relation)) {
      if (span.role == corpus::SpanRole::Cause && !cause) cause = span;
      if (span.role == corpus::SpanRole::Effect && !effect) effect = span;
    }
    if (cause && effect) out.emplace_back(*cause, *effect);
  }
  return out;
}

namespace {

Prediction predict(const extractor::Extractor& extractor, const SentenceRecord& gold,
                   extractor::DetectionMode mode) {
  Prediction p;
  p.record.id = gold.id;
  p.record.split = gold.split;
  p.record.origin = gold.origin;
  p.record.text = gold.text;

  const auto result = extractor.extract(gold.text);
  p.record.label = result.label;
  for (const auto& pair : result.pairs) {
    p.record.spans.push_back(pair.cause);
    p.record.spans.push_back(pair.effect);
  }
  corpus::canonicalize(p.record);
  p.rules = result.matched_rules;
  if (mode == extractor::DetectionMode::Binary) p.binary = corpus::to_binary(result.label);

  for (const auto& [cause, effect] : gold_pairs(gold)) {
    try {
      p.pair_labels.push_back(extractor.identify_pair(gold.text, cause, effect));
    } catch (const extractor::ExtractionError&) {
      // Spans the tokenizer cannot align stay unclassified.
      p.pair_labels.push_back(CausalityLabel::Uncausal);
    }
  }
  return p;
}

const SentenceRecord& find_gold(const std::map<std::string_view, const SentenceRecord*>& index,
                                const std::string& id) {
  auto it = index.find(id);
  if (it == index.end()) throw PipelineError("prediction for unknown id '" + id + "'");
  return *it->second;
}

}  // namespace

std::vector<Prediction> run_extraction(const extractor::Extractor& extractor,
                                       std::span<const SentenceRecord> records,
                                       extractor::DetectionMode mode, unsigned threads) {
  std::vector<Prediction> out(records.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(records.size(), 1));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++)
      out[i] = predict(extractor, records[i], mode);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
    return a.record.id < b.record.id;
  });
  return out;
}

std::string serialize_predictions(std::span<const Prediction> predictions) {
  std::string out;
  for (const auto& p : predictions) {
    auto object = corpus::record_to_json(p.record);
    auto pairs = nlohmann::ordered_json::array();
    for (auto label : p.pair_labels) pairs.push_back(corpus::to_string(label));
    object["pair_labels"] = std::move(pairs);
    object["rules"] = p.rules;
    if (p.binary) object["binary"] = corpus::to_string(*p.binary);
    out += object.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
    out += '\n';
  }
  return out;
}

std::vector<Prediction> parse_predictions(std::string_view text) {
  std::vector<Prediction> out;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const auto where = "predictions line " + std::to_string(line_no) + ": ";
    try {
      const auto object = nlohmann::json::parse(line);
      Prediction p;
      p.record = corpus::record_from_json(object);
      if (auto it = object.find("pair_labels"); it != object.end())
        for (const auto& v : *it) {
          auto label = corpus::parse_label(v.get<std::string>());
          if (!label) throw PipelineError(where + "unknown pair label");
          p.pair_labels.push_back(*label);
        }
      if (auto it = object.find("rules"); it != object.end())
        p.rules = it->get<std::vector<std::string>>();
      if (auto it = object.find("binary"); it != object.end()) {
        p.binary = corpus::parse_binary_label(it->get<std::string>());
        if (!p.binary) throw PipelineError(where + "unknown binary label");
      }
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw PipelineError(where + e.what());
    } catch (const corpus::CorpusError& e) {
      throw PipelineError(where + e.what());
    }
  }
  return out;
}

std::string_view to_string(EvalTask task) {
  switch (task) {
    case EvalTask::Detection: return "detection";
    case EvalTask::DetectionBinary: return "detection-binary";
    case EvalTask::Extraction: return "extraction";
    case EvalTask::Identification: return "identification";
  }
  return "detection";
}

std::optional<EvalTask> parse_task(std::string_view text) {
  for (auto task : kAllTasks)
    if (to_string(task) == text) return task;
  return std::nullopt;
}

metrics::TaskReport evaluate(std::span<const SentenceRecord> gold,
                             std::span<const Prediction> predictions, EvalTask task) {
  if (gold.size() != predictions.size())
    throw PipelineError("gold has " + std::to_string(gold.size()) + " records but " +
                        std::to_string(predictions.size()) + " predictions were given");
  std::map<std::string_view, const SentenceRecord*> index;
  for (const auto& record : gold)
    if (!index.emplace(record.id, &record).second)
      throw PipelineError("duplicate gold id '" + record.id + "'");

  std::vector<std::string> golds, preds;
  std::vector<std::vector<corpus::BioTag>> gold_tags, pred_tags;
  std::map<std::string_view, bool> seen;

  for (const auto& p : predictions) {
    const auto& g = find_gold(index, p.record.id);
    if (!seen.emplace(g.id, true).second)
      throw PipelineError("duplicate prediction id '" + g.id + "'");
    switch (task) {
      case EvalTask::Detection:
        golds.emplace_back(corpus::to_string(g.label));
        preds.emplace_back(corpus::to_string(p.record.label));
        break;
      case EvalTask::DetectionBinary:
        golds.emplace_back(corpus::to_string(corpus::to_binary(g.label)));
        preds.emplace_back(corpus::to_string(p.binary.value_or(corpus::to_binary(p.record.label))));
        break;
      case EvalTask::Extraction: {
        if (p.record.text != g.text)
          throw PipelineError("text of '" + g.id + "' differs between gold and prediction");
        const auto tokens = corpus::tokenize(g.text);
        gold_tags.push_back(corpus::merged_bio(tokens, g.spans));
        pred_tags.push_back(corpus::merged_bio(tokens, p.record.spans));
        break;
      }
      case EvalTask::Identification: {
        const auto pairs = gold_pairs(g);
        if (pairs.size() != p.pair_labels.size())
          throw PipelineError("'" + g.id + "' has " + std::to_string(pairs.size()) +
                              " gold pairs but " + std::to_string(p.pair_labels.size()) +
                              " pair labels");
        for (auto label : p.pair_labels) {
          golds.emplace_back(corpus::to_string(g.label));
          preds.emplace_back(corpus::to_string(label));
        }
        break;
      }
    }
  }

  metrics::ConfusionMatrix matrix;
  switch (task) {
    case EvalTask::Detection:
    case EvalTask::Identification:
      matrix = metrics::confusion(golds, preds, metrics::ternary_classes());
      break;
    case EvalTask::DetectionBinary:
      matrix = metrics::confusion(golds, preds, metrics::binary_classes());
      break;
    case EvalTask::Extraction:
      matrix = metrics::bio_confusion(gold_tags, pred_tags);
      break;
  }
  if (matrix.total() == 0)
    throw PipelineError("nothing to score for task " + std::string(to_string(task)));
  return metrics::make_task_report(std::string(to_string(task)), std::move(matrix));
}

}  // namespace concausal::pipeline

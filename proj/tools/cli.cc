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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "concausal/annotation/server.h"
#include "concausal/corpus/io.h"
#include "concausal/corpus/stats.h"
#include "concausal/metrics/report.h"
#include "concausal/pipeline/pipeline.h"
#include "concausal/reasoner/dsl.h"
#include "concausal/reasoner/extensions.h"
#include "concausal/reasoner/graph.h"

namespace concausal::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Flags shared by all subcommands plus each subcommand's own options.
struct RunConfig {
  std::string format;  // corpus format override
  std::string out;     // JSON report path (predictions for extract)
  std::uint64_t seed = 42;

  std::vector<std::string> inputs;
  std::string misaligned = "error";
  std::string mode = "ternary";
  unsigned threads = 0;
  std::string task = "all";
  std::string query;
  std::string inference = "skeptical";
  bool specificity = false;
  std::string policy = "support-majority";
  std::string data_dir = ".";
  std::string host = "127.0.0.1";
  int port = 8080;
};

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<corpus::Format> format_override(const RunConfig& config) {
  if (config.format.empty()) return std::nullopt;
  auto format = corpus::parse_format(config.format);
  if (!format) throw CommandError("unknown format '" + config.format + "'");
  return format;
}

corpus::Format format_of(const RunConfig& config, const fs::path& path) {
  if (auto f = format_override(config)) return *f;
  if (auto f = corpus::format_for_path(path)) return *f;
  throw CommandError("cannot infer the format of " + path.string() + "; pass --format");
}

corpus::ParseOptions parse_options(const RunConfig& config) {
  corpus::ParseOptions options;
  if (config.misaligned == "drop")
    options.misaligned = corpus::MisalignedSpans::Drop;
  else if (config.misaligned != "error")
    throw CommandError("--misaligned must be error or drop");
  return options;
}

std::vector<corpus::SentenceRecord> load(const RunConfig& config, const fs::path& path) {
  return corpus::load_corpus(path, format_of(config, path), parse_options(config));
}

void write_report(const RunConfig& config, const json& report) {
  if (config.out.empty()) return;
  corpus::write_file(config.out, report.dump(2) + "\n");
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const fs::path path = config.inputs.at(0);
  const auto raw = corpus::read_file(path);
  auto result = corpus::read_corpus(raw, format_of(config, path), parse_options(config));
  if (result.records.empty() && result.issues.empty())
    result.issues.push_back({"", 0, "no records"});

  json report{{"file", path.string()},
              {"records", result.records.size()},
              {"errors", json::array()}};
  for (const auto& issue : result.issues) {
    out << "error: " << issue.to_string() << '\n';
    report["errors"].push_back(
        {{"id", issue.record_id}, {"line", issue.line}, {"message", issue.message}});
  }
  out << path.string() << ": " << result.records.size() << " records, "
      << result.issues.size() << " errors\n";
  write_report(config, report);
  return result.issues.empty() ? 0 : 1;
}

json stats_json(const corpus::CorpusStats& stats) {
  json j;
  for (auto label : {corpus::CausalityLabel::Procausal, corpus::CausalityLabel::Concausal,
                     corpus::CausalityLabel::Uncausal}) {
    json row{{"total", stats.class_total(label)}};
    for (auto split : corpus::kAllSplits)
      row[std::string(corpus::to_string(split))] = stats.count(label, split);
    j[std::string(corpus::to_string(label))] = row;
  }
  json total{{"total", stats.total()}};
  for (auto split : corpus::kAllSplits)
    total[std::string(corpus::to_string(split))] = stats.split_total(split);
  j["total"] = total;
  return j;
}

int cmd_stats(const RunConfig& config, std::ostream& out) {
  corpus::CorpusStats stats;
  for (const auto& input : config.inputs) stats += corpus::corpus_stats(load(config, input));
  out << corpus::render_stats_table(stats);
  write_report(config, stats_json(stats));
  return 0;
}

int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto records = load(config, config.inputs.at(0));
  extractor::DetectionMode mode;
  if (config.mode == "binary")
    mode = extractor::DetectionMode::Binary;
  else if (config.mode == "ternary")
    mode = extractor::DetectionMode::Ternary;
  else
    throw CommandError("--mode must be binary or ternary");

  const extractor::Extractor extractor;
  const auto predictions = pipeline::run_extraction(extractor, records, mode, config.threads);
  const auto text = pipeline::serialize_predictions(predictions);
  if (config.out.empty())
    out << text;
  else
    corpus::write_file(config.out, text);

  std::array<std::size_t, 3> counts{};
  for (const auto& p : predictions) ++counts[static_cast<std::size_t>(p.record.label)];
  std::ostream& summary = config.out.empty() ? err : out;
  summary << "extracted " << predictions.size() << " records:";
  for (auto label : corpus::kAllLabels)
    summary << ' ' << corpus::to_string(label) << '=' << counts[static_cast<std::size_t>(label)];
  summary << '\n';
  return 0;
}

int cmd_eval(const RunConfig& config, std::ostream& out) {
  const auto gold = load(config, config.inputs.at(0));
  const auto predictions = pipeline::parse_predictions(corpus::read_file(config.inputs.at(1)));

  std::vector<pipeline::EvalTask> tasks;
  if (config.task == "all") {
    tasks.assign(pipeline::kAllTasks.begin(), pipeline::kAllTasks.end());
  } else {
    auto task = pipeline::parse_task(config.task);
    if (!task) throw CommandError("unknown task '" + config.task + "'");
    tasks.push_back(*task);
  }

  std::vector<metrics::TaskReport> reports;
  std::vector<std::string> skipped;
  for (auto task : tasks) {
    const bool nothing_to_score =
        task == pipeline::EvalTask::Identification &&
        std::none_of(gold.begin(), gold.end(),
                     [](const auto& r) { return !pipeline::gold_pairs(r).empty(); });
    if (nothing_to_score && config.task == "all") {
      skipped.emplace_back(pipeline::to_string(task));
      continue;
    }
    reports.push_back(pipeline::evaluate(gold, predictions, task));
  }
  out << metrics::render_report(reports);
  for (const auto& s : skipped) out << "\n(" << s << ": no gold pairs, skipped)\n";

  json report{{"gold", config.inputs.at(0)}, {"predictions", config.inputs.at(1)},
              {"tasks", json::array()}};
  for (const auto& r : reports) report["tasks"].push_back(metrics::to_json(r));
  write_report(config, report);
  return 0;
}

int cmd_reason(const RunConfig& config, std::ostream& out) {
  using namespace reasoner;
  const auto doc = parse_claims_dsl(corpus::read_file(config.inputs.at(0)));
  const auto mode = parse_mode(config.inference);
  if (!mode) throw CommandError("--inference must be credulous or skeptical");
  const auto policy = parse_policy(config.policy);
  if (!policy) throw CommandError("--policy must be support-majority or flag-only");

  const auto theory = doc.combined_theory();
  const auto extensions = compute_extensions(theory, config.specificity);
  json report;

  if (!config.query.empty()) {
    const auto query = parse_literal(config.query);
    const auto verdict = conclude(extensions, query, *mode);
    out << query.to_string() << ": " << to_string(verdict) << " (" << to_string(*mode)
        << (config.specificity ? ", specificity" : "") << ")\n";
    report["query"] = {{"literal", query.to_string()},
                       {"mode", to_string(*mode)},
                       {"specificity", config.specificity},
                       {"verdict", to_string(verdict)}};
  }

  out << extensions.size() << " extension(s)\n";
  report["extensions"] = json::array();
  for (std::size_t i = 0; i < extensions.size(); ++i) {
    std::vector<std::string> literals, defaults;
    for (const auto& l : extensions[i].literals) literals.push_back(l.to_string());
    for (auto d : extensions[i].generating_defaults)
      defaults.push_back(theory.defaults[d].to_string());
    out << "  E" << i + 1 << " = {";
    for (std::size_t k = 0; k < literals.size(); ++k) out << (k ? ", " : "") << literals[k];
    out << "}\n";
    for (const auto& d : defaults) out << "      via " << d << '\n';
    report["extensions"].push_back({{"literals", literals}, {"defaults", defaults}});
  }

  if (!doc.claims.empty()) {
    CausalGraph graph;
    for (const auto& claim : doc.claims) graph.assert_claim(claim);
    const auto resolved = resolve(graph, *policy);
    out << resolved.conflicts.size() << " conflict(s) [" << to_string(*policy) << "]\n";
    for (const auto& c : resolved.conflicts) {
      out << "  ";
      for (std::size_t k = 0; k < c.conflict.pro_path.size(); ++k)
        out << (k ? " -> " : "") << c.conflict.pro_path[k];
      out << "  vs  " << c.conflict.con_edge.to_string() << "  support " << c.pro_support
          << ":" << c.con_support << "  " << to_string(c.resolution) << '\n';
    }
    const auto implied = derive_implied_con(doc.claims);
    if (!implied.empty()) {
      out << "implied:";
      for (const auto& c : implied) out << ' ' << c.to_string();
      out << '\n';
    }
    report["graph"] = resolved.to_json();
    report["implied"] = json::array();
    for (const auto& c : implied) report["implied"].push_back(c.to_string());
  }
  write_report(config, report);
  return 0;
}

// One label per line, optionally "id<TAB>label".
std::vector<std::pair<std::string, std::string>> read_labels(const fs::path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(corpus::read_file(path));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++n;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      out.emplace_back(std::to_string(n), line);
    else
      out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

int cmd_agreement(const RunConfig& config, std::ostream& out) {
  const auto a = read_labels(config.inputs.at(0));
  const auto b = read_labels(config.inputs.at(1));
  if (a.size() != b.size())
    throw CommandError("length mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + " labels");
  std::vector<std::string> la, lb;
  json disagreements = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first)
      throw CommandError("line " + std::to_string(i + 1) + ": ids differ ('" + a[i].first +
                         "' vs '" + b[i].first + "')");
    la.push_back(a[i].second);
    lb.push_back(b[i].second);
    if (a[i].second != b[i].second) disagreements.push_back(a[i].first);
  }
  const auto result = metrics::cohen_kappa(la, lb);
  char line[128];
  std::snprintf(line, sizeof line, "items %zu  p_o %.4f  p_e %.4f  kappa %.4f\n", result.items,
                result.observed, result.expected, result.kappa);
  out << line;
  auto report = metrics::to_json(result);
  report["disagreements"] = disagreements;
  write_report(config, report);
  return 0;
}

annotation::AnnotationServer* g_server = nullptr;

int cmd_serve(const RunConfig& config, std::ostream& out) {
  auto store = annotation::AnnotationStore::open(config.data_dir);
  annotation::AnnotationServer server(store);
  const int port = server.bind(config.host, config.port);
  out << "serving " << store.item_count() << " items for " << store.annotators().size()
      << " annotators on http://" << config.host << ':' << port << std::endl;
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  server.listen();
  g_server = nullptr;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Extract, reason over and evaluate pro-, con- and uncausal claims", "concausal"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", config.format, "Corpus format: unicausal-csv or claims-jsonl")
      ->check(CLI::IsMember({"unicausal-csv", "claims-jsonl", "csv", "jsonl"}));
  app.add_option("--out", config.out, "Write the JSON report (predictions for extract) here");
  app.add_option("--seed", config.seed, "Seed for any sampling");

  auto* validate = app.add_subcommand("validate", "Check a corpus file");
  validate->add_option("corpus", config.inputs, "Corpus file")->required()->expected(1);
  validate->add_option("--misaligned", config.misaligned, "Misaligned spans: error or drop");

  auto* stats = app.add_subcommand("stats", "Class counts per split");
  stats->add_option("corpus", config.inputs, "Corpus files")->required();
  stats->add_option("--misaligned", config.misaligned, "Misaligned spans: error or drop");

  auto* extract = app.add_subcommand("extract", "Run the rule extractor");
  extract->add_option("corpus", config.inputs, "Corpus file")->required()->expected(1);
  extract->add_option("--mode", config.mode, "binary or ternary")
      ->check(CLI::IsMember({"binary", "ternary"}));
  extract->add_option("--threads", config.threads, "Worker threads (0 = all cores)");

  auto* eval = app.add_subcommand("eval", "Score predictions against gold");
  eval->add_option("files", config.inputs, "Gold corpus and predictions file")
      ->required()
      ->expected(2);
  eval->add_option("--task", config.task,
                   "detection, detection-binary, extraction, identification or all");

  auto* reason = app.add_subcommand("reason", "Query a claims/default theory");
  reason->add_option("dsl", config.inputs, "Claims DSL file")->required()->expected(1);
  reason->add_option("--query", config.query, "Literal to decide, e.g. !B");
  reason->add_option("--inference", config.inference, "credulous or skeptical");
  reason->add_flag("--specificity", config.specificity, "Prefer more specific defaults");
  reason->add_option("--policy", config.policy, "support-majority or flag-only");

  auto* agreement = app.add_subcommand("agreement", "Cohen's kappa of two label files");
  agreement->add_option("files", config.inputs, "Label files A and B")->required()->expected(2);

  auto* serve = app.add_subcommand("serve", "Run the annotation service");
  serve->add_option("--port", config.port, "TCP port (0 = any free port)");
  serve->add_option("--host", config.host, "Bind address");
  serve->add_option("--data-dir", config.data_dir,
                    "Directory with items.csv|items.jsonl, annotators.txt, events.jsonl");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*validate) return cmd_validate(config, out);
    if (*stats) return cmd_stats(config, out);
    if (*extract) return cmd_extract(config, out, err);
    if (*eval) return cmd_eval(config, out);
    if (*reason) return cmd_reason(config, out);
    if (*agreement) return cmd_agreement(config, out);
    if (*serve) return cmd_serve(config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace concausal::cli

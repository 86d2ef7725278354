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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "concausal/corpus/record.h"

namespace concausal::corpus {

// unicausal-csv
//   Header row followed by one row per sentence-relation:
//     corpus,doc_id,sent_id,split,origin,text,seq_label,pair_label,
//     causality_label,relation,spans
//   doc_id/sent_id: the record id split at its last underscore
//     ("train_04_257_234" -> "train_04_257", "234"); ids without a usable
//     underscore keep sent_id empty.
//   seq_label: space-separated BIO-CE tags over the tokenized text for the
//     row's relation; empty when the row has no cause/effect span.
//   pair_label: 1 when the row carries a cause/effect span, else 0.
//   relation: the relation index of the row.
//   spans: exact byte offsets, "C:start:end;E:start:end;S:start:end".
//     When empty but seq_label is present, spans are decoded from the tags.
//   A sentence with several relations spans contiguous rows that repeat
//   every sentence-level column.
//
// claims-jsonl
//   One JSON object per line:
//     {"id","split","origin","text","label",
//      "spans":[{"role","start","end","relation"}]}
//   Unknown keys are ignored on read.
enum class Format { UnicausalCsv, ClaimsJsonl };

std::string_view to_string(Format format);
std::optional<Format> parse_format(std::string_view name);
// ".csv" -> unicausal-csv, ".jsonl"/".json" -> claims-jsonl.
std::optional<Format> format_for_path(const std::filesystem::path& path);

// How the reader treats a span that does not begin and end on token
// boundaries.
enum class MisalignedSpans { Error, Drop };

struct ParseOptions {
  MisalignedSpans misaligned = MisalignedSpans::Error;
};

struct ParseResult {
  std::vector<SentenceRecord> records;
  std::vector<Issue> issues;
};

// Lenient reader: malformed rows are reported and skipped, and every
// validation issue is collected.
ParseResult read_corpus(std::string_view raw, Format format,
                        const ParseOptions& options = {});

// Strict reader: throws CorpusError carrying the first issue.
std::vector<SentenceRecord> parse_corpus(std::string_view raw, Format format,
                                         const ParseOptions& options = {});

std::string serialize_corpus(std::span<const SentenceRecord> records,
                             Format format);

nlohmann::ordered_json record_to_json(const SentenceRecord& record);
// Throws CorpusError on missing or mistyped fields.
SentenceRecord record_from_json(const nlohmann::json& object);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Reads and strictly parses a corpus file; format defaults to the one
// implied by the extension.
std::vector<SentenceRecord> load_corpus(const std::filesystem::path& path,
                                        std::optional<Format> format = {},
                                        const ParseOptions& options = {});

// RFC 4180 helpers shared with other readers.
std::vector<std::vector<std::string>> parse_csv(std::string_view raw,
                                                std::vector<std::size_t>* lines = nullptr);
std::string csv_escape(std::string_view field);

}  // namespace concausal::corpus

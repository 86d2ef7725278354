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

#include "concausal/corpus/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "concausal/corpus/bio.h"
#include "concausal/corpus/tokenizer.h"

namespace concausal::corpus {

namespace {

constexpr std::string_view kCorpusName = "ccnc";

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "corpus", "doc_id",          "sent_id",  "split", "origin", "text",
      "seq_label", "pair_label", "causality_label", "relation", "spans"};
  return columns;
}

std::pair<std::string, std::string> split_id(const std::string& id) {
  const auto cut = id.rfind('_');
  if (cut == std::string::npos || cut == 0 || cut + 1 == id.size())
    return {id, ""};
  return {id.substr(0, cut), id.substr(cut + 1)};
}

char role_letter(SpanRole role) {
  switch (role) {
    case SpanRole::Cause: return 'C';
    case SpanRole::Effect: return 'E';
    case SpanRole::Signal: return 'S';
  }
  return 'C';
}

std::string format_spans(std::span<const Span> spans) {
  std::string out;
  for (const auto& span : spans) {
    if (!out.empty()) out += ';';
    out += role_letter(span.role);
    out += ':' + std::to_string(span.start) + ':' + std::to_string(span.end);
  }
  return out;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view text) {
  Int value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto pos = text.find(sep, begin);
    parts.push_back(text.substr(begin, pos == std::string_view::npos
                                           ? std::string_view::npos
                                           : pos - begin));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return parts;
}

// Parses "C:0:3;E:4:8". Returns nullopt with a reason on malformed input.
std::optional<std::vector<Span>> parse_spans(std::string_view text, int relation,
                                             std::string& reason) {
  std::vector<Span> spans;
  if (text.empty()) return spans;
  for (auto item : split_on(text, ';')) {
    auto parts = split_on(item, ':');
    if (parts.size() != 3) {
      reason = "malformed span '" + std::string(item) + "'";
      return std::nullopt;
    }
    auto role = parse_role(parts[0]);
    auto start = parse_int<std::size_t>(parts[1]);
    auto end = parse_int<std::size_t>(parts[2]);
    if (!role || !start || !end) {
      reason = "malformed span '" + std::string(item) + "'";
      return std::nullopt;
    }
    spans.push_back({*role, *start, *end, relation});
  }
  return spans;
}

// Applies the misalignment policy, then per-record validation.
void finish_records(std::vector<SentenceRecord>& records,
                    const std::vector<std::size_t>& lines,
                    const ParseOptions& options, std::vector<Issue>& issues) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& record = records[i];
    const auto tokens = tokenize(record.text);
    std::vector<Span> kept;
    for (const auto& span : record.spans) {
      const bool in_bounds = span.start < span.end && span.end <= record.text.size();
      if (!in_bounds || aligned_to_tokens(tokens, span)) {
        kept.push_back(span);  // bounds problems are reported by validation
        continue;
      }
      if (options.misaligned == MisalignedSpans::Drop) continue;
      issues.push_back({record.id, lines[i],
                        std::string(to_string(span.role)) + " span [" +
                            std::to_string(span.start) + "," +
                            std::to_string(span.end) +
                            ") is not aligned to token boundaries"});
      kept.push_back(span);
    }
    record.spans = std::move(kept);
    canonicalize(record);

    auto found = validate_record(record, lines[i]);
    issues.insert(issues.end(), found.begin(), found.end());
    if (!record.id.empty() && !seen.insert(record.id).second)
      issues.push_back({record.id, lines[i], "duplicate id '" + record.id + "'"});
  }
}

ParseResult read_csv(std::string_view raw, const ParseOptions& options) {
  ParseResult result;
  std::vector<std::size_t> row_lines;
  const auto rows = parse_csv(raw, &row_lines);
  if (rows.empty()) {
    result.issues.push_back({"", 0, "missing header row"});
    return result;
  }

  const auto& header = rows.front();
  std::vector<int> column(csv_columns().size(), -1);
  for (std::size_t c = 0; c < csv_columns().size(); ++c) {
    auto it = std::find(header.begin(), header.end(), csv_columns()[c]);
    if (it == header.end()) {
      result.issues.push_back({"", row_lines.front(),
                               "header is missing column '" + csv_columns()[c] + "'"});
      continue;
    }
    column[c] = static_cast<int>(it - header.begin());
  }
  if (!result.issues.empty()) return result;

  enum Col { kCorpus, kDocId, kSentId, kSplit, kOrigin, kText, kSeqLabel,
             kPairLabel, kLabel, kRelation, kSpans };

  std::vector<std::size_t> record_lines;
  int last_relation = -1;
  bool last_row_ok = false;

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t line = row_lines[r];
    auto fail = [&](const std::string& id, std::string message) {
      result.issues.push_back({id, line, std::move(message)});
      last_row_ok = false;
    };
    if (row.size() != header.size()) {
      fail("", "expected " + std::to_string(header.size()) + " fields, found " +
                   std::to_string(row.size()));
      continue;
    }
    auto field = [&](Col c) -> const std::string& { return row[column[c]]; };

    std::string id = field(kDocId);
    if (!field(kSentId).empty()) {
      if (id.empty()) {
        fail("", "sent_id without doc_id");
        continue;
      }
      id += "_" + field(kSentId);
    }
    auto split = parse_split(field(kSplit));
    if (!split) {
      fail(id, "unknown split '" + field(kSplit) + "'");
      continue;
    }
    auto origin = parse_origin(field(kOrigin));
    if (!origin) {
      fail(id, "unknown origin '" + field(kOrigin) + "'");
      continue;
    }
    auto label = parse_label(field(kLabel));
    if (!label) {
      fail(id, "unknown label '" + field(kLabel) + "'");
      continue;
    }
    auto relation = parse_int<int>(field(kRelation));
    if (!relation || *relation < 0) {
      fail(id, "invalid relation index '" + field(kRelation) + "'");
      continue;
    }
    const std::string& pair_label = field(kPairLabel);
    if (!pair_label.empty() && pair_label != "0" && pair_label != "1") {
      fail(id, "invalid pair_label '" + pair_label + "'");
      continue;
    }

    std::string reason;
    auto spans = parse_spans(field(kSpans), *relation, reason);
    if (!spans) {
      fail(id, reason);
      continue;
    }

    const std::string& text = field(kText);
    const std::string& seq_label = field(kSeqLabel);
    if (!seq_label.empty()) {
      try {
        const auto tokens = tokenize(text);
        const auto tags = split_tags(seq_label);
        if (tags.size() != tokens.size()) {
          fail(id, "seq_label has " + std::to_string(tags.size()) +
                       " tags for " + std::to_string(tokens.size()) + " tokens");
          continue;
        }
        if (spans->empty()) {
          *spans = bio_to_spans(tokens, tags, *relation);
        } else {
          std::vector<Span> cause_effect;
          for (const auto& s : *spans)
            if (s.role != SpanRole::Signal) cause_effect.push_back(s);
          if (spans_to_bio(tokens, cause_effect) != tags) {
            fail(id, "seq_label disagrees with spans");
            continue;
          }
        }
      } catch (const BioError& e) {
        fail(id, std::string("seq_label: ") + e.what());
        continue;
      }
    }

    if (last_row_ok && !result.records.empty() && result.records.back().id == id) {
      auto& current = result.records.back();
      if (current.text != text || current.label != *label ||
          current.split != *split || current.origin != *origin ||
          *relation <= last_relation) {
        fail(id, "duplicate id '" + id + "'");
        continue;
      }
      current.spans.insert(current.spans.end(), spans->begin(), spans->end());
      last_relation = *relation;
      continue;
    }

    SentenceRecord record;
    record.id = id;
    record.split = *split;
    record.origin = *origin;
    record.text = text;
    record.label = *label;
    record.spans = std::move(*spans);
    result.records.push_back(std::move(record));
    record_lines.push_back(line);
    last_relation = *relation;
    last_row_ok = true;
  }

  finish_records(result.records, record_lines, options, result.issues);
  return result;
}

ParseResult read_jsonl(std::string_view raw, const ParseOptions& options) {
  ParseResult result;
  std::vector<std::size_t> record_lines;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= raw.size()) {
    auto end = raw.find('\n', begin);
    if (end == std::string_view::npos) end = raw.size();
    std::string_view line = raw.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    begin = end + 1;

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == raw.size()) break;
      continue;
    }
    try {
      const auto object = nlohmann::json::parse(line);
      result.records.push_back(record_from_json(object));
      record_lines.push_back(line_no);
    } catch (const nlohmann::json::exception& e) {
      result.issues.push_back({"", line_no, std::string("malformed JSON: ") + e.what()});
    } catch (const CorpusError& e) {
      result.issues.push_back({"", line_no, e.what()});
    }
    if (end == raw.size()) break;
  }
  finish_records(result.records, record_lines, options, result.issues);
  return result;
}

std::string dump_strict(const nlohmann::ordered_json& value) {
  try {
    return value.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("cannot encode record: ") + e.what());
  }
}

}  // namespace

std::string_view to_string(Format format) {
  return format == Format::UnicausalCsv ? "unicausal-csv" : "claims-jsonl";
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "unicausal-csv" || name == "csv") return Format::UnicausalCsv;
  if (name == "claims-jsonl" || name == "jsonl") return Format::ClaimsJsonl;
  return std::nullopt;
}

std::optional<Format> format_for_path(const std::filesystem::path& path) {
  const auto ext = to_lower(path.extension().string());
  if (ext == ".csv") return Format::UnicausalCsv;
  if (ext == ".jsonl" || ext == ".json") return Format::ClaimsJsonl;
  return std::nullopt;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view raw,
                                                std::vector<std::size_t>* lines) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool row_has_content = false;
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (row_has_content || !row.empty()) {
      end_field();
      rows.push_back(std::move(row));
      if (lines) lines->push_back(row_line);
    }
    row.clear();
    row_has_content = false;
  };

  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < raw.size() && raw[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!row_has_content) row_line = line;
        if (!field_started) {
          in_quotes = true;
          field_started = true;
          row_has_content = true;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        if (!row_has_content) row_line = line;
        row_has_content = true;
        end_field();
        break;
      case '\r':
        if (i + 1 < raw.size() && raw[i + 1] == '\n') break;
        field.push_back(c);
        break;
      case '\n':
        end_row();
        ++line;
        row_line = line;
        break;
      default:
        if (!row_has_content) row_line = line;
        field.push_back(c);
        field_started = true;
        row_has_content = true;
    }
  }
  if (in_quotes) throw CorpusError("line " + std::to_string(row_line) +
                                   ": unterminated quoted field");
  end_row();
  return rows;
}

std::string csv_escape(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json record_to_json(const SentenceRecord& record) {
  nlohmann::ordered_json object;
  object["id"] = record.id;
  object["split"] = to_string(record.split);
  object["origin"] = to_string(record.origin);
  object["text"] = record.text;
  object["label"] = to_string(record.label);
  auto spans = nlohmann::ordered_json::array();
  for (const auto& span : record.spans) {
    spans.push_back({{"role", to_string(span.role)},
                     {"start", span.start},
                     {"end", span.end},
                     {"relation", span.relation}});
  }
  object["spans"] = std::move(spans);
  return object;
}

SentenceRecord record_from_json(const nlohmann::json& object) {
  if (!object.is_object()) throw CorpusError("expected a JSON object");
  auto text_field = [&](const char* key, bool required) -> std::optional<std::string> {
    auto it = object.find(key);
    if (it == object.end()) {
      if (required) throw CorpusError(std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    if (!it->is_string()) throw CorpusError(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
  };

  SentenceRecord record;
  record.id = *text_field("id", true);
  record.text = *text_field("text", true);
  const auto label = *text_field("label", true);
  auto parsed_label = parse_label(label);
  if (!parsed_label) throw CorpusError("unknown label '" + label + "'");
  record.label = *parsed_label;

  const auto split = *text_field("split", true);
  auto parsed_split = parse_split(split);
  if (!parsed_split) throw CorpusError("unknown split '" + split + "'");
  record.split = *parsed_split;

  if (auto origin = text_field("origin", false)) {
    auto parsed = parse_origin(*origin);
    if (!parsed) throw CorpusError("unknown origin '" + *origin + "'");
    record.origin = *parsed;
  }

  if (auto it = object.find("spans"); it != object.end()) {
    if (!it->is_array()) throw CorpusError("field 'spans' must be an array");
    for (const auto& item : *it) {
      if (!item.is_object() || !item.contains("role") || !item.contains("start") ||
          !item.contains("end"))
        throw CorpusError("span needs role, start and end");
      if (!item["role"].is_string() || !item["start"].is_number_unsigned() ||
          !item["end"].is_number_unsigned())
        throw CorpusError("span fields have wrong types");
      auto role = parse_role(item["role"].get<std::string>());
      if (!role) throw CorpusError("unknown span role '" + item["role"].get<std::string>() + "'");
      Span span;
      span.role = *role;
      span.start = item["start"].get<std::size_t>();
      span.end = item["end"].get<std::size_t>();
      if (item.contains("relation")) {
        if (!item["relation"].is_number_integer())
          throw CorpusError("span relation must be an integer");
        span.relation = item["relation"].get<int>();
      }
      record.spans.push_back(span);
    }
  }
  return record;
}

ParseResult read_corpus(std::string_view raw, Format format,
                        const ParseOptions& options) {
  return format == Format::UnicausalCsv ? read_csv(raw, options)
                                        : read_jsonl(raw, options);
}

std::vector<SentenceRecord> parse_corpus(std::string_view raw, Format format,
                                         const ParseOptions& options) {
  auto result = read_corpus(raw, format, options);
  if (!result.issues.empty()) throw CorpusError(result.issues.front().to_string());
  return std::move(result.records);
}

std::string serialize_corpus(std::span<const SentenceRecord> records,
                             Format format) {
  std::string out;
  if (format == Format::ClaimsJsonl) {
    for (const auto& record : records) {
      SentenceRecord copy = record;
      canonicalize(copy);
      out += dump_strict(record_to_json(copy));
      out += '\n';
    }
    return out;
  }

  const auto& columns = csv_columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out += ',';
    out += columns[c];
  }
  out += '\n';

  for (const auto& original : records) {
    SentenceRecord record = original;
    canonicalize(record);
    const auto tokens = tokenize(record.text);
    const auto [doc_id, sent_id] = split_id(record.id);

    auto relations = relation_indices(record);
    if (relations.empty()) relations.push_back(0);
    for (int relation : relations) {
      const auto spans = relation_spans(record, relation);
      std::vector<Span> cause_effect;
      for (const auto& s : spans)
        if (s.role != SpanRole::Signal) cause_effect.push_back(s);

      std::string seq_label;
      if (!cause_effect.empty()) {
        try {
          seq_label = join_tags(spans_to_bio(tokens, cause_effect));
        } catch (const BioError&) {
          seq_label.clear();  // offsets in the spans column stay authoritative
        }
      }

      const std::vector<std::string> fields = {
          std::string(kCorpusName), doc_id, sent_id,
          std::string(to_string(record.split)),
          std::string(to_string(record.origin)), record.text, seq_label,
          cause_effect.empty() ? "0" : "1",
          std::string(to_string(record.label)), std::to_string(relation),
          format_spans(spans)};
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (c > 0) out += ',';
        out += csv_escape(fields[c]);
      }
      out += '\n';
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CorpusError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw CorpusError("write failed for " + path.string());
}

std::vector<SentenceRecord> load_corpus(const std::filesystem::path& path,
                                        std::optional<Format> format,
                                        const ParseOptions& options) {
  if (!format) format = format_for_path(path);
  if (!format)
    throw CorpusError("cannot infer corpus format of " + path.string() +
                      "; pass --format");
  return parse_corpus(read_file(path), *format, options);
}

}  // namespace concausal::corpus

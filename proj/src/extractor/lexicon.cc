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

#include "concausal/extractor/lexicon.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "concausal/corpus/io.h"
#include "concausal/corpus/tokenizer.h"

namespace concausal::extractor {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 12> kCategoryNames = {{
    {Category::DirectNegation, "DirectNegation"},
    {Category::NegatedContext, "NegatedContext"},
    {Category::LackOfCounterfactuality, "LackOfCounterfactuality"},
    {Category::LackOfEffect, "LackOfEffect"},
    {Category::ImplicitLackOfEffect, "ImplicitLackOfEffect"},
    {Category::NegativeCausation, "NegativeCausation"},
    {Category::UsualInverseEffect, "UsualInverseEffect"},
    {Category::Coincidence, "Coincidence"},
    {Category::TemporalOrder, "TemporalOrder"},
    {Category::Contradiction, "Contradiction"},
    {Category::SpatialRelation, "SpatialRelation"},
    {Category::ProcausalSignal, "ProcausalSignal"},
}};

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const auto tab = line.find('\t', begin);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      break;
    }
    fields.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
  return fields;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\r')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

std::string_view to_string(Category category) {
  for (const auto& [value, name] : kCategoryNames)
    if (value == category) return name;
  return "ProcausalSignal";
}

std::optional<Category> parse_category(std::string_view name) {
  for (const auto& [value, known] : kCategoryNames)
    if (known == name) return value;
  return std::nullopt;
}

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::Pro ? "pro" : "con";
}

std::optional<Polarity> parse_polarity(std::string_view name) {
  if (name == "pro") return Polarity::Pro;
  if (name == "con") return Polarity::Con;
  return std::nullopt;
}

std::vector<CueElement> compile_cue(std::string_view pattern) {
  using Kind = CueElement::Kind;
  std::vector<CueElement> elements;
  bool seen_cause = false;
  bool seen_effect = false;

  for (std::string word : split_words(pattern)) {
    CueElement element;
    if (word.size() > 1 && word.back() == '?') {
      element.optional = true;
      word.pop_back();
    }
    if (word == "{A}") {
      if (seen_cause) throw LexiconError("{A} appears twice in '" + std::string(pattern) + "'");
      seen_cause = true;
      element.kind = Kind::CauseSlot;
    } else if (word == "{B}") {
      if (seen_effect) throw LexiconError("{B} appears twice in '" + std::string(pattern) + "'");
      seen_effect = true;
      element.kind = Kind::EffectSlot;
    } else if (word == "*") {
      element.kind = Kind::AnyToken;
    } else if (word == "...") {
      element.kind = Kind::Gap;
    } else if (word == "[NEG]") {
      element.kind = Kind::Negation;
    } else {
      element.kind = Kind::Literal;
      std::size_t begin = 0;
      while (begin <= word.size()) {
        auto bar = word.find('|', begin);
        if (bar == std::string::npos) bar = word.size();
        std::string alternative = corpus::to_lower(word.substr(begin, bar - begin));
        if (alternative.empty())
          throw LexiconError("empty alternative in '" + word + "'");
        element.alternatives.push_back(std::move(alternative));
        begin = bar + 1;
      }
    }
    if (element.optional && element.kind != Kind::Literal && element.kind != Kind::Negation)
      throw LexiconError("only literals and [NEG] may be optional: '" + word + "?'");
    elements.push_back(std::move(element));
  }

  if (elements.empty()) throw LexiconError("empty cue pattern");
  const bool anchored = std::any_of(elements.begin(), elements.end(), [](const CueElement& e) {
    return (e.kind == Kind::Literal || e.kind == Kind::Negation) && !e.optional;
  });
  if (!anchored)
    throw LexiconError("pattern '" + std::string(pattern) +
                       "' needs at least one required literal or [NEG]");
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    const bool a_var = elements[i].is_slot() || elements[i].kind == Kind::Gap;
    const bool b_var = elements[i + 1].is_slot() || elements[i + 1].kind == Kind::Gap;
    if (a_var && b_var)
      throw LexiconError("adjacent slots or gaps in '" + std::string(pattern) + "'");
  }
  if (elements.front().kind == Kind::Gap || elements.back().kind == Kind::Gap)
    throw LexiconError("pattern '" + std::string(pattern) + "' cannot start or end with ...");
  return elements;
}

Lexicon Lexicon::parse(std::string_view text, std::string_view source) {
  Lexicon lexicon;
  std::map<Category, int> per_category;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const auto where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    const auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw LexiconError(where + "expected 4 tab-separated fields, found " +
                         std::to_string(fields.size()));

    PatternRule rule;
    auto category = parse_category(trim(fields[0]));
    if (!category) throw LexiconError(where + "unknown category '" + std::string(fields[0]) + "'");
    rule.category = *category;
    rule.cue = std::string(trim(fields[1]));
    try {
      rule.elements = compile_cue(rule.cue);
    } catch (const LexiconError& e) {
      throw LexiconError(where + e.what());
    }
    auto polarity = parse_polarity(trim(fields[2]));
    if (!polarity) throw LexiconError(where + "unknown polarity '" + std::string(fields[2]) + "'");
    rule.polarity = *polarity;
    const auto priority_text = trim(fields[3]);
    auto [ptr, ec] = std::from_chars(priority_text.data(),
                                     priority_text.data() + priority_text.size(),
                                     rule.priority);
    if (ec != std::errc() || ptr != priority_text.data() + priority_text.size())
      throw LexiconError(where + "invalid priority '" + std::string(priority_text) + "'");
    if (rule.category == Category::NegativeCausation && rule.polarity != Polarity::Pro)
      throw LexiconError(where + "negative causation rules must be procausal");

    rule.id = std::string(to_string(rule.category)) + "#" +
              std::to_string(++per_category[rule.category]);
    lexicon.rules_.push_back(std::move(rule));
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = corpus::read_file(path);
  } catch (const corpus::CorpusError& e) {
    throw LexiconError(e.what());
  }
  return parse(text, path.filename().string());
}

Lexicon Lexicon::load_default() { return load(default_lexicon_path()); }

const PatternRule* Lexicon::find(std::string_view id) const {
  for (const auto& rule : rules_)
    if (rule.id == id) return &rule;
  return nullptr;
}

std::vector<Category> Lexicon::missing_categories() const {
  std::vector<Category> missing;
  for (auto category : kConcausalFamilies) {
    const bool covered = std::any_of(rules_.begin(), rules_.end(), [&](const PatternRule& r) {
      return r.category == category;
    });
    if (!covered) missing.push_back(category);
  }
  return missing;
}

std::filesystem::path default_lexicon_path() {
  if (const char* override_path = std::getenv("CONCAUSAL_LEXICON"))
    return override_path;
  return std::filesystem::path(CONCAUSAL_DATA_DIR) / "lexicon.tsv";
}

}  // namespace concausal::extractor

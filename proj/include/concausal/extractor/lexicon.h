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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace concausal::extractor {

// Concausal expression families plus the plain procausal signals.
enum class Category {
  DirectNegation,
  NegatedContext,
  LackOfCounterfactuality,
  LackOfEffect,
  ImplicitLackOfEffect,
  NegativeCausation,
  UsualInverseEffect,
  Coincidence,
  TemporalOrder,
  Contradiction,
  SpatialRelation,
  ProcausalSignal,
};

inline constexpr std::array<Category, 11> kConcausalFamilies = {
    Category::DirectNegation,       Category::NegatedContext,
    Category::LackOfCounterfactuality, Category::LackOfEffect,
    Category::ImplicitLackOfEffect, Category::NegativeCausation,
    Category::UsualInverseEffect,   Category::Coincidence,
    Category::TemporalOrder,        Category::Contradiction,
    Category::SpatialRelation};

std::string_view to_string(Category category);
std::optional<Category> parse_category(std::string_view name);

enum class Polarity { Pro, Con };
std::string_view to_string(Polarity polarity);
std::optional<Polarity> parse_polarity(std::string_view name);

// One element of a compiled cue pattern.
struct CueElement {
  enum class Kind {
    Literal,     // one token out of `alternatives` (case-insensitive)
    CauseSlot,   // {A}: one or more tokens bound as the cause
    EffectSlot,  // {B}: one or more tokens bound as the effect
    AnyToken,    // *: exactly one token
    Gap,         // ...: zero or more tokens
    Negation,    // [NEG]: one negation cue
  };
  Kind kind = Kind::Literal;
  std::vector<std::string> alternatives;
  bool optional = false;

  bool is_slot() const { return kind == Kind::CauseSlot || kind == Kind::EffectSlot; }
};

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pattern syntax, tokens separated by spaces:
//   word|other   literal alternatives
//   {A} {B}      cause and effect slots (each at most once)
//   *            any single token
//   ...          any run of tokens inside the sentence
//   [NEG]        a negation cue
//   suffix ?     makes a literal or [NEG] optional
std::vector<CueElement> compile_cue(std::string_view pattern);

struct PatternRule {
  std::string id;  // "<Category>#<n>", n counting rules per category
  Category category = Category::ProcausalSignal;
  std::string cue;
  std::vector<CueElement> elements;
  Polarity polarity = Polarity::Pro;
  int priority = 0;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Line format: category <TAB> cue-pattern <TAB> polarity <TAB> priority.
  // Blank lines and lines starting with '#' are skipped. Negative
  // causation rules must be procausal.
  static Lexicon parse(std::string_view text, std::string_view source = "<lexicon>");
  static Lexicon load(const std::filesystem::path& path);
  // The lexicon shipped in data/lexicon.tsv.
  static Lexicon load_default();

  const std::vector<PatternRule>& rules() const { return rules_; }
  const PatternRule* find(std::string_view id) const;

  // Concausal expression families without any rule.
  std::vector<Category> missing_categories() const;

 private:
  std::vector<PatternRule> rules_;
};

std::filesystem::path default_lexicon_path();

}  // namespace concausal::extractor

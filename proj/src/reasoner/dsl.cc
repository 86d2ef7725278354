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

#include "concausal/reasoner/dsl.h"

#include <algorithm>
#include <cctype>
#include <optional>

namespace concausal::reasoner {

DslError::DslError(const std::string& message, std::size_t line, std::size_t column)
    : ReasonerError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Theory ClaimsDocument::combined_theory() const {
  Theory out = theory;
  out.merge(claims_to_rules(claims));
  return out;
}

namespace {

enum class Tok { Symbol, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const unsigned char c = text_[pos_];
    if (std::isalnum(c) || c == '_' || c >= 0x80) {
      t.kind = Tok::Symbol;
      while (pos_ < text_.size()) {
        const unsigned char d = text_[pos_];
        if (!(std::isalnum(d) || d == '_' || d >= 0x80)) break;
        t.text += static_cast<char>(d);
        advance();
      }
      return t;
    }
    if (c == '"') {
      t.kind = Tok::String;
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        t.text += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size() || text_[pos_] != '"')
        throw DslError("unterminated string", t.line, t.column);
      advance();
      return t;
    }
    t.kind = Tok::Punct;
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      t.text = "->";
      advance();
      advance();
      return t;
    }
    if (std::string_view(".,&:/!()[]").find(static_cast<char>(c)) == std::string_view::npos)
      throw DslError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                     t.line, t.column);
    t.text = static_cast<char>(c);
    advance();
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  ClaimsDocument parse() {
    while (current_.kind != Tok::End) statement();
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& message, const Token& at) {
    throw DslError(message, at.line, at.column);
  }
  [[noreturn]] void fail(const std::string& message) { fail(message, current_); }

  void shift() { current_ = lexer_.next(); }

  bool is_punct(std::string_view p) const {
    return current_.kind == Tok::Punct && current_.text == p;
  }

  void expect(std::string_view p) {
    if (!is_punct(p))
      fail("expected '" + std::string(p) + "', found " + describe(current_));
    shift();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::String: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  std::string symbol(std::string_view what) {
    if (current_.kind != Tok::Symbol || !is_valid_atom(current_.text))
      fail("expected " + std::string(what) + ", found " + describe(current_));
    std::string s = current_.text;
    shift();
    return s;
  }

  Literal literal() {
    bool negated = false;
    while (is_punct("!")) {
      negated = !negated;
      shift();
    }
    return Literal(symbol("literal"), negated);
  }

  bool starts_literal() const {
    return current_.kind == Tok::Symbol || is_punct("!");
  }

  // Possibly empty; stops before any token that cannot continue it.
  Conjunction conjunction() {
    Conjunction out;
    if (!starts_literal()) return out;
    out.push_back(literal());
    while (is_punct("&") || is_punct(",")) {
      shift();
      out.push_back(literal());
    }
    return out;
  }

  void statement() {
    const Token head = current_;
    if (head.kind != Tok::Symbol) fail("expected a statement, found " + describe(head));
    const std::string keyword = head.text;
    shift();

    if (keyword == "fact") {
      const Token at = current_;
      auto lit = literal();
      if (std::find(doc_.theory.facts.begin(), doc_.theory.facts.end(), lit) !=
          doc_.theory.facts.end())
        fail("duplicate fact " + lit.to_string(), at);
      doc_.theory.facts.push_back(std::move(lit));
    } else if (keyword == "rule") {
      Implication imp;
      imp.body = conjunction();
      expect("->");
      imp.head = literal();
      doc_.theory.implications.push_back(std::move(imp));
    } else if (keyword == "default") {
      DefaultRule rule;
      rule.prerequisite = conjunction();
      expect(":");
      rule.justifications.push_back(literal());
      while (is_punct(",")) {
        shift();
        rule.justifications.push_back(literal());
      }
      expect("/");
      rule.consequent = literal();
      doc_.theory.defaults.push_back(std::move(rule));
    } else if (auto polarity = parse_claim_polarity(keyword); polarity && is_punct("(")) {
      shift();
      CausalClaim claim;
      claim.polarity = *polarity;
      claim.cause = symbol("cause concept");
      expect(",");
      claim.effect = symbol("effect concept");
      expect(")");
      if (claim.cause == claim.effect) fail("self-loop claim " + claim.to_string(), head);
      if (is_punct("[")) {
        shift();
        while (!is_punct("]")) {
          if (current_.kind != Tok::Symbol && current_.kind != Tok::String)
            fail("expected support id, found " + describe(current_));
          claim.support.push_back(current_.text);
          shift();
          if (!is_punct("]")) expect(",");
        }
        shift();
        if (claim.support.empty()) fail("empty support list", head);
      } else {
        claim.support.push_back("line:" + std::to_string(head.line));
      }
      doc_.claims.push_back(std::move(claim));
    } else {
      fail("unknown statement '" + keyword + "'", head);
    }
    expect(".");
  }

  Lexer lexer_;
  Token current_;
  ClaimsDocument doc_;
};

}  // namespace

ClaimsDocument parse_claims_dsl(std::string_view text) { return Parser(text).parse(); }

}  // namespace concausal::reasoner

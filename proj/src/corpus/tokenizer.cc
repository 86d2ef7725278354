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

#include "concausal/corpus/tokenizer.h"

#include <cctype>
#include <cstdint>

namespace concausal::corpus {

namespace {

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 1;
};

CodePoint decode(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1};

  std::size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + length > text.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < length; ++i) {
    const unsigned char next = byte(pos + i);
    if ((next & 0xC0) != 0x80) return {0xFFFD, 1};
    value = (value << 6) | (next & 0x3F);
  }
  return {value, length};
}

bool is_space(char32_t c) {
  if (c < 0x80) return std::isspace(static_cast<int>(c)) != 0;
  return c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

bool is_punct(char32_t c) {
  if (c < 0x80) return std::ispunct(static_cast<int>(c)) != 0;
  return (c >= 0x2010 && c <= 0x2027) ||  // dashes, quotes, ellipsis
         (c >= 0x2030 && c <= 0x205E) ||  // per mille, primes, guillemets
         c == 0x00A1 || c == 0x00A7 || c == 0x00AB || c == 0x00B6 ||
         c == 0x00B7 || c == 0x00BB || c == 0x00BF || c == 0x27E8 ||
         c == 0x27E9 || (c >= 0x3001 && c <= 0x3003);
}

bool is_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_apostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

void emit_word(std::string_view text, std::size_t start, std::size_t end,
               std::vector<Token>& out) {
  if (start >= end) return;
  std::string_view word = text.substr(start, end - start);
  out.push_back({std::string(word), start, end});
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  while (pos < token.size()) {
    const CodePoint cp = decode(token, pos);
    if (!is_punct(cp.value)) return false;
    pos += cp.length;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint first = decode(text, pos);
    if (is_space(first.value)) {
      pos += first.length;
      continue;
    }

    // Collect one whitespace-delimited run as code points.
    std::vector<std::pair<std::size_t, CodePoint>> run;
    while (pos < text.size()) {
      const CodePoint cp = decode(text, pos);
      if (is_space(cp.value)) break;
      run.emplace_back(pos, cp);
      pos += cp.length;
    }

    std::size_t word_start = std::string_view::npos;
    auto flush_word = [&](std::size_t end_offset) {
      if (word_start == std::string_view::npos) return;
      emit_word(text, word_start, end_offset, tokens);
      word_start = std::string_view::npos;
    };

    for (std::size_t i = 0; i < run.size(); ++i) {
      const auto [offset, cp] = run[i];
      const bool numeric_separator =
          (cp.value == ',' || cp.value == '.') && i > 0 &&
          i + 1 < run.size() && is_digit(run[i - 1].second.value) &&
          is_digit(run[i + 1].second.value);

      // "n't" contraction: word char 'n', apostrophe, 't', then run end or
      // punctuation.
      if ((word_start != std::string_view::npos || i == 0) &&
          (cp.value == 'n' || cp.value == 'N') && i + 2 < run.size() &&
          is_apostrophe(run[i + 1].second.value) &&
          (run[i + 2].second.value == 't' || run[i + 2].second.value == 'T') &&
          (i + 3 == run.size() || is_punct(run[i + 3].second.value))) {
        flush_word(offset);
        const std::size_t end = run[i + 2].first + run[i + 2].second.length;
        tokens.push_back({std::string(text.substr(offset, end - offset)),
                          offset, end});
        i += 2;
        continue;
      }

      if (is_punct(cp.value) && !numeric_separator) {
        flush_word(offset);
        tokens.push_back({std::string(text.substr(offset, cp.length)), offset,
                          offset + cp.length});
        continue;
      }
      if (word_start == std::string_view::npos) word_start = offset;
    }
    flush_word(pos);
  }
  return tokens;
}

}  // namespace concausal::corpus

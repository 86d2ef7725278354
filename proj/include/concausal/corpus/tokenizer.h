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
#include <string>
#include <string_view>
#include <vector>

namespace concausal::corpus {

struct Token {
  std::string text;
  std::size_t start = 0;  // byte offset into the source text
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

// Splits on whitespace and cuts every punctuation character into its own
// token. Two refinements keep common cases intact: a comma or period
// between digits stays inside the number ("300,000"), and a trailing
// "n't" is split off as one token ("didn't" -> "did", "n't").
// Offsets always index into the original text; invalid UTF-8 bytes are
// treated as word characters.
std::vector<Token> tokenize(std::string_view text);

// Lower-cased ASCII copy; non-ASCII bytes pass through unchanged.
std::string to_lower(std::string_view text);

bool is_punctuation_token(std::string_view token);

}  // namespace concausal::corpus

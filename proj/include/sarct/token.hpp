// Copyright 2026 The sarct Authors
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

#ifndef SARCT_TOKEN_HPP
#define SARCT_TOKEN_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "sarct/pos.hpp"

namespace sarct {

// ASCII-insensitive case folding; bytes outside ASCII pass through.
inline std::string fold_case(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c))
                           : static_cast<char>(c));
  }
  return out;
}

inline std::size_t count_capitals(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if (c < 0x80 && std::isupper(c)) ++n;
  }
  return n;
}

struct Token {
  std::string surface;
  std::string lower;          // case-folded surface
  std::size_t index = 0;      // 0-based position in sentence
  Pos pos = Pos::NN;
  std::size_t capital_count = 0;

  static Token make(std::string surface, std::size_t index) {
    Token t;
    t.lower = fold_case(surface);
    t.capital_count = count_capitals(surface);
    t.surface = std::move(surface);
    t.index = index;
    return t;
  }
};

struct TaggedSentence {
  std::string text;           // original input
  std::vector<Token> tokens;
  bool is_question = false;

  std::size_t size() const { return tokens.size(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
};

enum class ChunkKind {
  NounPhrase,
  GerundPhrase,
  InfinitivePhrase,
  NamedEntity,
  Subject,
  Object,
};

// Inclusive token-index span.
struct Chunk {
  ChunkKind kind;
  std::size_t first;
  std::size_t last;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t i) const { return i >= first && i <= last; }
};

inline bool is_sentence_final(const Token& t) {
  if (t.surface.empty()) return false;
  char c = t.surface[0];
  return c == '.' || c == '!' || c == '?';
}

inline bool is_punct_surface(const std::string& surface) {
  for (char ch : surface) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::isalnum(c)) return false;
  }
  return !surface.empty();
}

// A token opens a sentence if it is first or follows end punctuation; used
// both by the tagger and by named-entity filtering.
inline bool sentence_initial(const std::vector<Token>& tokens, std::size_t i) {
  if (i == 0) return true;
  return is_sentence_final(tokens[i - 1]);
}

}  // namespace sarct

#endif  // SARCT_TOKEN_HPP

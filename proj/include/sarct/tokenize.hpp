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

#ifndef SARCT_TOKENIZE_HPP
#define SARCT_TOKENIZE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/token.hpp"

namespace sarct {

namespace detail {

inline bool is_space_byte(unsigned char c) {
  return c < 0x80 && std::isspace(c);
}

// Letters, digits, and non-ASCII bytes form word material. Hyphens and
// apostrophes are word-internal only when flanked by word material, so
// "Tooth-ache" and "o'clock" stay whole while a lone "-" splits off.
inline bool is_word_byte(unsigned char c) {
  return c >= 0x80 || std::isalnum(c);
}

// Splits one raw word at contraction boundaries, Treebank style:
// "don't" -> do | n't, "you're" -> you | 're, trailing "'" split off.
inline void split_contractions(const std::string& word,
                               std::vector<std::string>& out) {
  std::string lower = fold_case(word);
  if (lower.size() > 3 && lower.compare(lower.size() - 3, 3, "n't") == 0) {
    out.push_back(word.substr(0, word.size() - 3));
    out.push_back(word.substr(word.size() - 3));
    return;
  }
  static const char* kSuffixes[] = {"'s", "'m", "'d", "'ll", "'re", "'ve"};
  for (const char* suf : kSuffixes) {
    std::size_t len = std::string_view(suf).size();
    if (lower.size() > len &&
        lower.compare(lower.size() - len, len, suf) == 0) {
      out.push_back(word.substr(0, word.size() - len));
      out.push_back(word.substr(word.size() - len));
      return;
    }
  }
  if (word.size() > 1 && word.back() == '\'') {
    out.push_back(word.substr(0, word.size() - 1));
    out.push_back("'");
    return;
  }
  out.push_back(word);
}

}  // namespace detail

// Whitespace- and punctuation-splitting tokenizer. Runs of '.' collapse into
// one token so ellipses survive; every other punctuation byte stands alone.
inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<std::string> pieces;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (detail::is_space_byte(c)) {
      ++i;
      continue;
    }
    if (detail::is_word_byte(c)) {
      std::size_t start = i;
      while (i < n) {
        unsigned char cur = static_cast<unsigned char>(text[i]);
        if (detail::is_word_byte(cur)) {
          ++i;
          continue;
        }
        // word-internal hyphen/apostrophe
        if ((cur == '-' || cur == '\'') && i > start && i + 1 < n &&
            detail::is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
          ++i;
          continue;
        }
        break;
      }
      detail::split_contractions(text.substr(start, i - start), pieces);
      continue;
    }
    if (c == '.') {
      std::size_t start = i;
      while (i < n && text[i] == '.') ++i;
      pieces.push_back(text.substr(start, i - start));
      continue;
    }
    pieces.push_back(std::string(1, text[i]));
    ++i;
  }
  if (pieces.empty()) throw EmptyInputError();

  std::vector<Token> tokens;
  tokens.reserve(pieces.size());
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    tokens.push_back(Token::make(pieces[k], k));
  }
  return tokens;
}

}  // namespace sarct

#endif  // SARCT_TOKENIZE_HPP

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

#ifndef SARCT_SENTIMENT_HPP
#define SARCT_SENTIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/token.hpp"

namespace sarct {

// Word -> polarity score in [-1,+1]. Absent words score 0.
struct Lexicon {
  std::map<std::string, double> entries;
  std::size_t duplicate_count = 0;

  std::size_t size() const { return entries.size(); }
};

// Format: `word<TAB>score` per line, UTF-8; `#` starts a comment line.
// Duplicate words keep the last score and bump duplicate_count.
inline Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ParseError("expected `word<TAB>score'", lineno);
    }
    std::string word = fold_case(line.substr(0, tab));
    std::string score_text = line.substr(tab + 1);
    char* end = nullptr;
    double score = std::strtod(score_text.c_str(), &end);
    if (end == score_text.c_str() || *end != '\0' || !std::isfinite(score)) {
      throw ParseError("bad score `" + score_text + "'", lineno);
    }
    if (score < -1.0 || score > 1.0) {
      throw RangeError("score " + score_text + " outside [-1,1] at line " +
                       std::to_string(lineno));
    }
    if (!lex.entries.emplace(word, score).second) {
      lex.entries[word] = score;
      ++lex.duplicate_count;
    }
  }
  return lex;
}

inline double word_polarity(const Lexicon& lex, const std::string& word) {
  auto it = lex.entries.find(fold_case(word));
  return it == lex.entries.end() ? 0.0 : it->second;
}

// Mean over the window (previous, current, next); out-of-bounds neighbors
// contribute 0, the divisor stays 3.
inline double trigram_polarity(const Lexicon& lex, const TaggedSentence& s,
                               std::size_t i) {
  if (i >= s.size()) throw RangeError("token index out of bounds");
  double sum = word_polarity(lex, s.tokens[i].lower);
  if (i > 0) sum += word_polarity(lex, s.tokens[i - 1].lower);
  if (i + 1 < s.size()) sum += word_polarity(lex, s.tokens[i + 1].lower);
  return std::clamp(sum / 3.0, -1.0, 1.0);
}

// Magnitude convention: a strongly negative span is as "strong" as a
// strongly positive one, so signs never cancel.
inline double polarity_strength(const Lexicon& lex,
                                const std::vector<std::string>& words) {
  double total = 0.0;
  for (const auto& w : words) total += std::fabs(word_polarity(lex, w));
  return total;
}

inline double polarity_sum(const Lexicon& lex,
                           const std::vector<std::string>& words) {
  double total = 0.0;
  for (const auto& w : words) total += word_polarity(lex, w);
  return total;
}

}  // namespace sarct

#endif  // SARCT_SENTIMENT_HPP

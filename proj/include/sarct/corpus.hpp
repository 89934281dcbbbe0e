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

#ifndef SARCT_CORPUS_HPP
#define SARCT_CORPUS_HPP

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/sentiment.hpp"
#include "sarct/tagger.hpp"
#include "sarct/target.hpp"
#include "sarct/tokenize.hpp"

namespace sarct {

// One annotated sentence. Gold is a word list, not index offsets, matching
// how targets are usually published; OUTSIDE marks the fallback label.
struct Document {
  std::string id;
  std::string text;
  std::vector<std::string> gold_words;
  bool outside = false;
};

// Format: `id<TAB>text<TAB>target`, target = `word(|word)*` or `OUTSIDE`,
// `#` comment lines ignored. Gold words must be locatable in the text.
inline std::vector<Document> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);
  std::vector<Document> docs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("expected `id<TAB>text<TAB>target'", lineno);
    }
    Document d;
    d.id = line.substr(0, t1);
    if (d.id.empty()) d.id = "L" + std::to_string(lineno);
    d.text = line.substr(t1 + 1, t2 - t1 - 1);
    std::string target = line.substr(t2 + 1);
    if (d.text.empty() || target.empty()) {
      throw ParseError("empty text or target field", lineno);
    }
    if (target == "OUTSIDE") {
      d.outside = true;
    } else {
      std::size_t start = 0;
      while (start <= target.size()) {
        std::size_t bar = target.find('|', start);
        std::string word = target.substr(
            start, bar == std::string::npos ? std::string::npos
                                            : bar - start);
        if (word.empty()) throw ParseError("empty gold word", lineno);
        d.gold_words.push_back(word);
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
    }

    // validate now so a broken corpus fails at load, with its line number
    std::multiset<std::string> available;
    for (const Token& t : tokenize(d.text)) available.insert(t.lower);
    for (const auto& w : d.gold_words) {
      auto it = available.find(fold_case(w));
      if (it == available.end()) throw AnnotationMismatchError(w, lineno);
      available.erase(it);
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

inline void save_corpus(const std::vector<Document>& docs,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileNotFoundError(path);
  for (const Document& d : docs) {
    out << d.id << '\t' << d.text << '\t';
    if (d.outside) {
      out << "OUTSIDE";
    } else {
      for (std::size_t i = 0; i < d.gold_words.size(); ++i) {
        if (i) out << '|';
        out << d.gold_words[i];
      }
    }
    out << '\n';
  }
}

// Gold words map to token indices. A multi-word annotation that occurs as a
// contiguous token run takes the leftmost such span, since span targets are
// transcribed in order and may repeat function words that also appear
// earlier in the sentence. Otherwise each word takes its leftmost unclaimed
// occurrence, consuming occurrences left to right.
inline TargetAnnotation resolve_gold_indices(const Document& d,
                                             const TaggedSentence& s) {
  if (d.outside) return TargetAnnotation::outside();
  std::vector<std::string> folded;
  folded.reserve(d.gold_words.size());
  for (const auto& w : d.gold_words) folded.push_back(fold_case(w));
  TargetAnnotation out;
  if (folded.size() >= 2 && folded.size() <= s.size()) {
    for (std::size_t start = 0; start + folded.size() <= s.size(); ++start) {
      bool hit = true;
      for (std::size_t j = 0; j < folded.size(); ++j) {
        if (s.tokens[start + j].lower != folded[j]) {
          hit = false;
          break;
        }
      }
      if (hit) {
        for (std::size_t j = 0; j < folded.size(); ++j) out.words.insert(start + j);
        return out;
      }
    }
  }
  for (std::size_t k = 0; k < folded.size(); ++k) {
    bool placed = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.tokens[i].lower == folded[k] && !out.words.count(i)) {
        out.words.insert(i);
        placed = true;
        break;
      }
    }
    if (!placed) throw AnnotationMismatchError(d.gold_words[k], 0);
  }
  return out;
}

// Tag and resolve a whole corpus into the (sentence, gold) pairs every
// downstream component consumes.
inline std::vector<std::pair<TaggedSentence, TargetAnnotation>>
prepare_corpus(const std::vector<Document>& docs, const TaggerModel& tagger) {
  std::vector<std::pair<TaggedSentence, TargetAnnotation>> out;
  out.reserve(docs.size());
  for (const Document& d : docs) {
    TaggedSentence s = tag_text(d.text, tagger);
    TargetAnnotation gold = resolve_gold_indices(d, s);
    out.emplace_back(std::move(s), std::move(gold));
  }
  return out;
}

struct CorpusStats {
  std::size_t count = 0;
  double avg_words = 0.0;
  std::size_t vocabulary = 0;
  std::size_t total_words = 0;
  double avg_target_length = 0.0;
  double avg_target_polarity_strength = 0.0;
  double avg_rest_polarity_strength = 0.0;
  std::size_t outside_count = 0;
  bool has_targets = false;
};

// Target-side means run over non-Outside documents; the rest-of-sentence
// mean runs over every document (an Outside sentence is all rest).
inline CorpusStats corpus_stats(const std::vector<Document>& docs,
                                const Lexicon& lex) {
  if (docs.empty()) throw EmptyInputError();
  CorpusStats st;
  st.count = docs.size();
  std::set<std::string> vocab;
  double target_len_sum = 0.0, target_pol_sum = 0.0, rest_pol_sum = 0.0;
  std::size_t with_target = 0;

  for (const Document& d : docs) {
    std::vector<Token> tokens = tokenize(d.text);
    st.total_words += tokens.size();
    for (const Token& t : tokens) vocab.insert(t.lower);

    std::multiset<std::string> target;
    for (const auto& w : d.gold_words) target.insert(fold_case(w));
    double target_pol = 0.0, rest_pol = 0.0;
    for (const Token& t : tokens) {
      auto it = target.find(t.lower);
      if (it != target.end()) {
        target_pol += std::fabs(word_polarity(lex, t.lower));
        target.erase(it);
      } else {
        rest_pol += std::fabs(word_polarity(lex, t.lower));
      }
    }
    rest_pol_sum += rest_pol;
    if (d.outside) {
      ++st.outside_count;
    } else {
      ++with_target;
      target_len_sum += static_cast<double>(d.gold_words.size());
      target_pol_sum += target_pol;
    }
  }

  st.vocabulary = vocab.size();
  st.avg_words = static_cast<double>(st.total_words) /
                 static_cast<double>(st.count);
  st.has_targets = with_target > 0;
  if (with_target > 0) {
    st.avg_target_length = target_len_sum / static_cast<double>(with_target);
    st.avg_target_polarity_strength =
        target_pol_sum / static_cast<double>(with_target);
  }
  st.avg_rest_polarity_strength =
      rest_pol_sum / static_cast<double>(st.count);
  return st;
}

// One lowercase word per line; `#` comments allowed.
inline std::set<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(fold_case(line));
  }
  return words;
}

}  // namespace sarct

#endif  // SARCT_CORPUS_HPP

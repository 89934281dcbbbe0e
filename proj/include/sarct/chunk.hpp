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

#ifndef SARCT_CHUNK_HPP
#define SARCT_CHUNK_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/pos.hpp"
#include "sarct/tagger.hpp"
#include "sarct/token.hpp"

namespace sarct {

namespace detail {

inline bool is_np_modifier(Pos p) {
  return is_adjective(p) || is_adverb(p) || p == Pos::CD;
}

inline bool is_np_determiner(Pos p) {
  return p == Pos::DT || p == Pos::PDT || p == Pos::PRP_S;
}

// Matches {PDT}? {DT|PRP$}? {JJ*|RB*|CD}* NN+ starting at i; returns the
// last index of the noun run, or nothing if no noun is reached.
inline std::optional<std::size_t> np_end(const TaggedSentence& s,
                                         std::size_t i) {
  std::size_t j = i;
  const std::size_t n = s.size();
  if (j < n && s.tokens[j].pos == Pos::PDT) ++j;
  if (j < n && (s.tokens[j].pos == Pos::DT || s.tokens[j].pos == Pos::PRP_S)) {
    ++j;
  }
  while (j < n && is_np_modifier(s.tokens[j].pos)) ++j;
  std::size_t k = j;
  while (k < n && is_noun(s.tokens[k].pos)) ++k;
  if (k == j) return std::nullopt;
  return k - 1;
}

}  // namespace detail

inline std::vector<Chunk> noun_phrases(const TaggedSentence& s) {
  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto end = detail::np_end(s, i);
    if (end) {
      out.push_back(Chunk{ChunkKind::NounPhrase, i, *end});
      i = *end + 1;
    } else {
      ++i;
    }
  }
  return out;
}

namespace detail {

// Complement extension halts at a clause edge: finite verb, punctuation,
// coordination, or a wh-word.
inline bool stops_verbal_phrase(Pos p) {
  return is_finite_verb(p) || is_punct(p) || p == Pos::CC || p == Pos::WDT ||
         p == Pos::WP || p == Pos::WP_S || p == Pos::WRB;
}

inline std::size_t extend_phrase(const TaggedSentence& s, std::size_t from) {
  std::size_t j = from;
  while (j + 1 < s.size() && !stops_verbal_phrase(s.tokens[j + 1].pos)) ++j;
  return j;
}

}  // namespace detail

inline std::vector<Chunk> gerund_and_infinitive_phrases(
    const TaggedSentence& s) {
  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.tokens[i].pos == Pos::VBG) {
      std::size_t end = detail::extend_phrase(s, i);
      out.push_back(Chunk{ChunkKind::GerundPhrase, i, end});
      i = end + 1;
      continue;
    }
    if (s.tokens[i].pos == Pos::TO && i + 1 < s.size() &&
        s.tokens[i + 1].pos == Pos::VB) {
      std::size_t end = detail::extend_phrase(s, i + 1);
      out.push_back(Chunk{ChunkKind::InfinitivePhrase, i, end});
      i = end + 1;
      continue;
    }
    ++i;
  }
  return out;
}

// Capitalization heuristic; a sentence opener counts only when it is
// NNP-tagged or unknown to the common-word list.
inline std::vector<Chunk> named_entities(
    const TaggedSentence& s,
    const std::set<std::string>* common_words = nullptr) {
  const std::set<std::string>& common =
      common_words ? *common_words : builtin_common_words();
  std::vector<Chunk> out;
  auto eligible = [&](std::size_t i) {
    const Token& t = s.tokens[i];
    if (is_punct(t.pos) || is_pronoun(t.pos)) return false;
    bool cap = !t.surface.empty() &&
               std::isupper(static_cast<unsigned char>(t.surface[0]));
    if (sentence_initial(s.tokens, i)) {
      return cap && (t.pos == Pos::NNP || t.pos == Pos::NNPS ||
                     common.count(t.lower) == 0);
    }
    return t.pos == Pos::NNP || t.pos == Pos::NNPS || cap;
  };
  std::size_t i = 0;
  while (i < s.size()) {
    if (!eligible(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < s.size() && eligible(j + 1)) ++j;
    out.push_back(Chunk{ChunkKind::NamedEntity, i, j});
    i = j + 1;
  }
  return out;
}

// Clause containing `idx`, delimited by sentence-final punctuation
// (exclusive on both ends).
inline std::pair<std::size_t, std::size_t> clause_bounds(
    const TaggedSentence& s, std::size_t idx) {
  std::size_t first = 0;
  for (std::size_t i = idx; i > 0; --i) {
    if (is_sentence_final(s.tokens[i - 1])) {
      first = i;
      break;
    }
  }
  std::size_t last = s.size() - 1;
  for (std::size_t i = idx; i < s.size(); ++i) {
    if (is_sentence_final(s.tokens[i]) && i > idx) {
      last = i - 1;
      break;
    }
    if (is_sentence_final(s.tokens[i]) && i == idx) break;
  }
  return {first, last};
}

inline std::pair<std::optional<Chunk>, std::optional<Chunk>> subject_object(
    const TaggedSentence& s, std::size_t verb_index) {
  if (verb_index >= s.size() || !is_verb(s.tokens[verb_index].pos)) {
    throw NotAVerbError(verb_index);
  }
  auto [lo, hi] = clause_bounds(s, verb_index);

  std::vector<Chunk> candidates = noun_phrases(s);
  for (const Chunk& c : gerund_and_infinitive_phrases(s)) {
    candidates.push_back(c);
  }
  for (std::size_t i = lo; i <= hi; ++i) {
    if (is_pronoun(s.tokens[i].pos)) {
      candidates.push_back(Chunk{ChunkKind::Subject, i, i});
    }
  }

  std::optional<Chunk> subject;
  for (const Chunk& c : candidates) {
    if (c.kind == ChunkKind::GerundPhrase ||
        c.kind == ChunkKind::InfinitivePhrase) {
      continue;
    }
    if (c.first >= lo && c.last < verb_index) {
      if (!subject || c.last > subject->last) subject = c;
    }
  }
  if (subject) subject->kind = ChunkKind::Subject;

  std::optional<Chunk> object;
  for (const Chunk& c : candidates) {
    if (c.first > verb_index && c.last <= hi) {
      if (!object || c.first < object->first ||
          (c.first == object->first && c.last > object->last)) {
        object = c;
      }
    }
  }
  if (object) object->kind = ChunkKind::Object;
  return {subject, object};
}

inline bool is_interrogative(const TaggedSentence& s) { return s.is_question; }

namespace detail {

inline const std::set<std::string>& auxiliary_lemmas() {
  static const std::set<std::string> kAux = {
      "am",   "is",  "are", "was",  "were", "be",  "been", "being",
      "'m",   "'re", "'s",  "have", "has",  "had", "'ve",  "do",
      "does", "did", "ca",  "wo",   "sha"};
  return kAux;
}

}  // namespace detail

// First finite verb, advanced through its auxiliary chain to the lexical
// head ("has been decided" picks "decided").
inline std::optional<std::size_t> main_verb_head(const TaggedSentence& s) {
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_finite_verb(s.tokens[i].pos)) {
      start = i;
      break;
    }
  }
  if (!start) return std::nullopt;
  std::size_t head = *start;
  while (true) {
    const Token& t = s.tokens[head];
    bool aux = t.pos == Pos::MD ||
               detail::auxiliary_lemmas().count(t.lower) > 0;
    if (!aux) break;
    std::size_t j = head + 1;
    while (j < s.size() &&
           (is_adverb(s.tokens[j].pos) || s.tokens[j].lower == "n't" ||
            s.tokens[j].lower == "not")) {
      ++j;
    }
    if (j < s.size() && is_verb(s.tokens[j].pos)) {
      head = j;
    } else {
      break;
    }
  }
  return head;
}

}  // namespace sarct

#endif  // SARCT_CHUNK_HPP

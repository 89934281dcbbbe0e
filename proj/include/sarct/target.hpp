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

#ifndef SARCT_TARGET_HPP
#define SARCT_TARGET_HPP

#include <set>
#include <string>
#include <vector>

#include "sarct/token.hpp"

namespace sarct {

// One extractor's proposal: word indices, or an explicit vote that the
// target lies outside the sentence. Both empty means "matched, nothing".
struct CandidateSet {
  std::set<std::size_t> word_indices;
  bool outside_vote = false;

  bool empty() const { return word_indices.empty() && !outside_vote; }

  friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
    return a.word_indices == b.word_indices &&
           a.outside_vote == b.outside_vote;
  }
};

// Final label: a non-empty set of token indices, or Outside. The empty set
// is the Outside representation, so the two states cannot coexist.
struct TargetAnnotation {
  std::set<std::size_t> words;

  bool is_outside() const { return words.empty(); }

  static TargetAnnotation outside() { return TargetAnnotation{}; }
  static TargetAnnotation of(std::set<std::size_t> indices) {
    return TargetAnnotation{std::move(indices)};
  }

  friend bool operator==(const TargetAnnotation& a,
                         const TargetAnnotation& b) {
    return a.words == b.words;
  }
};

inline std::vector<std::string> target_surfaces(const TaggedSentence& s,
                                                const TargetAnnotation& t) {
  std::vector<std::string> out;
  for (std::size_t i : t.words) {
    if (i < s.size()) out.push_back(s.tokens[i].surface);
  }
  return out;
}

// `word(|word)*` or `OUTSIDE`; the same shape corpus files use.
inline std::string format_target(const TaggedSentence& s,
                                 const TargetAnnotation& t) {
  if (t.is_outside()) return "OUTSIDE";
  std::string out;
  for (std::size_t i : t.words) {
    if (!out.empty()) out += '|';
    out += i < s.size() ? s.tokens[i].surface : "?";
  }
  return out;
}

}  // namespace sarct

#endif  // SARCT_TARGET_HPP

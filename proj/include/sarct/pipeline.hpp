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

#ifndef SARCT_PIPELINE_HPP
#define SARCT_PIPELINE_HPP

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <string>

#include "sarct/rules.hpp"
#include "sarct/statistical.hpp"
#include "sarct/tagger.hpp"
#include "sarct/target.hpp"

namespace sarct {

enum class IntegratorMode { RuleOnly, StatOnly, HybridOr, HybridAnd };

inline std::string to_string(IntegratorMode m) {
  switch (m) {
    case IntegratorMode::RuleOnly: return "rule-only";
    case IntegratorMode::StatOnly: return "stat-only";
    case IntegratorMode::HybridOr: return "hybrid-or";
    case IntegratorMode::HybridAnd: return "hybrid-and";
  }
  return "";
}

inline std::optional<IntegratorMode> mode_from_string(
    const std::string& name) {
  if (name == "rule-only") return IntegratorMode::RuleOnly;
  if (name == "stat-only") return IntegratorMode::StatOnly;
  if (name == "hybrid-or") return IntegratorMode::HybridOr;
  if (name == "hybrid-and") return IntegratorMode::HybridAnd;
  return std::nullopt;
}

// An outside vote contributes no words, so OR falls back to Outside only
// when neither extractor proposes anything.
inline TargetAnnotation integrate(const CandidateSet& rule_cand,
                                  const CandidateSet& stat_cand,
                                  IntegratorMode mode) {
  std::set<std::size_t> result;
  switch (mode) {
    case IntegratorMode::RuleOnly:
      result = rule_cand.word_indices;
      break;
    case IntegratorMode::StatOnly:
      result = stat_cand.word_indices;
      break;
    case IntegratorMode::HybridOr:
      std::set_union(rule_cand.word_indices.begin(),
                     rule_cand.word_indices.end(),
                     stat_cand.word_indices.begin(),
                     stat_cand.word_indices.end(),
                     std::inserter(result, result.begin()));
      break;
    case IntegratorMode::HybridAnd:
      std::set_intersection(rule_cand.word_indices.begin(),
                            rule_cand.word_indices.end(),
                            stat_cand.word_indices.begin(),
                            stat_cand.word_indices.end(),
                            std::inserter(result, result.begin()));
      break;
  }
  if (result.empty()) return TargetAnnotation::outside();
  return TargetAnnotation::of(std::move(result));
}

// The rule side: apply all nine rules and fold their votes. When nothing
// even matched, the candidate is an outside vote.
inline CandidateSet rule_extract(const TaggedSentence& s, const Lexicon& lex,
                                 const RuleWeights& weights,
                                 bool count_outside_votes = true) {
  std::map<RuleId, CandidateSet> matched;
  for (const auto& [rule, outcome] : apply_all(s, lex)) {
    if (outcome) matched[rule] = *outcome;
  }
  if (matched.empty()) {
    CandidateSet cs;
    cs.outside_vote = true;
    return cs;
  }
  return combine_weighted_majority(matched, weights, count_outside_votes);
}

struct Models {
  TaggerModel tagger;
  Lexicon lexicon;
  RuleWeights rule_weights;
  LinearModel linear;
  bool count_outside_votes = true;
};

inline TargetAnnotation extract_target(const TaggedSentence& s,
                                       const Models& models,
                                       IntegratorMode mode) {
  CandidateSet rule_cand;
  CandidateSet stat_cand;
  if (mode != IntegratorMode::StatOnly) {
    rule_cand = rule_extract(s, models.lexicon, models.rule_weights,
                             models.count_outside_votes);
  }
  if (mode != IntegratorMode::RuleOnly) {
    stat_cand = extract_candidates(models.linear, s, models.lexicon);
  }
  return integrate(rule_cand, stat_cand, mode);
}

inline TargetAnnotation extract_target(const std::string& text,
                                       const Models& models,
                                       IntegratorMode mode) {
  return extract_target(tag_text(text, models.tagger), models, mode);
}

}  // namespace sarct

#endif  // SARCT_PIPELINE_HPP

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

#ifndef SARCT_RULES_HPP
#define SARCT_RULES_HPP

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sarct/chunk.hpp"
#include "sarct/errors.hpp"
#include "sarct/metrics.hpp"
#include "sarct/sentiment.hpp"
#include "sarct/target.hpp"

namespace sarct {

enum class RuleId { R1, R2, R3, R4, R5, R6, R7, R8, R9 };

inline constexpr std::array<RuleId, 9> kAllRules = {
    RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5,
    RuleId::R6, RuleId::R7, RuleId::R8, RuleId::R9};

inline std::string to_string(RuleId r) {
  return "R" + std::to_string(static_cast<int>(r) + 1);
}

inline std::optional<RuleId> rule_from_string(const std::string& name) {
  if (name.size() == 2 && name[0] == 'R' && name[1] >= '1' && name[1] <= '9') {
    return static_cast<RuleId>(name[1] - '1');
  }
  return std::nullopt;
}

inline std::string rule_description(RuleId r) {
  switch (r) {
    case RuleId::R1: return "pronouns and pronominal-adjective phrases";
    case RuleId::R2: return "named entities";
    case RuleId::R3: return "direct object of a positive sentiment verb";
    case RuleId::R4: return "lower-sentiment side of a neutral main verb";
    case RuleId::R5: return "gerund and infinitive verb phrases";
    case RuleId::R6: return "nouns preceded by a positive adjective";
    case RuleId::R7: return "subject of an interrogative sentence";
    case RuleId::R8: return "subjects of similes and comparisons";
    case RuleId::R9: return "demonstrative-noun pairs";
  }
  return "";
}

// NoMatch (nullopt) means the trigger pattern is absent; an engaged rule
// may still return an empty candidate.
using RuleOutcome = std::optional<CandidateSet>;

namespace detail {

inline std::vector<Chunk> np_and_pronoun_chunks(const TaggedSentence& s) {
  std::vector<Chunk> out = noun_phrases(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_pronoun(s.tokens[i].pos)) {
      out.push_back(Chunk{ChunkKind::Subject, i, i});
    }
  }
  return out;
}

inline std::optional<Chunk> rightmost_np_before(const TaggedSentence& s,
                                                std::size_t idx,
                                                std::size_t lo) {
  std::optional<Chunk> best;
  for (const Chunk& c : np_and_pronoun_chunks(s)) {
    if (c.first >= lo && c.last < idx) {
      if (!best || c.last > best->last) best = c;
    }
  }
  return best;
}

inline std::optional<Chunk> first_np_after(const TaggedSentence& s,
                                           std::size_t idx, std::size_t hi) {
  std::optional<Chunk> best;
  for (const Chunk& c : np_and_pronoun_chunks(s)) {
    if (c.first > idx && c.last <= hi) {
      if (!best || c.first < best->first) best = c;
    }
  }
  return best;
}

inline void add_span(CandidateSet& cs, const Chunk& c) {
  for (std::size_t i = c.first; i <= c.last; ++i) cs.word_indices.insert(i);
}

}  // namespace detail

// R1: every pronoun, and each possessive pronoun together with the noun
// phrase it opens ("my job").
inline RuleOutcome rule_pronouns(const TaggedSentence& s) {
  CandidateSet cs;
  bool matched = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.tokens[i].pos == Pos::PRP) {
      cs.word_indices.insert(i);
      matched = true;
    } else if (s.tokens[i].pos == Pos::PRP_S) {
      matched = true;
      cs.word_indices.insert(i);
      if (auto end = detail::np_end(s, i)) {
        for (std::size_t j = i; j <= *end; ++j) cs.word_indices.insert(j);
      }
    }
  }
  if (!matched) return std::nullopt;
  return cs;
}

// R2: named entities.
inline RuleOutcome rule_named_entities(const TaggedSentence& s) {
  auto nes = named_entities(s);
  if (nes.empty()) return std::nullopt;
  CandidateSet cs;
  for (const Chunk& c : nes) detail::add_span(cs, c);
  return cs;
}

// R3: the direct object of a positive main verb; a negative main verb votes
// Outside (the ridicule then points at something unstated).
inline RuleOutcome rule_positive_verb_object(const TaggedSentence& s,
                                             const Lexicon& lex) {
  auto head = main_verb_head(s);
  if (!head) return std::nullopt;
  double p = word_polarity(lex, s.tokens[*head].lower);
  if (p == 0.0) return std::nullopt;
  if (p < 0.0) {
    CandidateSet cs;
    cs.outside_vote = true;
    return cs;
  }
  auto [subject, object] = subject_object(s, *head);
  (void)subject;
  CandidateSet cs;
  if (object) detail::add_span(cs, *object);
  return cs;
}

// R4: with a sentiment-neutral main verb, the side of the verb carrying
// less sentiment is the candidate (ties go to the object side).
inline RuleOutcome rule_pivot_verb_sides(const TaggedSentence& s,
                                         const Lexicon& lex) {
  auto head = main_verb_head(s);
  if (!head) return std::nullopt;
  if (word_polarity(lex, s.tokens[*head].lower) != 0.0) return std::nullopt;

  auto side_words = [&](std::size_t from, std::size_t to) {
    std::vector<std::string> words;
    for (std::size_t i = from; i < to; ++i) {
      if (!is_punct(s.tokens[i].pos)) words.push_back(s.tokens[i].lower);
    }
    return words;
  };
  double left = polarity_strength(lex, side_words(0, *head));
  double right = polarity_strength(lex, side_words(*head + 1, s.size()));

  CandidateSet cs;
  std::size_t from = left < right ? 0 : *head + 1;
  std::size_t to = left < right ? *head : s.size();
  for (std::size_t i = from; i < to; ++i) {
    if (!is_punct(s.tokens[i].pos)) cs.word_indices.insert(i);
  }
  return cs;
}

// R5: gerund and infinitive phrases.
inline RuleOutcome rule_verbal_phrases(const TaggedSentence& s) {
  auto phrases = gerund_and_infinitive_phrases(s);
  if (phrases.empty()) return std::nullopt;
  CandidateSet cs;
  for (const Chunk& c : phrases) detail::add_span(cs, c);
  return cs;
}

// R6: a noun with a positive adjective one to three words before it; only
// the noun itself is returned.
inline RuleOutcome rule_positive_adjective_noun(const TaggedSentence& s,
                                                const Lexicon& lex) {
  CandidateSet cs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_common_noun(s.tokens[i].pos)) continue;
    for (std::size_t k = 1; k <= 3 && k <= i; ++k) {
      std::size_t j = i - k;
      if (is_adjective(s.tokens[j].pos) &&
          word_polarity(lex, s.tokens[j].lower) > 0.0) {
        cs.word_indices.insert(i);
        break;
      }
    }
  }
  if (cs.word_indices.empty()) return std::nullopt;
  return cs;
}

// R7: subject of an interrogative sentence, handling inverted auxiliaries
// ("Could life be more fun?" picks "life").
inline RuleOutcome rule_interrogative_subject(const TaggedSentence& s) {
  if (!is_interrogative(s)) return std::nullopt;

  std::size_t anchor = s.size() - 1;
  for (std::size_t i = s.size(); i > 0; --i) {
    if (s.tokens[i - 1].surface == "?") {
      anchor = i > 1 ? i - 2 : 0;
      break;
    }
  }
  auto [lo, hi] = clause_bounds(s, anchor);

  std::size_t start = lo;
  Pos p0 = s.tokens[start].pos;
  if (p0 == Pos::WDT || p0 == Pos::WP || p0 == Pos::WP_S || p0 == Pos::WRB) {
    if (start < hi) ++start;
  }
  CandidateSet cs;
  if (start <= hi && (s.tokens[start].pos == Pos::MD ||
                      is_finite_verb(s.tokens[start].pos))) {
    if (auto subj = detail::first_np_after(s, start, hi)) {
      detail::add_span(cs, *subj);
    }
    return cs;
  }
  for (std::size_t i = lo; i <= hi; ++i) {
    if (is_finite_verb(s.tokens[i].pos)) {
      if (auto subj = detail::rightmost_np_before(s, i, lo)) {
        detail::add_span(cs, *subj);
      }
      break;
    }
  }
  return cs;
}

// R8: simile subjects. Triggers on `as ADJ ... as`, `as if`, or `like`;
// returns the noun phrases on both sides of the comparison.
inline RuleOutcome rule_simile_subjects(const TaggedSentence& s) {
  std::optional<std::size_t> left_anchor, right_anchor;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s.tokens[i].lower != "as") continue;
    if (s.tokens[i + 1].lower == "if") {
      left_anchor = i;
      right_anchor = i + 1;
      break;
    }
    if (is_adjective(s.tokens[i + 1].pos) || is_adverb(s.tokens[i + 1].pos)) {
      for (std::size_t j = i + 2; j < s.size(); ++j) {
        if (s.tokens[j].lower == "as") {
          left_anchor = i;
          right_anchor = j;
          break;
        }
      }
      if (left_anchor) break;
    }
  }
  if (!left_anchor) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.tokens[i].lower == "like" && s.tokens[i].pos == Pos::IN) {
        left_anchor = i;
        right_anchor = i;
        break;
      }
    }
  }
  if (!left_anchor) return std::nullopt;

  CandidateSet cs;
  auto [lo, hi] = clause_bounds(s, *left_anchor);
  if (auto left = detail::rightmost_np_before(s, *left_anchor, lo)) {
    detail::add_span(cs, *left);
  }
  if (auto right = detail::first_np_after(s, *right_anchor, hi)) {
    detail::add_span(cs, *right);
  }
  return cs;
}

// R9: demonstrative followed by a noun run ("this jacket").
inline RuleOutcome rule_demonstrative_noun(const TaggedSentence& s) {
  static const std::set<std::string> kDemonstratives = {"this", "that",
                                                        "these", "those"};
  CandidateSet cs;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s.tokens[i].pos != Pos::DT ||
        kDemonstratives.count(s.tokens[i].lower) == 0) {
      continue;
    }
    std::size_t j = i + 1;
    while (j < s.size() && detail::is_np_modifier(s.tokens[j].pos)) ++j;
    if (j >= s.size() || !is_noun(s.tokens[j].pos)) continue;
    cs.word_indices.insert(i);
    while (j < s.size() && is_noun(s.tokens[j].pos)) {
      cs.word_indices.insert(j);
      ++j;
    }
  }
  if (cs.word_indices.empty()) return std::nullopt;
  return cs;
}

inline RuleOutcome apply_rule(RuleId r, const TaggedSentence& s,
                              const Lexicon& lex) {
  switch (r) {
    case RuleId::R1: return rule_pronouns(s);
    case RuleId::R2: return rule_named_entities(s);
    case RuleId::R3: return rule_positive_verb_object(s, lex);
    case RuleId::R4: return rule_pivot_verb_sides(s, lex);
    case RuleId::R5: return rule_verbal_phrases(s);
    case RuleId::R6: return rule_positive_adjective_noun(s, lex);
    case RuleId::R7: return rule_interrogative_subject(s);
    case RuleId::R8: return rule_simile_subjects(s);
    case RuleId::R9: return rule_demonstrative_noun(s);
  }
  return std::nullopt;
}

inline std::map<RuleId, RuleOutcome> apply_all(const TaggedSentence& s,
                                               const Lexicon& lex) {
  std::map<RuleId, RuleOutcome> out;
  for (RuleId r : kAllRules) out[r] = apply_rule(r, s, lex);
  return out;
}

// Per-rule vote weights; calibrated weights live in [0,1].
struct RuleWeights {
  std::array<double, 9> weight;

  RuleWeights() { weight.fill(1.0); }

  double get(RuleId r) const { return weight[static_cast<int>(r)]; }
  void set(RuleId r, double w) { weight[static_cast<int>(r)] = w; }
};

// Each word scores the summed weight of the rules voting for it; the
// max-scoring words win. Outside votes compete as a pseudo-word but lose
// ties to real words.
inline CandidateSet combine_weighted_majority(
    const std::map<RuleId, CandidateSet>& candidates,
    const RuleWeights& weights, bool count_outside_votes = true) {
  if (candidates.empty()) throw NothingToCombineError();

  std::map<std::size_t, double> score;
  double outside_score = 0.0;
  for (const auto& [rule, cand] : candidates) {
    double w = weights.get(rule);
    for (std::size_t i : cand.word_indices) score[i] += w;
    if (cand.outside_vote) outside_score += w;
  }

  CandidateSet out;
  if (score.empty()) {
    out.outside_vote = count_outside_votes && outside_score > 0.0;
    return out;
  }
  double best = score.begin()->second;
  for (const auto& [i, sc] : score) {
    if (sc > best) best = sc;
  }
  if (count_outside_votes && outside_score > best) {
    out.outside_vote = true;
    return out;
  }
  for (const auto& [i, sc] : score) {
    if (sc == best) out.word_indices.insert(i);
  }
  return out;
}

// Overall evaluation folds NoMatch, empty, and outside votes into Outside.
inline TargetAnnotation rule_prediction(const RuleOutcome& outcome) {
  if (!outcome || outcome->word_indices.empty()) {
    return TargetAnnotation::outside();
  }
  return TargetAnnotation::of(outcome->word_indices);
}

enum class WeightMetric { OverallDice, OverallEM, ConditionalDice,
                          ConditionalEM };

inline std::optional<WeightMetric> weight_metric_from_string(
    const std::string& name) {
  if (name == "overall-dice") return WeightMetric::OverallDice;
  if (name == "overall-em") return WeightMetric::OverallEM;
  if (name == "conditional-dice") return WeightMetric::ConditionalDice;
  if (name == "conditional-em") return WeightMetric::ConditionalEM;
  return std::nullopt;
}

// Weight of a rule is its own accuracy as an extractor, measured on an
// annotated corpus with the chosen metric.
inline RuleWeights calibrate_rule_weights(
    const std::vector<std::pair<TaggedSentence, TargetAnnotation>>& corpus,
    const Lexicon& lex, WeightMetric metric = WeightMetric::OverallDice) {
  if (corpus.empty()) throw EmptyTrainingSetError();
  bool conditional = metric == WeightMetric::ConditionalDice ||
                     metric == WeightMetric::ConditionalEM;
  bool use_em = metric == WeightMetric::OverallEM ||
                metric == WeightMetric::ConditionalEM;

  RuleWeights weights;
  for (RuleId r : kAllRules) {
    double total = 0.0;
    std::size_t n = 0;
    for (const auto& [s, gold] : corpus) {
      RuleOutcome outcome = apply_rule(r, s, lex);
      if (conditional && !outcome) continue;
      TargetAnnotation pred = rule_prediction(outcome);
      total += use_em ? exact_match(pred, gold) : dice(pred, gold);
      ++n;
    }
    weights.set(r, n == 0 ? 0.0 : total / static_cast<double>(n));
  }
  return weights;
}

inline void save_rule_weights(const RuleWeights& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileNotFoundError(path);
  for (RuleId r : kAllRules) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", w.get(r));
    out << to_string(r) << '\t' << buf << '\n';
  }
}

inline RuleWeights load_rule_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelNotFoundError(path);
  RuleWeights w;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected `R<k><TAB>weight'", lineno);
    }
    auto rule = rule_from_string(line.substr(0, tab));
    if (!rule) throw ParseError("unknown rule id", lineno);
    std::string wtext = line.substr(tab + 1);
    char* end = nullptr;
    double value = std::strtod(wtext.c_str(), &end);
    if (end == wtext.c_str() || *end != '\0') {
      throw ParseError("bad weight `" + wtext + "'", lineno);
    }
    w.set(*rule, value);
  }
  return w;
}

}  // namespace sarct

#endif  // SARCT_RULES_HPP

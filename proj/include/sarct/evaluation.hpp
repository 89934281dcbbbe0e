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

#ifndef SARCT_EVALUATION_HPP
#define SARCT_EVALUATION_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/metrics.hpp"
#include "sarct/pipeline.hpp"
#include "sarct/rules.hpp"
#include "sarct/statistical.hpp"
#include "sarct/target.hpp"

namespace sarct {

enum class Slice { Overall, Conditional, OutsideOnly };

struct EvalReport {
  double exact_match_accuracy = 0.0;
  double dice_score = 0.0;
  std::size_t n_instances = 0;
  Slice slice = Slice::Overall;
};

using AnnotatedCorpus = std::vector<std::pair<TaggedSentence,
                                              TargetAnnotation>>;
using SystemFn = std::function<TargetAnnotation(const TaggedSentence&)>;

// Macro average: per-sentence EM and Dice, meaned over the corpus.
inline EvalReport evaluate_system(const SystemFn& system,
                                  const AnnotatedCorpus& corpus) {
  if (corpus.empty()) throw EmptyInputError();
  EvalReport report;
  for (const auto& [s, gold] : corpus) {
    TargetAnnotation pred = system(s);
    report.exact_match_accuracy += exact_match(pred, gold);
    report.dice_score += dice(pred, gold);
  }
  report.n_instances = corpus.size();
  report.exact_match_accuracy /= static_cast<double>(corpus.size());
  report.dice_score /= static_cast<double>(corpus.size());
  return report;
}

// Overall counts every sentence, folding NoMatch into Outside; conditional
// counts only the sentences the rule actually matched.
inline std::pair<EvalReport, EvalReport> rule_report(
    RuleId r, const AnnotatedCorpus& corpus, const Lexicon& lex) {
  if (corpus.empty()) throw EmptyInputError();
  EvalReport overall;
  EvalReport conditional;
  conditional.slice = Slice::Conditional;
  for (const auto& [s, gold] : corpus) {
    RuleOutcome outcome = apply_rule(r, s, lex);
    TargetAnnotation pred = rule_prediction(outcome);
    int em = exact_match(pred, gold);
    double ds = dice(pred, gold);
    overall.exact_match_accuracy += em;
    overall.dice_score += ds;
    ++overall.n_instances;
    if (outcome) {
      conditional.exact_match_accuracy += em;
      conditional.dice_score += ds;
      ++conditional.n_instances;
    }
  }
  overall.exact_match_accuracy /= static_cast<double>(overall.n_instances);
  overall.dice_score /= static_cast<double>(overall.n_instances);
  if (conditional.n_instances > 0) {
    conditional.exact_match_accuracy /=
        static_cast<double>(conditional.n_instances);
    conditional.dice_score /= static_cast<double>(conditional.n_instances);
  }
  return {overall, conditional};
}

namespace detail {

inline bool is_alphabetic_word(const std::string& surface) {
  bool letter = false;
  for (char ch : surface) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::isalpha(c)) {
      letter = true;
    } else if (c != '-' && c != '\'') {
      return false;
    }
  }
  return letter;
}

}  // namespace detail

// Baseline 1: every alphabetic non-stopword with neutral polarity.
inline TargetAnnotation baseline_objective_words(
    const TaggedSentence& s, const Lexicon& lex,
    const std::set<std::string>& stopwords) {
  TargetAnnotation out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Token& t = s.tokens[i];
    if (!detail::is_alphabetic_word(t.surface)) continue;
    if (stopwords.count(t.lower)) continue;
    if (word_polarity(lex, t.lower) != 0.0) continue;
    out.words.insert(i);
  }
  return out;
}

enum class Granularity { WordInstance, Sentence };

struct FoldPlan {
  std::size_t k = 4;
  Granularity granularity = Granularity::WordInstance;
  std::vector<std::size_t> assignment;  // unit index -> fold
};

inline FoldPlan make_fold_plan(std::size_t n_units, std::size_t k,
                               Granularity granularity,
                               std::uint64_t seed = 42) {
  if (k < 2 || k > n_units) {
    throw InvalidFoldPlanError("k=" + std::to_string(k) + " for " +
                               std::to_string(n_units) + " units");
  }
  std::vector<std::size_t> order(n_units);
  for (std::size_t i = 0; i < n_units; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n_units; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  FoldPlan plan;
  plan.k = k;
  plan.granularity = granularity;
  plan.assignment.resize(n_units);
  for (std::size_t pos = 0; pos < n_units; ++pos) {
    plan.assignment[order[pos]] = pos % k;
  }
  return plan;
}

// Word-instance folds follow the decomposition protocol: the classifier is
// fold-trained per instance, rule weights stay corpus-calibrated (rules
// have no trainable state), and metrics are computed at the sentence level
// once every instance has its held-out prediction. Sentence folds train
// everything on the training sentences alone.
inline EvalReport cross_validate(const AnnotatedCorpus& corpus,
                                 const FoldPlan& plan, IntegratorMode mode,
                                 const Lexicon& lex,
                                 const TrainConfig& config = TrainConfig{},
                                 WeightMetric metric =
                                     WeightMetric::OverallDice,
                                 bool count_outside_votes = true) {
  if (corpus.empty()) throw EmptyInputError();

  EvalReport report;
  bool needs_stat = mode != IntegratorMode::RuleOnly;
  bool needs_rules = mode != IntegratorMode::StatOnly;

  if (plan.granularity == Granularity::Sentence) {
    if (plan.assignment.size() != corpus.size()) {
      throw InvalidFoldPlanError("assignment does not cover the corpus");
    }
    for (std::size_t fold = 0; fold < plan.k; ++fold) {
      AnnotatedCorpus train_pairs;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (plan.assignment[i] != fold) train_pairs.push_back(corpus[i]);
      }
      LinearModel model;
      if (needs_stat) {
        std::vector<WordInstance> instances;
        for (const auto& [s, gold] : train_pairs) {
          auto more = decompose(s, gold, lex);
          instances.insert(instances.end(), more.begin(), more.end());
        }
        model = train(instances, config);
      }
      RuleWeights weights;
      if (needs_rules) {
        weights = calibrate_rule_weights(train_pairs, lex, metric);
      }
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (plan.assignment[i] != fold) continue;
        const auto& [s, gold] = corpus[i];
        CandidateSet rule_cand, stat_cand;
        if (needs_rules) {
          rule_cand = rule_extract(s, lex, weights, count_outside_votes);
        }
        if (needs_stat) stat_cand = extract_candidates(model, s, lex);
        TargetAnnotation pred = integrate(rule_cand, stat_cand, mode);
        report.exact_match_accuracy += exact_match(pred, gold);
        report.dice_score += dice(pred, gold);
        ++report.n_instances;
      }
    }
  } else {
    std::size_t total = 0;
    for (const auto& [s, gold] : corpus) total += s.size();
    if (plan.assignment.size() != total) {
      throw InvalidFoldPlanError("assignment does not cover the instances");
    }
    std::vector<std::vector<WordInstance>> per_sentence(corpus.size());
    std::vector<std::size_t> offsets(corpus.size());
    std::size_t running = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      per_sentence[i] = decompose(corpus[i].first, corpus[i].second, lex);
      offsets[i] = running;
      running += per_sentence[i].size();
    }

    std::vector<std::set<std::size_t>> predicted(corpus.size());
    if (needs_stat) {
      for (std::size_t fold = 0; fold < plan.k; ++fold) {
        std::vector<WordInstance> train_instances;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          for (std::size_t t = 0; t < per_sentence[i].size(); ++t) {
            if (plan.assignment[offsets[i] + t] != fold) {
              train_instances.push_back(per_sentence[i][t]);
            }
          }
        }
        LinearModel model = train(train_instances, config);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          for (std::size_t t = 0; t < per_sentence[i].size(); ++t) {
            if (plan.assignment[offsets[i] + t] != fold) continue;
            if (predict_word(model, per_sentence[i][t].features) == 1) {
              predicted[i].insert(t);
            }
          }
        }
      }
    }

    RuleWeights weights;
    if (needs_rules) {
      weights = calibrate_rule_weights(corpus, lex, metric);
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& [s, gold] = corpus[i];
      CandidateSet rule_cand, stat_cand;
      if (needs_rules) {
        rule_cand = rule_extract(s, lex, weights, count_outside_votes);
      }
      if (needs_stat) {
        stat_cand.word_indices = predicted[i];
        if (stat_cand.word_indices.empty()) stat_cand.outside_vote = true;
      }
      TargetAnnotation pred = integrate(rule_cand, stat_cand, mode);
      report.exact_match_accuracy += exact_match(pred, gold);
      report.dice_score += dice(pred, gold);
      ++report.n_instances;
    }
  }

  report.exact_match_accuracy /= static_cast<double>(report.n_instances);
  report.dice_score /= static_cast<double>(report.n_instances);
  return report;
}

// Table of only the Outside-gold sentences; EM and DS agree here by
// construction of the pseudo-element convention.
inline EvalReport outside_slice_report(const SystemFn& system,
                                       const AnnotatedCorpus& corpus) {
  EvalReport report;
  report.slice = Slice::OutsideOnly;
  for (const auto& [s, gold] : corpus) {
    if (!gold.is_outside()) continue;
    TargetAnnotation pred = system(s);
    report.exact_match_accuracy += exact_match(pred, gold);
    report.dice_score += dice(pred, gold);
    ++report.n_instances;
  }
  if (report.n_instances > 0) {
    report.exact_match_accuracy /= static_cast<double>(report.n_instances);
    report.dice_score /= static_cast<double>(report.n_instances);
  }
  return report;
}

}  // namespace sarct

#endif  // SARCT_EVALUATION_HPP

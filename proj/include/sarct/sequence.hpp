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

#ifndef SARCT_SEQUENCE_HPP
#define SARCT_SEQUENCE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/statistical.hpp"
#include "sarct/target.hpp"

namespace sarct {

// Averaged structured perceptron over 0/1 target tags, decoded by Viterbi.
// Emission features are the word-classifier features keyed by tag;
// transitions are first order.
struct SequenceModel {
  std::map<std::string, double> weights;
};

namespace detail {

inline std::string emission_key(const std::string& f, int y) {
  return f + (y ? "#1" : "#0");
}

inline std::string transition_key(int prev, int cur) {
  std::string k = "T#";
  k += prev < 0 ? 'S' : static_cast<char>('0' + prev);
  k += static_cast<char>('0' + cur);
  return k;
}

inline double seq_weight(const std::map<std::string, double>& w,
                         const std::string& key) {
  auto it = w.find(key);
  return it == w.end() ? 0.0 : it->second;
}

inline double emission_score(const std::map<std::string, double>& w,
                             const FeatureVector& fv, int y) {
  double total = 0.0;
  for (const auto& [f, v] : fv.values) {
    total += seq_weight(w, emission_key(f, y)) * v;
  }
  return total;
}

inline std::vector<int> viterbi(const std::map<std::string, double>& w,
                                const std::vector<FeatureVector>& features) {
  const std::size_t n = features.size();
  std::vector<std::array<double, 2>> dp(n);
  std::vector<std::array<int, 2>> back(n);
  for (int y = 0; y < 2; ++y) {
    dp[0][y] = seq_weight(w, transition_key(-1, y)) +
               emission_score(w, features[0], y);
    back[0][y] = -1;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (int y = 0; y < 2; ++y) {
      double e = emission_score(w, features[i], y);
      double best = dp[i - 1][0] + seq_weight(w, transition_key(0, y));
      int arg = 0;
      double alt = dp[i - 1][1] + seq_weight(w, transition_key(1, y));
      if (alt > best) {
        best = alt;
        arg = 1;
      }
      dp[i][y] = best + e;
      back[i][y] = arg;
    }
  }
  std::vector<int> tags(n);
  tags[n - 1] = dp[n - 1][1] > dp[n - 1][0] ? 1 : 0;
  for (std::size_t i = n - 1; i > 0; --i) {
    tags[i - 1] = back[i][tags[i]];
  }
  return tags;
}

}  // namespace detail

inline SequenceModel train_sequence_labeler(
    const std::vector<std::pair<TaggedSentence, TargetAnnotation>>& corpus,
    const Lexicon& lex, unsigned epochs = 10, std::uint64_t seed = 42) {
  if (corpus.empty()) throw EmptyTrainingSetError();

  std::vector<std::vector<FeatureVector>> features(corpus.size());
  std::vector<std::vector<int>> gold(corpus.size());
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& [s, ann] = corpus[k];
    features[k].reserve(s.size());
    gold[k].resize(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      features[k].push_back(featurize(s, i, lex));
      if (ann.words.count(i)) gold[k][i] = 1;
    }
  }

  std::map<std::string, double> weights;
  std::map<std::string, double> totals;
  std::map<std::string, std::uint64_t> stamps;
  std::uint64_t clock = 0;
  auto update = [&](const std::string& key, double delta) {
    totals[key] += (clock - stamps[key]) * weights[key];
    stamps[key] = clock;
    weights[key] += delta;
  };

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);

  for (unsigned epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(order[i - 1], order[j]);
    }
    for (std::size_t k : order) {
      ++clock;
      std::vector<int> pred = detail::viterbi(weights, features[k]);
      if (pred == gold[k]) continue;
      int prev_gold = -1, prev_pred = -1;
      for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred[i] != gold[k][i]) {
          for (const auto& [f, v] : features[k][i].values) {
            update(detail::emission_key(f, gold[k][i]), v);
            update(detail::emission_key(f, pred[i]), -v);
          }
        }
        update(detail::transition_key(prev_gold, gold[k][i]), 1.0);
        update(detail::transition_key(prev_pred, pred[i]), -1.0);
        prev_gold = gold[k][i];
        prev_pred = pred[i];
      }
    }
  }

  SequenceModel model;
  for (const auto& [key, w] : weights) {
    double total = totals[key] + (clock - stamps[key]) * w;
    double avg = clock ? total / static_cast<double>(clock) : 0.0;
    if (avg != 0.0) model.weights[key] = avg;
  }
  return model;
}

inline TargetAnnotation decode_sequence(const SequenceModel& model,
                                        const TaggedSentence& s,
                                        const Lexicon& lex) {
  std::vector<FeatureVector> features;
  features.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    features.push_back(featurize(s, i, lex));
  }
  std::vector<int> tags = detail::viterbi(model.weights, features);
  TargetAnnotation out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == 1) out.words.insert(i);
  }
  return out;
}

inline TargetAnnotation baseline_sequence_labeler(
    const std::vector<std::pair<TaggedSentence, TargetAnnotation>>&
        train_corpus,
    const TaggedSentence& test_sentence, const Lexicon& lex,
    unsigned epochs = 10, std::uint64_t seed = 42) {
  SequenceModel model = train_sequence_labeler(train_corpus, lex, epochs,
                                               seed);
  return decode_sequence(model, test_sentence, lex);
}

}  // namespace sarct

#endif  // SARCT_SEQUENCE_HPP

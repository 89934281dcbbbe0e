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

#ifndef SARCT_STATISTICAL_HPP
#define SARCT_STATISTICAL_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/sentiment.hpp"
#include "sarct/target.hpp"
#include "sarct/token.hpp"

namespace sarct {

struct FeatureVector {
  std::map<std::string, double> values;
};

// Feature groups: (A) unigram identity, (B) POS of the current, previous,
// and next token with BOS/EOS sentinels, (C) word and trigram polarity,
// (D) capitalization count.
inline FeatureVector featurize(const TaggedSentence& s, std::size_t i,
                               const Lexicon& lex) {
  if (i >= s.size()) throw RangeError("token index out of bounds");
  FeatureVector fv;
  const Token& t = s.tokens[i];
  fv.values["u=" + t.lower] = 1.0;
  fv.values["p0=" + to_string(t.pos)] = 1.0;
  fv.values["p-1=" + (i > 0 ? to_string(s.tokens[i - 1].pos)
                            : std::string("BOS"))] = 1.0;
  fv.values["p+1=" + (i + 1 < s.size() ? to_string(s.tokens[i + 1].pos)
                                       : std::string("EOS"))] = 1.0;
  fv.values["pol"] = word_polarity(lex, t.lower);
  fv.values["tri"] = trigram_polarity(lex, s, i);
  fv.values["caps"] = static_cast<double>(t.capital_count);
  return fv;
}

struct WordInstance {
  std::string sentence_id;
  std::size_t token_index = 0;
  FeatureVector features;
  int label = 0;
};

// One instance per token; label 1 marks gold target membership. An Outside
// gold labels every word 0.
inline std::vector<WordInstance> decompose(const TaggedSentence& s,
                                           const TargetAnnotation& gold,
                                           const Lexicon& lex,
                                           const std::string& sentence_id =
                                               "") {
  for (std::size_t i : gold.words) {
    if (i >= s.size()) {
      throw InvalidAnnotationError("gold index " + std::to_string(i) +
                                   " out of bounds");
    }
  }
  std::vector<WordInstance> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    WordInstance inst;
    inst.sentence_id = sentence_id;
    inst.token_index = i;
    inst.features = featurize(s, i, lex);
    inst.label = gold.words.count(i) ? 1 : 0;
    out.push_back(std::move(inst));
  }
  return out;
}

struct TrainConfig {
  unsigned epochs = 50;
  double learning_rate = 0.1;
  double l2 = 1e-5;
  double positive_weight = 0.0;  // 0 = inverse label ratio
  double threshold = 0.0;
  std::uint64_t seed = 42;
};

struct LinearModel {
  std::map<std::string, double> weights;
  double bias = 0.0;
  double decision_threshold = 0.0;
};

inline double score(const LinearModel& m, const FeatureVector& fv) {
  double total = m.bias;
  for (const auto& [f, v] : fv.values) {
    auto it = m.weights.find(f);
    if (it != m.weights.end()) total += it->second * v;
  }
  return total;
}

// Strictly greater than the threshold; an exact hit stays 0.
inline int predict_word(const LinearModel& m, const FeatureVector& fv) {
  return score(m, fv) > m.decision_threshold ? 1 : 0;
}

// Hinge-loss subgradient descent with class weighting; target words are
// rare, so positives are upweighted by the inverse label ratio by default.
inline LinearModel train(const std::vector<WordInstance>& instances,
                         const TrainConfig& config = TrainConfig{}) {
  if (instances.empty()) throw EmptyTrainingSetError();

  double pos_weight = config.positive_weight;
  if (pos_weight <= 0.0) {
    std::size_t pos = 0;
    for (const auto& inst : instances) pos += inst.label;
    pos_weight = pos == 0 ? 1.0
                          : static_cast<double>(instances.size() - pos) /
                                static_cast<double>(pos);
    if (pos_weight <= 0.0) pos_weight = 1.0;
  }

  LinearModel model;
  model.decision_threshold = config.threshold;
  std::vector<std::size_t> order(instances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(config.seed);

  for (unsigned epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(order[i - 1], order[j]);
    }
    for (std::size_t idx : order) {
      const WordInstance& inst = instances[idx];
      double y = inst.label ? 1.0 : -1.0;
      double margin = y * score(model, inst.features);
      if (margin >= 1.0) continue;
      double cw = inst.label ? pos_weight : 1.0;
      double step = config.learning_rate * cw * y;
      for (const auto& [f, v] : inst.features.values) {
        double& w = model.weights[f];
        w = w * (1.0 - config.learning_rate * config.l2) + step * v;
      }
      model.bias += step;
    }
  }
  return model;
}

// Candidate = words predicted 1; none at all is an outside vote.
inline CandidateSet extract_candidates(const LinearModel& m,
                                       const TaggedSentence& s,
                                       const Lexicon& lex) {
  CandidateSet cs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (predict_word(m, featurize(s, i, lex)) == 1) {
      cs.word_indices.insert(i);
    }
  }
  if (cs.word_indices.empty()) cs.outside_vote = true;
  return cs;
}

inline void save_linear_model(const LinearModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileNotFoundError(path);
  out << "sarct-model v1\n";
  char buf[64];
  for (const auto& [f, w] : m.weights) {
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    out << f << '\t' << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "%.17g", m.bias);
  out << "__bias__\t" << buf << '\n';
}

inline LinearModel load_linear_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelNotFoundError(path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty model file", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "sarct-model v1") {
    throw ParseError("bad header `" + line + "'", 1);
  }
  LinearModel m;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected `feature<TAB>weight'", lineno);
    }
    std::string feature = line.substr(0, tab);
    std::string wtext = line.substr(tab + 1);
    char* end = nullptr;
    double w = std::strtod(wtext.c_str(), &end);
    if (end == wtext.c_str() || *end != '\0') {
      throw ParseError("bad weight `" + wtext + "'", lineno);
    }
    if (feature == "__bias__") {
      m.bias = w;
    } else {
      m.weights[feature] = w;
    }
  }
  return m;
}

}  // namespace sarct

#endif  // SARCT_STATISTICAL_HPP

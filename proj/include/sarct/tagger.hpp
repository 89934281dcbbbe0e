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

#ifndef SARCT_TAGGER_HPP
#define SARCT_TAGGER_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sarct/errors.hpp"
#include "sarct/pos.hpp"
#include "sarct/token.hpp"
#include "sarct/tokenize.hpp"

namespace sarct {

// Closed-class words plus enough open-class anchors to tag everyday
// sarcastic tweets without a trained model.
inline const std::map<std::string, Pos>& builtin_lexicon() {
  static const std::map<std::string, Pos> kLex = {
      // pronouns
      {"i", Pos::PRP},        {"you", Pos::PRP},      {"he", Pos::PRP},
      {"she", Pos::PRP},      {"it", Pos::PRP},       {"we", Pos::PRP},
      {"they", Pos::PRP},     {"me", Pos::PRP},       {"him", Pos::PRP},
      {"us", Pos::PRP},       {"them", Pos::PRP},     {"myself", Pos::PRP},
      {"yourself", Pos::PRP}, {"himself", Pos::PRP},  {"herself", Pos::PRP},
      {"itself", Pos::PRP},   {"ourselves", Pos::PRP},{"themselves", Pos::PRP},
      {"mine", Pos::PRP},     {"yours", Pos::PRP},    {"hers", Pos::PRP},
      {"theirs", Pos::PRP},   {"someone", Pos::PRP},  {"everyone", Pos::PRP},
      {"anyone", Pos::PRP},   {"nothing", Pos::PRP},  {"everything", Pos::PRP},
      {"something", Pos::PRP},
      {"my", Pos::PRP_S},     {"your", Pos::PRP_S},   {"his", Pos::PRP_S},
      {"her", Pos::PRP_S},    {"its", Pos::PRP_S},    {"our", Pos::PRP_S},
      {"their", Pos::PRP_S},
      // determiners
      {"the", Pos::DT},       {"a", Pos::DT},         {"an", Pos::DT},
      {"this", Pos::DT},      {"that", Pos::DT},      {"these", Pos::DT},
      {"those", Pos::DT},     {"some", Pos::DT},      {"any", Pos::DT},
      {"no", Pos::DT},        {"every", Pos::DT},     {"each", Pos::DT},
      {"another", Pos::DT},   {"either", Pos::DT},    {"neither", Pos::DT},
      {"both", Pos::DT},
      {"all", Pos::PDT},      {"such", Pos::PDT},     {"half", Pos::PDT},
      // prepositions and subordinators
      {"in", Pos::IN},        {"on", Pos::IN},        {"at", Pos::IN},
      {"by", Pos::IN},        {"for", Pos::IN},       {"with", Pos::IN},
      {"about", Pos::IN},     {"against", Pos::IN},   {"between", Pos::IN},
      {"into", Pos::IN},      {"through", Pos::IN},   {"during", Pos::IN},
      {"before", Pos::IN},    {"after", Pos::IN},     {"above", Pos::IN},
      {"below", Pos::IN},     {"from", Pos::IN},      {"of", Pos::IN},
      {"off", Pos::IN},       {"over", Pos::IN},      {"under", Pos::IN},
      {"if", Pos::IN},        {"because", Pos::IN},   {"as", Pos::IN},
      {"until", Pos::IN},     {"while", Pos::IN},     {"since", Pos::IN},
      {"than", Pos::IN},      {"like", Pos::IN},      {"near", Pos::IN},
      {"upon", Pos::IN},      {"without", Pos::IN},   {"behind", Pos::IN},
      {"around", Pos::IN},
      {"up", Pos::RP},        {"out", Pos::RP},       {"down", Pos::RP},
      // conjunctions
      {"and", Pos::CC},       {"but", Pos::CC},       {"or", Pos::CC},
      {"nor", Pos::CC},       {"&", Pos::CC},
      {"to", Pos::TO},        {"there", Pos::EX},
      // modals, including clitic-split stems
      {"can", Pos::MD},       {"could", Pos::MD},     {"will", Pos::MD},
      {"would", Pos::MD},     {"shall", Pos::MD},     {"should", Pos::MD},
      {"may", Pos::MD},       {"might", Pos::MD},     {"must", Pos::MD},
      {"ca", Pos::MD},        {"wo", Pos::MD},        {"sha", Pos::MD},
      {"'ll", Pos::MD},       {"'d", Pos::MD},
      // wh-words
      {"who", Pos::WP},       {"whom", Pos::WP},      {"what", Pos::WP},
      {"whose", Pos::WP_S},   {"which", Pos::WDT},
      {"when", Pos::WRB},     {"where", Pos::WRB},    {"why", Pos::WRB},
      {"how", Pos::WRB},
      // interjections
      {"oh", Pos::UH},        {"yeah", Pos::UH},      {"yep", Pos::UH},
      {"wow", Pos::UH},       {"hey", Pos::UH},       {"ok", Pos::UH},
      {"okay", Pos::UH},      {"yes", Pos::UH},       {"oops", Pos::UH},
      {"gee", Pos::UH},       {"well", Pos::UH},      {"please", Pos::UH},
      // be / have / do
      {"be", Pos::VB},        {"am", Pos::VBP},       {"is", Pos::VBZ},
      {"are", Pos::VBP},      {"was", Pos::VBD},      {"were", Pos::VBD},
      {"been", Pos::VBN},     {"being", Pos::VBG},    {"'m", Pos::VBP},
      {"'re", Pos::VBP},      {"'s", Pos::VBZ},       {"'ve", Pos::VBP},
      {"have", Pos::VBP},     {"has", Pos::VBZ},      {"had", Pos::VBD},
      {"having", Pos::VBG},   {"do", Pos::VBP},       {"does", Pos::VBZ},
      {"did", Pos::VBD},      {"doing", Pos::VBG},    {"done", Pos::VBN},
      {"n't", Pos::RB},       {"not", Pos::RB},
      // frequent verbs
      {"love", Pos::VBP},     {"loves", Pos::VBZ},    {"loved", Pos::VBD},
      {"hate", Pos::VBP},     {"hates", Pos::VBZ},    {"hated", Pos::VBD},
      {"enjoy", Pos::VBP},    {"adore", Pos::VBP},    {"want", Pos::VBP},
      {"wanted", Pos::VBD},   {"wait", Pos::VB},      {"wake", Pos::VB},
      {"find", Pos::VB},      {"get", Pos::VB},       {"got", Pos::VBD},
      {"go", Pos::VB},        {"went", Pos::VBD},     {"goes", Pos::VBZ},
      {"know", Pos::VBP},     {"think", Pos::VBP},    {"say", Pos::VBP},
      {"said", Pos::VBD},     {"see", Pos::VB},       {"seen", Pos::VBN},
      {"look", Pos::VB},      {"make", Pos::VB},      {"made", Pos::VBD},
      {"stop", Pos::VB},      {"tell", Pos::VB},      {"tells", Pos::VBZ},
      {"told", Pos::VBD},     {"thank", Pos::VB},     {"feel", Pos::VBP},
      {"feels", Pos::VBZ},    {"mean", Pos::VBP},     {"typed", Pos::VBD},
      {"recommend", Pos::VBP},{"ignore", Pos::VB},    {"keep", Pos::VB},
      {"suppose", Pos::VBP},  {"handle", Pos::VB},    {"use", Pos::VB},
      {"send", Pos::VB},      {"need", Pos::VBP},     {"needs", Pos::VBZ},
      {"ate", Pos::VBD},      {"eat", Pos::VB},       {"heats", Pos::VBZ},
      {"heat", Pos::VB},      {"lasts", Pos::VBZ},    {"come", Pos::VB},
      {"take", Pos::VB},      {"give", Pos::VB},      {"put", Pos::VB},
      {"works", Pos::VBZ},    {"lets", Pos::VBZ},     {"let", Pos::VB},
      // adverbs
      {"so", Pos::RB},        {"just", Pos::RB},      {"indeed", Pos::RB},
      {"very", Pos::RB},      {"too", Pos::RB},       {"really", Pos::RB},
      {"always", Pos::RB},    {"never", Pos::RB},     {"again", Pos::RB},
      {"ever", Pos::RB},      {"even", Pos::RB},      {"here", Pos::RB},
      {"now", Pos::RB},       {"then", Pos::RB},      {"anyway", Pos::RB},
      {"early", Pos::RB},     {"away", Pos::RB},      {"back", Pos::RB},
      {"still", Pos::RB},     {"already", Pos::RB},   {"also", Pos::RB},
      {"soon", Pos::RB},      {"tonight", Pos::RB},   {"today", Pos::NN},
      {"more", Pos::RBR},     {"less", Pos::RBR},     {"most", Pos::RBS},
      {"least", Pos::RBS},
      // adjectives
      {"happy", Pos::JJ},     {"good", Pos::JJ},      {"great", Pos::JJ},
      {"nice", Pos::JJ},      {"amazing", Pos::JJ},   {"awesome", Pos::JJ},
      {"wonderful", Pos::JJ}, {"fantastic", Pos::JJ}, {"excited", Pos::JJ},
      {"proud", Pos::JJ},     {"realistic", Pos::JJ}, {"original", Pos::JJ},
      {"favorite", Pos::JJ},  {"right", Pos::JJ},     {"wrong", Pos::JJ},
      {"bad", Pos::JJ},       {"terrible", Pos::JJ},  {"horrible", Pos::JJ},
      {"new", Pos::JJ},       {"old", Pos::JJ},       {"exact", Pos::JJ},
      {"same", Pos::JJ},      {"ready", Pos::JJ},     {"sure", Pos::JJ},
      {"sorry", Pos::JJ},     {"glad", Pos::JJ},      {"late", Pos::JJ},
      {"busy", Pos::JJ},      {"long", Pos::JJ},      {"little", Pos::JJ},
      {"big", Pos::JJ},       {"much", Pos::JJ},      {"many", Pos::JJ},
      {"few", Pos::JJ},       {"own", Pos::JJ},       {"other", Pos::JJ},
      {"free", Pos::JJ},      {"full", Pos::JJ},      {"dear", Pos::JJ},
      {"best", Pos::JJS},     {"worst", Pos::JJS},    {"better", Pos::JJR},
      {"worse", Pos::JJR},
      // nouns that would otherwise be mistagged
      {"night", Pos::NN},     {"day", Pos::NN},       {"time", Pos::NN},
      {"bus", Pos::NN},       {"job", Pos::NN},       {"work", Pos::NN},
      {"home", Pos::NN},      {"life", Pos::NN},      {"fun", Pos::NN},
      {"class", Pos::NN},     {"school", Pos::NN},    {"week", Pos::NN},
      {"morning", Pos::NN},   {"teacher", Pos::NN},   {"update", Pos::NN},
      {"phone", Pos::NN},     {"people", Pos::NNS},   {"thanks", Pos::NNS},
      {"guys", Pos::NNS},     {"one", Pos::CD},       {"two", Pos::CD},
      {"three", Pos::CD},
  };
  return kLex;
}

// Words safe to rule out as named entities when they open a sentence.
inline const std::set<std::string>& builtin_common_words() {
  static const std::set<std::string> kCommon = [] {
    std::set<std::string> s;
    for (const auto& [word, tag] : builtin_lexicon()) s.insert(word);
    return s;
  }();
  return kCommon;
}

namespace detail {

inline bool is_all_digits(const std::string& w) {
  bool digit = false;
  for (char c : w) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '%') {
      return false;
    }
  }
  return digit;
}

inline Pos punct_tag(const std::string& w) {
  char c = w[0];
  if (c == '.' || c == '!' || c == '?') return Pos::PERIOD;
  if (c == ',') return Pos::COMMA;
  if (c == ':' || c == ';' || c == '-') return Pos::COLON;
  if (c == '\'' || c == '"' || c == '`') return Pos::QUOTE;
  if (c == '(' || c == '[' || c == '{') return Pos::LRB;
  if (c == ')' || c == ']' || c == '}') return Pos::RRB;
  if (c == '$') return Pos::DOLLAR;
  if (c == '#') return Pos::HASH;
  return Pos::SYM;
}

inline bool ends_with(const std::string& w, std::string_view suf) {
  return w.size() > suf.size() &&
         w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

inline Pos suffix_guess(const std::string& lower) {
  if (ends_with(lower, "ing")) return Pos::VBG;
  if (ends_with(lower, "ed")) return Pos::VBN;
  if (ends_with(lower, "ly")) return Pos::RB;
  if (ends_with(lower, "ful") || ends_with(lower, "ous") ||
      ends_with(lower, "ble") || ends_with(lower, "ive") ||
      ends_with(lower, "ish") || ends_with(lower, "ic")) {
    return Pos::JJ;
  }
  if (ends_with(lower, "est")) return Pos::JJS;
  if (lower.size() > 2 && lower.back() == 's' && !ends_with(lower, "ss") &&
      !ends_with(lower, "us") && !ends_with(lower, "is")) {
    return Pos::NNS;
  }
  return Pos::NN;
}

inline bool is_capitalized(const std::string& surface) {
  return !surface.empty() &&
         std::isupper(static_cast<unsigned char>(surface[0]));
}

}  // namespace detail

// Lexicon + suffix + context heuristics; no model file needed.
inline std::vector<Pos> builtin_tag(const std::vector<Token>& tokens) {
  const auto& lex = builtin_lexicon();
  std::vector<Pos> tags(tokens.size(), Pos::NN);
  std::vector<bool> known(tokens.size(), false);

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (is_punct_surface(t.surface)) {
      tags[i] = detail::punct_tag(t.surface);
      known[i] = true;
      continue;
    }
    if (detail::is_all_digits(t.surface)) {
      tags[i] = Pos::CD;
      known[i] = true;
      continue;
    }
    auto it = lex.find(t.lower);
    bool mid_sentence_cap =
        detail::is_capitalized(t.surface) && !sentence_initial(tokens, i);
    if (it != lex.end()) {
      known[i] = true;
      // mid-sentence capitals override open-class lexicon entries
      if (mid_sentence_cap && it->second != Pos::PRP &&
          it->second != Pos::PRP_S && !is_closed_class(it->second)) {
        tags[i] = Pos::NNP;
      } else {
        tags[i] = it->second;
      }
      continue;
    }
    if (detail::is_capitalized(t.surface)) {
      tags[i] = Pos::NNP;
      known[i] = true;
      continue;
    }
    tags[i] = detail::suffix_guess(t.lower);
  }

  // after TO or a modal, an unguessed noun or a known base verb reads as VB
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tags[i] != Pos::TO && tags[i] != Pos::MD) continue;
    std::size_t j = i + 1;
    while (j < tokens.size() &&
           (tags[j] == Pos::RB || tokens[j].lower == "n't")) {
      ++j;
    }
    if (j >= tokens.size()) continue;
    if (!known[j] && (tags[j] == Pos::NN || tags[j] == Pos::NNS)) {
      tags[j] = Pos::VB;
    } else if (known[j] && tags[j] == Pos::VBP) {
      tags[j] = Pos::VB;
    }
  }
  // a lexicon present-tense verb directly after IN/DT/PRP$/JJ is a noun use
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tags[i] != Pos::VBP) continue;
    Pos prev = tags[i - 1];
    if (prev == Pos::IN || prev == Pos::DT || prev == Pos::PRP_S ||
        prev == Pos::JJ) {
      tags[i] = Pos::NN;
    }
  }
  return tags;
}

// Trainable averaged perceptron, greedy left to right. An empty model
// falls back to the builtin heuristics, which keeps zero-setup usage and
// file round-trips on the same code path.
struct TaggerModel {
  std::map<std::string, std::map<std::string, double>> weights;

  bool is_builtin() const { return weights.empty(); }
};

inline TaggerModel builtin_tagger_model() { return TaggerModel{}; }

namespace detail {

inline std::vector<std::string> tagger_features(
    const std::vector<std::string>& lowers,
    const std::vector<std::string>& surfaces, std::size_t i,
    const std::string& prev_tag, const std::string& prev2_tag) {
  const std::string& w = lowers[i];
  std::vector<std::string> fs;
  fs.reserve(10);
  fs.push_back("b");
  fs.push_back("w=" + w);
  if (w.size() >= 3) fs.push_back("s3=" + w.substr(w.size() - 3));
  if (w.size() >= 2) fs.push_back("s2=" + w.substr(w.size() - 2));
  fs.push_back("cap=" + std::string(is_capitalized(surfaces[i]) ? "1" : "0"));
  fs.push_back("pw=" + (i > 0 ? lowers[i - 1] : std::string("-BOS-")));
  fs.push_back("nw=" +
               (i + 1 < lowers.size() ? lowers[i + 1] : std::string("-EOS-")));
  fs.push_back("pt=" + prev_tag);
  fs.push_back("ppt=" + prev2_tag);
  return fs;
}

inline std::string argmax_tag(
    const std::map<std::string, std::map<std::string, double>>& weights,
    const std::set<std::string>& tagset, const std::vector<std::string>& fs) {
  std::map<std::string, double> scores;
  for (const auto& f : fs) {
    auto it = weights.find(f);
    if (it == weights.end()) continue;
    for (const auto& [tag, w] : it->second) scores[tag] += w;
  }
  std::string best = *tagset.begin();
  double best_score = scores.count(best) ? scores[best] : 0.0;
  for (const auto& tag : tagset) {
    double sc = scores.count(tag) ? scores[tag] : 0.0;
    if (sc > best_score) {
      best = tag;
      best_score = sc;
    }
  }
  return best;
}

}  // namespace detail

// corpus: (words, tag names) pairs. Deterministic for a fixed seed.
inline TaggerModel train_tagger(
    const std::vector<std::pair<std::vector<std::string>,
                                std::vector<std::string>>>& corpus,
    unsigned epochs = 8, std::uint64_t seed = 42) {
  if (corpus.empty()) throw EmptyTrainingSetError();
  std::set<std::string> tagset;
  for (const auto& [words, tags] : corpus) {
    if (words.size() != tags.size() || words.empty()) {
      throw InvalidAnnotationError("word/tag length mismatch");
    }
    for (const auto& t : tags) {
      if (!pos_from_string(t)) throw InvalidTagError(t);
      tagset.insert(t);
    }
  }

  std::map<std::string, std::map<std::string, double>> weights;
  std::map<std::string, std::map<std::string, double>> totals;
  std::map<std::string, std::map<std::string, std::uint64_t>> stamps;
  std::uint64_t clock = 0;

  auto update = [&](const std::string& f, const std::string& tag,
                    double delta) {
    totals[f][tag] += (clock - stamps[f][tag]) * weights[f][tag];
    stamps[f][tag] = clock;
    weights[f][tag] += delta;
  };

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);

  for (unsigned epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(order[i - 1], order[j]);
    }
    for (std::size_t idx : order) {
      const auto& [words, tags] = corpus[idx];
      std::vector<std::string> lowers(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        lowers[i] = fold_case(words[i]);
      }
      std::string prev = "-START-", prev2 = "-START2-";
      for (std::size_t i = 0; i < words.size(); ++i) {
        ++clock;
        auto fs = detail::tagger_features(lowers, words, i, prev, prev2);
        std::string guess = detail::argmax_tag(weights, tagset, fs);
        if (guess != tags[i]) {
          for (const auto& f : fs) {
            update(f, tags[i], 1.0);
            update(f, guess, -1.0);
          }
        }
        prev2 = prev;
        prev = guess;
      }
    }
  }

  TaggerModel model;
  for (const auto& [f, by_tag] : weights) {
    for (const auto& [tag, w] : by_tag) {
      double total = totals[f][tag] + (clock - stamps[f][tag]) * w;
      double avg = clock ? total / static_cast<double>(clock) : 0.0;
      if (avg != 0.0) model.weights[f][tag] = avg;
    }
  }
  if (model.weights.empty()) {
    // degenerate but trained: keep a marker so the model stays non-builtin
    model.weights["b"][*tagset.begin()] = 0.0;
  }
  return model;
}

inline bool sentence_is_question(const std::vector<Token>& tokens) {
  static const std::set<std::string> kLeads = {
      "what", "who",  "whom", "whose", "which", "when",   "where", "why",
      "how",  "do",   "does", "did",   "can",   "could",  "will",  "would",
      "should", "is", "are",  "was",   "were"};
  if (tokens.empty()) return false;
  if (tokens.back().surface == "?") return true;
  return kLeads.count(tokens.front().lower) > 0;
}

inline TaggedSentence pos_tag(std::vector<Token> tokens,
                              const TaggerModel& model,
                              const std::string& original_text = "") {
  if (tokens.empty()) throw EmptyInputError();
  if (model.is_builtin()) {
    std::vector<Pos> tags = builtin_tag(tokens);
    for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].pos = tags[i];
  } else {
    std::set<std::string> tagset;
    for (const auto& [f, by_tag] : model.weights) {
      for (const auto& [tag, w] : by_tag) tagset.insert(tag);
    }
    std::vector<std::string> lowers(tokens.size()), surfaces(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      lowers[i] = tokens[i].lower;
      surfaces[i] = tokens[i].surface;
    }
    std::string prev = "-START-", prev2 = "-START2-";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto fs = detail::tagger_features(lowers, surfaces, i, prev, prev2);
      std::string tag = detail::argmax_tag(model.weights, tagset, fs);
      auto parsed = pos_from_string(tag);
      tokens[i].pos = parsed ? *parsed : Pos::NN;
      prev2 = prev;
      prev = tag;
    }
  }

  TaggedSentence s;
  if (original_text.empty()) {
    std::string joined;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined += ' ';
      joined += t.surface;
    }
    s.text = joined;
  } else {
    s.text = original_text;
  }
  s.is_question = sentence_is_question(tokens);
  s.tokens = std::move(tokens);
  return s;
}

inline TaggedSentence tag_text(const std::string& text,
                               const TaggerModel& model) {
  return pos_tag(tokenize(text), model, text);
}

inline void save_tagger_model(const TaggerModel& model,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileNotFoundError(path);
  for (const auto& [f, by_tag] : model.weights) {
    for (const auto& [tag, w] : by_tag) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", w);
      out << f << '\t' << tag << '\t' << buf << '\n';
    }
  }
}

inline TaggerModel load_tagger_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelNotFoundError(path);
  TaggerModel model;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw ParseError("expected `feature<TAB>tag<TAB>weight'", lineno);
    }
    std::string feature = line.substr(0, t1);
    std::string tag = line.substr(t1 + 1, t2 - t1 - 1);
    if (!pos_from_string(tag)) throw InvalidTagError(tag);
    std::string wtext = line.substr(t2 + 1);
    char* end = nullptr;
    double w = std::strtod(wtext.c_str(), &end);
    if (end == wtext.c_str() || *end != '\0') {
      throw ParseError("bad weight `" + wtext + "'", lineno);
    }
    model.weights[feature][tag] = w;
  }
  return model;
}

}  // namespace sarct

#endif  // SARCT_TAGGER_HPP

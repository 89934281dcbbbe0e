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

#ifndef SARCT_TESTS_HELPERS_HPP
#define SARCT_TESTS_HELPERS_HPP

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarct/sarct.hpp"

namespace testutil {

inline std::string data_dir() { return SARCT_DATA_DIR; }

inline std::string data_path(const std::string& name) {
  return data_dir() + "/" + name;
}

inline const sarct::TaggerModel& tagger() {
  static const sarct::TaggerModel model = sarct::builtin_tagger_model();
  return model;
}

inline const sarct::Lexicon& lexicon() {
  static const sarct::Lexicon lex =
      sarct::load_lexicon(data_path("sentiment_lexicon.tsv"));
  return lex;
}

inline const std::vector<sarct::Document>& fixture_docs() {
  static const std::vector<sarct::Document> docs =
      sarct::load_corpus(data_path("fixture_corpus.tsv"));
  return docs;
}

inline const sarct::AnnotatedCorpus& fixture() {
  static const sarct::AnnotatedCorpus corpus =
      sarct::prepare_corpus(fixture_docs(), tagger());
  return corpus;
}

inline sarct::TaggedSentence tag(const std::string& text) {
  return sarct::tag_text(text, tagger());
}

// Index of the nth occurrence of a surface form, case sensitive.
inline std::size_t idx(const sarct::TaggedSentence& s,
                       const std::string& surface, std::size_t nth = 0) {
  std::size_t seen = 0;
  for (const auto& t : s.tokens) {
    if (t.surface == surface) {
      if (seen == nth) return t.index;
      ++seen;
    }
  }
  throw std::runtime_error("token not found: " + surface);
}

inline std::vector<std::string> surfaces(const sarct::TaggedSentence& s,
                                         const std::set<std::size_t>& ids) {
  std::vector<std::string> out;
  for (std::size_t i : ids) out.push_back(s.tokens.at(i).surface);
  return out;
}

// A temp file that deletes itself; content written on construction.
struct TempFile {
  std::string path;

  explicit TempFile(const std::string& content,
                    const std::string& suffix = ".tsv") {
    static int counter = 0;
    path = std::string("sarct_test_") + std::to_string(counter++) + suffix;
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }

  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace testutil

#endif  // SARCT_TESTS_HELPERS_HPP

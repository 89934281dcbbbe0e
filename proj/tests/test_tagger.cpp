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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using sarct::Pos;
using sarct::TaggedSentence;
using sarct::train_tagger;

namespace {

std::vector<std::string> tags_of(const TaggedSentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(sarct::to_string(t.pos));
  return out;
}

}  // namespace

TEST_CASE("builtin tagger matches reference tags on fixture sentences") {
  CHECK(tags_of(testutil::tag("I love being ignored.")) ==
        std::vector<std::string>{"PRP", "VBP", "VBG", "VBN", "."});
  CHECK(tags_of(testutil::tag("this jacket")) ==
        std::vector<std::string>{"DT", "NN"});
}

TEST_CASE("unknown words fall back to NN") {
  auto s = testutil::tag("zzxqv");
  CHECK(s.tokens[0].pos == Pos::NN);
}

TEST_CASE("tagging is total on arbitrary tokens") {
  auto s = testutil::tag("@@ 77 Qqq don't ... ??");
  for (const auto& t : s.tokens) {
    CHECK(!sarct::to_string(t.pos).empty());
  }
}

TEST_CASE("train_tagger memorizes a single sentence") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      corpus = {{{"the", "glorm", "snibbed"}, {"DT", "NN", "VBD"}}};
  auto model = train_tagger(corpus);
  auto s = sarct::pos_tag(sarct::tokenize("the glorm snibbed"), model);
  CHECK(tags_of(s) == std::vector<std::string>{"DT", "NN", "VBD"});
}

TEST_CASE("train_tagger rejects bad corpora") {
  using Corpus = std::vector<
      std::pair<std::vector<std::string>, std::vector<std::string>>>;
  CHECK_THROWS_AS(train_tagger(Corpus{}), sarct::EmptyTrainingSetError);
  CHECK_THROWS_AS(train_tagger(Corpus{{{"a"}, {"XX"}}}),
                  sarct::InvalidTagError);
  CHECK_THROWS_AS(train_tagger(Corpus{{{"a", "b"}, {"DT"}}}),
                  sarct::InvalidAnnotationError);
}

TEST_CASE("train_tagger is deterministic under a fixed seed") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      corpus = {{{"the", "cat", "sat"}, {"DT", "NN", "VBD"}},
                {{"dogs", "bark"}, {"NNS", "VBP"}}};
  auto a = train_tagger(corpus, 8, 42);
  auto b = train_tagger(corpus, 8, 42);
  CHECK(a.weights == b.weights);
}

TEST_CASE("question detection follows the terminal and lead-word rules") {
  CHECK(testutil::tag("Could life be more fun?").is_question);
  CHECK(testutil::tag("Could you stop").is_question);
  CHECK_FALSE(testutil::tag("I love being ignored.").is_question);
  CHECK_FALSE(testutil::tag("This is fun.").is_question);
}

TEST_CASE("tagger model files round trip") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      corpus = {{{"the", "cat", "sat"}, {"DT", "NN", "VBD"}}};
  auto model = train_tagger(corpus);
  testutil::TempFile f("", ".tsv");
  sarct::save_tagger_model(model, f.path);
  auto loaded = sarct::load_tagger_model(f.path);
  CHECK(loaded.weights == model.weights);
  CHECK_THROWS_AS(sarct::load_tagger_model("no_such_tagger.tsv"),
                  sarct::ModelNotFoundError);
}

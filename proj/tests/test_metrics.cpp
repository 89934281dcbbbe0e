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

#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using Catch::Approx;
using sarct::TargetAnnotation;
using sarct::dice;
using sarct::exact_match;

namespace {

TargetAnnotation ann(std::set<std::size_t> ids) {
  return TargetAnnotation::of(std::move(ids));
}

TargetAnnotation random_annotation(std::mt19937_64& rng) {
  if (rng() % 4 == 0) return TargetAnnotation::outside();
  std::set<std::size_t> ids;
  std::size_t n = 1 + rng() % 5;
  for (std::size_t i = 0; i < n; ++i) ids.insert(rng() % 8);
  return TargetAnnotation::of(std::move(ids));
}

}  // namespace

TEST_CASE("exact_match is set equality") {
  CHECK(exact_match(ann({1, 2}), ann({1, 2})) == 1);
  CHECK(exact_match(ann({1}), ann({1, 2})) == 0);
  CHECK(exact_match(TargetAnnotation::outside(),
                    TargetAnnotation::outside()) == 1);
}

TEST_CASE("dice follows the overlap formula with an Outside pseudo-element") {
  CHECK(dice(ann({1, 2}), ann({1, 2})) == 1.0);
  CHECK(dice(ann({1}), ann({1, 2})) == Approx(2.0 / 3.0));
  CHECK(dice(TargetAnnotation::outside(), ann({1})) == 0.0);
  CHECK(dice(ann({1}), TargetAnnotation::outside()) == 0.0);
  CHECK(dice(TargetAnnotation::outside(), TargetAnnotation::outside()) ==
        1.0);
  CHECK(dice(ann({1, 2}), ann({3, 4})) == 0.0);
}

TEST_CASE("metric algebra holds over generated pairs") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int round = 0; round < 1500; ++round) {
    TargetAnnotation p = random_annotation(rng);
    TargetAnnotation g = random_annotation(rng);
    double d = dice(p, g);
    int em = exact_match(p, g);

    REQUIRE(d >= 0.0);
    REQUIRE(d <= 1.0);
    REQUIRE(d == dice(g, p));
    REQUIRE((d == 1.0) == (p == g));
    if (em == 1) REQUIRE(d == 1.0);
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("EM equals DS when every gold is Outside") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 1000; ++round) {
    TargetAnnotation p = random_annotation(rng);
    TargetAnnotation g = TargetAnnotation::outside();
    REQUIRE(static_cast<double>(exact_match(p, g)) == dice(p, g));
  }
}

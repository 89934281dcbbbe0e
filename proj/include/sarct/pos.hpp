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

#ifndef SARCT_POS_HPP
#define SARCT_POS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace sarct {

// Penn Treebank tagset plus the usual punctuation tags.
enum class Pos {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD,
  NN, NNS, NNP, NNPS, PDT, POS, PRP, PRP_S,
  RB, RBR, RBS, RP, SYM, TO, UH,
  VB, VBD, VBG, VBN, VBP, VBZ,
  WDT, WP, WP_S, WRB,
  PERIOD, COMMA, COLON, QUOTE, LRB, RRB, DOLLAR, HASH,
};

namespace detail {
inline constexpr std::array<std::string_view, 44> kPosNames = {
    "CC",  "CD",  "DT",  "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",
    "MD",  "NN",  "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$",
    "RB",  "RBR", "RBS", "RP",  "SYM", "TO",  "UH",
    "VB",  "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP",  "WP$", "WRB",
    ".",   ",",   ":",   "''",  "-LRB-", "-RRB-", "$", "#",
};
}  // namespace detail

inline std::string to_string(Pos p) {
  return std::string(detail::kPosNames[static_cast<std::size_t>(p)]);
}

inline std::optional<Pos> pos_from_string(std::string_view name) {
  for (std::size_t i = 0; i < detail::kPosNames.size(); ++i) {
    if (detail::kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

inline bool is_noun(Pos p) {
  return p == Pos::NN || p == Pos::NNS || p == Pos::NNP || p == Pos::NNPS;
}

inline bool is_common_noun(Pos p) { return p == Pos::NN || p == Pos::NNS; }

inline bool is_verb(Pos p) {
  switch (p) {
    case Pos::VB: case Pos::VBD: case Pos::VBG:
    case Pos::VBN: case Pos::VBP: case Pos::VBZ: case Pos::MD:
      return true;
    default:
      return false;
  }
}

// Finite forms that can head a main clause.
inline bool is_finite_verb(Pos p) {
  return p == Pos::VBP || p == Pos::VBZ || p == Pos::VBD || p == Pos::MD;
}

inline bool is_adjective(Pos p) {
  return p == Pos::JJ || p == Pos::JJR || p == Pos::JJS;
}

inline bool is_adverb(Pos p) {
  return p == Pos::RB || p == Pos::RBR || p == Pos::RBS;
}

inline bool is_pronoun(Pos p) { return p == Pos::PRP || p == Pos::PRP_S; }

inline bool is_closed_class(Pos p) {
  switch (p) {
    case Pos::CC: case Pos::DT: case Pos::EX: case Pos::IN: case Pos::MD:
    case Pos::PDT: case Pos::POS: case Pos::PRP: case Pos::PRP_S:
    case Pos::RP: case Pos::TO: case Pos::WDT: case Pos::WP: case Pos::WP_S:
    case Pos::WRB:
      return true;
    default:
      return false;
  }
}

inline bool is_punct(Pos p) {
  switch (p) {
    case Pos::PERIOD: case Pos::COMMA: case Pos::COLON: case Pos::QUOTE:
    case Pos::LRB: case Pos::RRB: case Pos::DOLLAR: case Pos::HASH:
    case Pos::SYM:
      return true;
    default:
      return false;
  }
}

}  // namespace sarct

#endif  // SARCT_POS_HPP

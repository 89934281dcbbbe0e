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

#ifndef SARCT_METRICS_HPP
#define SARCT_METRICS_HPP

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <set>

#include "sarct/target.hpp"

namespace sarct {

// 1 when the predicted index set equals gold; Outside counts as equal to
// Outside (and to an empty prediction, which shares its representation).
inline int exact_match(const TargetAnnotation& pred,
                       const TargetAnnotation& gold) {
  return pred.words == gold.words ? 1 : 0;
}

// Sorensen-Dice over index sets. Outside acts as a singleton pseudo-element:
// Outside vs Outside scores 1, Outside vs any word set scores 0. That makes
// exact match and Dice coincide on Outside-gold slices.
inline double dice(const TargetAnnotation& pred,
                   const TargetAnnotation& gold) {
  if (pred.is_outside() || gold.is_outside()) {
    return pred.is_outside() == gold.is_outside() ? 1.0 : 0.0;
  }
  std::set<std::size_t> common;
  std::set_intersection(pred.words.begin(), pred.words.end(),
                        gold.words.begin(), gold.words.end(),
                        std::inserter(common, common.begin()));
  return 2.0 * static_cast<double>(common.size()) /
         static_cast<double>(pred.words.size() + gold.words.size());
}

}  // namespace sarct

#endif  // SARCT_METRICS_HPP

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

#ifndef SARCT_SARCT_HPP
#define SARCT_SARCT_HPP

#include "sarct/chunk.hpp"
#include "sarct/corpus.hpp"
#include "sarct/errors.hpp"
#include "sarct/evaluation.hpp"
#include "sarct/metrics.hpp"
#include "sarct/pipeline.hpp"
#include "sarct/pos.hpp"
#include "sarct/report.hpp"
#include "sarct/rules.hpp"
#include "sarct/sentiment.hpp"
#include "sarct/sequence.hpp"
#include "sarct/statistical.hpp"
#include "sarct/tagger.hpp"
#include "sarct/target.hpp"
#include "sarct/token.hpp"
#include "sarct/tokenize.hpp"

#endif  // SARCT_SARCT_HPP

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

#ifndef SARCT_REPORT_HPP
#define SARCT_REPORT_HPP

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "sarct/corpus.hpp"
#include "sarct/evaluation.hpp"
#include "sarct/rules.hpp"

namespace sarct {

struct SystemRow {
  std::string name;
  EvalReport report;
};

inline const std::vector<std::string>& system_row_names() {
  static const std::vector<std::string> kNames = {
      "Baseline 1: All Objective Words",
      "Baseline 2: Seq. Labeling",
      "Only Rule-Based",
      "Only Statistical",
      "Hybrid OR",
      "Hybrid AND",
  };
  return kNames;
}

inline std::string render_eval_table(const std::vector<SystemRow>& rows) {
  std::size_t width = 6;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "System"
      << "      EM      DS     N\n";
  out << std::string(width + 23, '-') << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << row.name
        << "  " << std::right << std::fixed << std::setprecision(4)
        << std::setw(6) << row.report.exact_match_accuracy << "  "
        << std::setw(6) << row.report.dice_score << "  " << std::setw(4)
        << row.report.n_instances << '\n';
  }
  return out.str();
}

struct RuleRow {
  RuleId rule;
  EvalReport overall;
  EvalReport conditional;
};

inline std::string render_rule_table(const std::vector<RuleRow>& rows) {
  std::ostringstream out;
  out << "Rule  Overall EM  Overall DS  Cond. EM  Cond. DS  Matched\n";
  out << std::string(58, '-') << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(4) << to_string(row.rule) << "  "
        << std::right << std::fixed << std::setprecision(4) << std::setw(10)
        << row.overall.exact_match_accuracy << "  " << std::setw(10)
        << row.overall.dice_score << "  " << std::setw(8)
        << row.conditional.exact_match_accuracy << "  " << std::setw(8)
        << row.conditional.dice_score << "  " << std::setw(7)
        << row.conditional.n_instances << '\n';
  }
  return out.str();
}

inline std::string render_stats(const CorpusStats& st) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "Sentences:                            " << st.count << '\n';
  out << "Average #words per sentence:          " << st.avg_words << '\n';
  out << "Vocabulary:                           " << st.vocabulary << '\n';
  out << "Total words:                          " << st.total_words << '\n';
  out << "Average length of target:             ";
  if (st.has_targets) {
    out << st.avg_target_length << '\n';
  } else {
    out << "n/a (all Outside)\n";
  }
  out << "Average polarity strength of target:  ";
  if (st.has_targets) {
    out << st.avg_target_polarity_strength << '\n';
  } else {
    out << "n/a (all Outside)\n";
  }
  out << "Average polarity strength of rest:    "
      << st.avg_rest_polarity_strength << '\n';
  out << "Outside sentences:                    " << st.outside_count
      << '\n';
  return out.str();
}

}  // namespace sarct

#endif  // SARCT_REPORT_HPP

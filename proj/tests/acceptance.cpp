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

// Acceptance gate: each numbered check prints one PASS/FAIL line and the
// process exits nonzero if any check fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sarct/sarct.hpp"

namespace {

const std::string kDataDir = SARCT_DATA_DIR;
const std::string kCliPath = SARCT_CLI_PATH;

int g_failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << number << "  " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  int status = pclose(pipe);
  result.exit_code = status;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

const sarct::TaggerModel& tagger() {
  static const sarct::TaggerModel model = sarct::builtin_tagger_model();
  return model;
}

const sarct::Lexicon& lexicon() {
  static const sarct::Lexicon lex =
      sarct::load_lexicon(kDataDir + "/sentiment_lexicon.tsv");
  return lex;
}

std::map<std::string, sarct::TaggedSentence> fixture_by_id() {
  std::map<std::string, sarct::TaggedSentence> out;
  for (const auto& doc : sarct::load_corpus(kDataDir + "/fixture_corpus.tsv")) {
    out.emplace(doc.id, sarct::tag_text(doc.text, tagger()));
  }
  return out;
}

std::vector<std::string> outcome_surfaces(const sarct::TaggedSentence& s,
                                          const sarct::RuleOutcome& out) {
  std::vector<std::string> surfaces;
  if (!out) return surfaces;
  for (std::size_t i : out->word_indices) {
    surfaces.push_back(s.tokens.at(i).surface);
  }
  return surfaces;
}

// ---- 1: fixture rule coverage --------------------------------------------

void criterion_rule_coverage() {
  auto start = std::chrono::steady_clock::now();
  auto sentences = fixture_by_id();

  struct Exemplar {
    sarct::RuleId rule;
    std::string id;
    std::vector<std::string> expected;
  };
  const std::vector<Exemplar> exemplars = {
      {sarct::RuleId::R1, "t06", {"I", "my", "job"}},
      {sarct::RuleId::R2, "t02", {"Microsoft"}},
      {sarct::RuleId::R3, "t03", {"being", "ignored"}},
      {sarct::RuleId::R4, "t09", {"to", "have", "a", "test", "on", "my",
                                  "birthday"}},
      {sarct::RuleId::R5, "t12", {"Being", "covered", "in", "rashes"}},
      {sarct::RuleId::R6, "t13", {"donut"}},
      {sarct::RuleId::R7, "t15", {"life"}},
      {sarct::RuleId::R8, "t04", {"He", "Tiger", "Woods"}},
      {sarct::RuleId::R9, "t16", {"this", "jacket"}},
  };

  int exact = 0;
  std::string detail;
  for (const auto& ex : exemplars) {
    const auto& s = sentences.at(ex.id);
    auto out = sarct::apply_rule(ex.rule, s, lexicon());
    auto got = outcome_surfaces(s, out);
    if (out && !out->outside_vote && got == ex.expected) {
      ++exact;
    } else {
      detail += sarct::to_string(ex.rule) + " on " + ex.id + " mismatched; ";
    }
  }

  bool outside_ok = false;
  {
    const auto& s = sentences.at("t05");
    auto out = sarct::apply_rule(sarct::RuleId::R3, s, lexicon());
    outside_ok = out && out->outside_vote && out->word_indices.empty();
    if (!outside_ok) detail += "R3 negative-verb exemplar missed Outside; ";
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  bool ok = exact == 9 && outside_ok && elapsed < 5000;
  std::ostringstream label;
  label << "rule exemplar coverage (" << exact
        << "/9 exact, negative-verb Outside "
        << (outside_ok ? "ok" : "missed") << ", " << elapsed << " ms)";
  report(1, label.str(), ok, detail);
}

// ---- 2: metric algebra ----------------------------------------------------

sarct::TargetAnnotation random_annotation(std::mt19937_64& rng) {
  if (rng() % 4 == 0) return sarct::TargetAnnotation::outside();
  std::set<std::size_t> ids;
  std::size_t n = 1 + rng() % 5;
  for (std::size_t i = 0; i < n; ++i) ids.insert(rng() % 8);
  return sarct::TargetAnnotation::of(std::move(ids));
}

void criterion_metric_algebra() {
  std::mt19937_64 rng(42);
  int pairs = 0, violations = 0;
  for (int round = 0; round < 2000; ++round) {
    auto p = random_annotation(rng);
    auto g = random_annotation(rng);
    double d = sarct::dice(p, g);
    int em = sarct::exact_match(p, g);
    if (d < 0.0 || d > 1.0) ++violations;
    if (d != sarct::dice(g, p)) ++violations;
    if ((d == 1.0) != (p == g)) ++violations;
    if (em == 1 && d != 1.0) ++violations;
    ++pairs;
  }
  for (int round = 0; round < 1000; ++round) {
    auto p = random_annotation(rng);
    auto g = sarct::TargetAnnotation::outside();
    if (static_cast<double>(sarct::exact_match(p, g)) != sarct::dice(p, g)) {
      ++violations;
    }
    ++pairs;
  }
  std::ostringstream label;
  label << "metric algebra (" << pairs << " pairs, " << violations
        << " violations)";
  report(2, label.str(), pairs >= 1000 && violations == 0);
}

// ---- 3: integrator set algebra ---------------------------------------------

void criterion_integrator_algebra() {
  std::mt19937_64 rng(43);
  auto random_candidate = [&rng] {
    sarct::CandidateSet cs;
    if (rng() % 4 == 0) {
      cs.outside_vote = true;
      return cs;
    }
    std::size_t n = rng() % 5;
    for (std::size_t i = 0; i < n; ++i) cs.word_indices.insert(rng() % 8);
    if (cs.word_indices.empty()) cs.outside_vote = true;
    return cs;
  };

  int pairs = 0, violations = 0;
  for (int round = 0; round < 2000; ++round) {
    auto rule = random_candidate();
    auto stat = random_candidate();
    auto u = sarct::integrate(rule, stat, sarct::IntegratorMode::HybridOr);
    auto n = sarct::integrate(rule, stat, sarct::IntegratorMode::HybridAnd);

    for (std::size_t i : n.words) {
      if (!rule.word_indices.count(i) || !stat.word_indices.count(i)) {
        ++violations;
      }
    }
    for (std::size_t i : rule.word_indices) {
      if (!u.words.count(i)) ++violations;
    }
    for (std::size_t i : stat.word_indices) {
      if (!u.words.count(i)) ++violations;
    }
    for (std::size_t i : u.words) {
      if (!rule.word_indices.count(i) && !stat.word_indices.count(i)) {
        ++violations;
      }
    }
    if (rule.word_indices.empty() && stat.word_indices.empty() &&
        !u.is_outside()) {
      ++violations;
    }
    ++pairs;
  }
  {
    sarct::CandidateSet a, b;
    a.word_indices = {1};
    b.word_indices = {2};
    if (!sarct::integrate(a, b, sarct::IntegratorMode::HybridAnd)
             .is_outside()) {
      ++violations;
    }
    sarct::CandidateSet oa, ob;
    oa.outside_vote = true;
    ob.outside_vote = true;
    if (!sarct::integrate(oa, ob, sarct::IntegratorMode::HybridOr)
             .is_outside()) {
      ++violations;
    }
  }
  std::ostringstream label;
  label << "integrator set algebra (" << pairs << " pairs, " << violations
        << " violations)";
  report(3, label.str(), pairs >= 1000 && violations == 0);
}

// ---- 4: weighted-majority properties ---------------------------------------

// Exhaustive oracle over every vote pattern for small sentences: each rule
// votes a word subset (bitmask) or outside (mask == 1 << n_tokens).
void criterion_majority_properties() {
  long long patterns = 0, violations = 0;
  const double rule_weight[3] = {1.0, 0.5, 0.25};

  for (std::size_t n_tokens = 1; n_tokens <= 6; ++n_tokens) {
    const unsigned outside_mask = 1u << n_tokens;
    for (std::size_t n_rules = 1; n_rules <= 3; ++n_rules) {
      std::vector<unsigned> votes(n_rules, 0);
      while (true) {
        std::map<sarct::RuleId, sarct::CandidateSet> cand;
        sarct::RuleWeights weights;
        std::vector<double> score(n_tokens, 0.0);
        double outside_score = 0.0;
        for (std::size_t r = 0; r < n_rules; ++r) {
          sarct::RuleId id = static_cast<sarct::RuleId>(r);
          weights.set(id, rule_weight[r]);
          sarct::CandidateSet cs;
          if (votes[r] == outside_mask) {
            cs.outside_vote = true;
            outside_score += rule_weight[r];
          } else {
            for (std::size_t t = 0; t < n_tokens; ++t) {
              if (votes[r] & (1u << t)) {
                cs.word_indices.insert(t);
                score[t] += rule_weight[r];
              }
            }
          }
          cand.emplace(id, std::move(cs));
        }

        double best = 0.0;
        for (double sc : score) best = std::max(best, sc);
        sarct::CandidateSet expected;
        if (best == 0.0) {
          expected.outside_vote = outside_score > 0.0;
        } else if (outside_score > best) {
          expected.outside_vote = true;
        } else {
          for (std::size_t t = 0; t < n_tokens; ++t) {
            if (score[t] == best) expected.word_indices.insert(t);
          }
        }

        auto got = sarct::combine_weighted_majority(cand, weights);
        if (!(got == expected)) ++violations;

        for (double scale : {0.5, 2.0, 4.0}) {
          sarct::RuleWeights scaled;
          for (std::size_t r = 0; r < n_rules; ++r) {
            scaled.set(static_cast<sarct::RuleId>(r),
                       rule_weight[r] * scale);
          }
          auto again = sarct::combine_weighted_majority(cand, scaled);
          if (!(again == got)) ++violations;
        }
        ++patterns;

        std::size_t carry = 0;
        while (carry < n_rules) {
          if (++votes[carry] <= outside_mask) break;
          votes[carry] = 0;
          ++carry;
        }
        if (carry == n_rules) break;
      }
    }
  }

  // Vote monotonicity: an extra dedicated vote keeps a winner winning.
  std::mt19937_64 rng(44);
  for (int round = 0; round < 500; ++round) {
    std::map<sarct::RuleId, sarct::CandidateSet> cand;
    std::size_t n_rules = 1 + rng() % 3;
    for (std::size_t r = 0; r < n_rules; ++r) {
      sarct::CandidateSet cs;
      std::size_t n = 1 + rng() % 4;
      for (std::size_t i = 0; i < n; ++i) cs.word_indices.insert(rng() % 6);
      cand.emplace(static_cast<sarct::RuleId>(r), std::move(cs));
    }
    sarct::RuleWeights w;
    auto base = sarct::combine_weighted_majority(cand, w);
    if (base.word_indices.empty()) continue;
    std::size_t winner = *base.word_indices.begin();
    sarct::CandidateSet extra;
    extra.word_indices.insert(winner);
    cand[sarct::RuleId::R9] = extra;
    auto boosted = sarct::combine_weighted_majority(cand, w);
    if (!boosted.word_indices.count(winner)) ++violations;
    ++patterns;
  }

  std::ostringstream label;
  label << "weighted-majority properties (" << patterns << " patterns, "
        << violations << " violations)";
  report(4, label.str(), violations == 0);
}

// ---- 5: statistical round trip ---------------------------------------------

void criterion_statistical_roundtrip() {
  auto docs = sarct::load_corpus(kDataDir + "/fixture_corpus.tsv");
  auto corpus = sarct::prepare_corpus(docs, tagger());

  bool counts_ok = true;
  std::vector<sarct::WordInstance> instances;
  for (const auto& [s, gold] : corpus) {
    auto more = sarct::decompose(s, gold, lexicon());
    if (more.size() != s.size()) counts_ok = false;
    instances.insert(instances.end(), more.begin(), more.end());
  }

  sarct::TrainConfig cfg;
  cfg.epochs = 200;
  cfg.positive_weight = 1.0;
  auto model = sarct::train(instances, cfg);
  std::size_t correct = 0;
  for (const auto& inst : instances) {
    correct += sarct::predict_word(model, inst.features) == inst.label;
  }
  double accuracy =
      static_cast<double>(correct) / static_cast<double>(instances.size());

  std::ostringstream label;
  label << "statistical memorization (" << correct << "/" << instances.size()
        << " labels, decompose sizes " << (counts_ok ? "exact" : "wrong")
        << ")";
  report(5, label.str(), counts_ok && accuracy >= 0.95);
}

// ---- 6: report shape --------------------------------------------------------

void criterion_report_shape() {
  std::string corpus_arg = " --corpus " + kDataDir + "/fixture_corpus.tsv" +
                           " --data-dir " + kDataDir;
  auto eval = run_command(kCliPath + " eval" + corpus_arg);
  bool ok = eval.exit_code == 0;
  std::size_t last = 0;
  for (const auto& name : sarct::system_row_names()) {
    std::size_t pos = eval.output.find(name);
    if (pos == std::string::npos || pos < last) ok = false;
    last = pos;
  }
  if (eval.output.find("EM") == std::string::npos ||
      eval.output.find("DS") == std::string::npos) {
    ok = false;
  }

  auto rules = run_command(kCliPath + " rules" + corpus_arg);
  if (rules.exit_code != 0) ok = false;
  for (sarct::RuleId r : sarct::kAllRules) {
    if (rules.output.find(sarct::to_string(r) + " ") == std::string::npos) {
      ok = false;
    }
  }
  for (const char* column :
       {"Overall EM", "Overall DS", "Cond. EM", "Cond. DS", "Matched"}) {
    if (rules.output.find(column) == std::string::npos) ok = false;
  }
  report(6, "evaluation and rule report shape", ok);
}

// ---- 7: cross-validation integrity ------------------------------------------

void criterion_crossval_integrity() {
  auto docs = sarct::load_corpus(kDataDir + "/fixture_corpus.tsv");
  auto corpus = sarct::prepare_corpus(docs, tagger());
  std::size_t instances = 0;
  for (const auto& [s, gold] : corpus) instances += s.size();

  bool ok = true;
  for (auto [units, granularity] :
       {std::pair<std::size_t, sarct::Granularity>{
            corpus.size(), sarct::Granularity::Sentence},
        std::pair<std::size_t, sarct::Granularity>{
            instances, sarct::Granularity::WordInstance}}) {
    auto plan = sarct::make_fold_plan(units, 4, granularity, 42);
    if (plan.assignment.size() != units) ok = false;

    std::vector<std::set<std::size_t>> folds(4);
    for (std::size_t unit = 0; unit < units; ++unit) {
      if (plan.assignment[unit] >= 4) ok = false;
      folds[plan.assignment[unit]].insert(unit);
    }
    std::size_t covered = 0, lo = units, hi = 0;
    for (std::size_t f = 0; f < 4; ++f) {
      covered += folds[f].size();
      lo = std::min(lo, folds[f].size());
      hi = std::max(hi, folds[f].size());
      for (std::size_t g = f + 1; g < 4; ++g) {
        for (std::size_t unit : folds[g]) {
          if (folds[f].count(unit)) ok = false;
        }
      }
    }
    if (covered != units || hi - lo > 1) ok = false;

    auto replay = sarct::make_fold_plan(units, 4, granularity, 42);
    if (replay.assignment != plan.assignment) ok = false;
  }

  auto plan = sarct::make_fold_plan(instances, 4,
                                    sarct::Granularity::WordInstance, 42);
  auto r1 = sarct::cross_validate(corpus, plan,
                                  sarct::IntegratorMode::HybridOr, lexicon());
  auto r2 = sarct::cross_validate(corpus, plan,
                                  sarct::IntegratorMode::HybridOr, lexicon());
  if (r1.exact_match_accuracy != r2.exact_match_accuracy ||
      r1.dice_score != r2.dice_score || r1.n_instances != r2.n_instances) {
    ok = false;
  }
  report(7, "cross-validation integrity", ok);
}

// ---- 8: corpus statistics oracle --------------------------------------------

void criterion_stats_oracle() {
  namespace fs = std::filesystem;
  fs::path script = fs::path(kDataDir).parent_path() / "tests" / "oracle" /
                    "stats_recount.py";
  if (!fs::exists(script)) {
    report(8, "corpus statistics oracle", false, "recount script missing");
    return;
  }
  auto result = run_command("python3 " + script.string() + " " + kCliPath +
                            " " + kDataDir);
  report(8, "corpus statistics oracle", result.exit_code == 0,
         result.output.substr(0, 200));
}

// ---- 9: determinism ----------------------------------------------------------

void criterion_determinism() {
  namespace fs = std::filesystem;
  fs::path dir = fs::path("acceptance_tmp");
  fs::create_directories(dir);

  std::string corpus_arg = " --corpus " + kDataDir + "/fixture_corpus.tsv" +
                           " --data-dir " + kDataDir;
  bool ok = true;
  std::vector<std::string> reports(2);
  for (int run = 0; run < 2; ++run) {
    std::string suffix = std::to_string(run + 1) + ".tsv";
    std::string model = (dir / ("model" + suffix)).string();
    std::string weights = (dir / ("weights" + suffix)).string();
    auto t = run_command(kCliPath + " train" + corpus_arg + " --seed 42" +
                         " --out " + model);
    auto c = run_command(kCliPath + " calibrate" + corpus_arg + " --out " +
                         weights);
    auto e = run_command(kCliPath + " eval" + corpus_arg + " --seed 42");
    if (t.exit_code != 0 || c.exit_code != 0 || e.exit_code != 0) ok = false;
    reports[run] = e.output;
  }

  std::string m1 = read_file((dir / "model1.tsv").string());
  std::string m2 = read_file((dir / "model2.tsv").string());
  std::string w1 = read_file((dir / "weights1.tsv").string());
  std::string w2 = read_file((dir / "weights2.tsv").string());
  if (m1.empty() || m1 != m2) ok = false;
  if (w1.empty() || w1 != w2) ok = false;
  if (reports[0].empty() || reports[0] != reports[1]) ok = false;

  std::error_code ec;
  fs::remove_all(dir, ec);
  report(9, "end-to-end determinism", ok);
}

}  // namespace

int main() {
  try {
    criterion_rule_coverage();
    criterion_metric_algebra();
    criterion_integrator_algebra();
    criterion_majority_properties();
    criterion_statistical_roundtrip();
    criterion_report_shape();
    criterion_crossval_integrity();
    criterion_stats_oracle();
    criterion_determinism();
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  if (g_failures > 0) {
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}

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

// sarct command line tool. Subcommands: extract, train, calibrate, eval,
// rules, stats, crossval.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sarct/sarct.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Data files resolve against --data-dir, then SARCT_DATA_DIR, then ./data.
sarct::WeightMetric metric_or_throw(const std::string& name) {
  auto metric = sarct::weight_metric_from_string(name);
  if (!metric) throw sarct::Error("unknown metric: " + name);
  return *metric;
}

sarct::IntegratorMode mode_or_throw(const std::string& name) {
  auto mode = sarct::mode_from_string(name);
  if (!mode) throw sarct::Error("unknown mode: " + name);
  return *mode;
}

std::string data_dir_or_default(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SARCT_DATA_DIR")) return env;
  return "data";
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

sarct::Lexicon load_lexicon_arg(const std::string& flag, const std::string& data_dir) {
  std::string path = flag.empty() ? join_path(data_dir, "sentiment_lexicon.tsv") : flag;
  return sarct::load_lexicon(path);
}

sarct::TaggerModel load_tagger_arg(const std::string& flag) {
  if (flag.empty()) return sarct::TaggerModel{};
  return sarct::load_tagger_model(flag);
}

sarct::RuleWeights load_weights_arg(const std::string& flag, const std::string& data_dir) {
  if (!flag.empty()) return sarct::load_rule_weights(flag);
  std::string fallback = join_path(data_dir, "default/rule_weights.tsv");
  if (fs::exists(fallback)) return sarct::load_rule_weights(fallback);
  return sarct::RuleWeights{};
}

std::optional<sarct::LinearModel> load_model_arg(const std::string& flag,
                                                 const std::string& data_dir) {
  if (!flag.empty()) return sarct::load_linear_model(flag);
  std::string fallback = join_path(data_dir, "default/linear_model.tsv");
  if (fs::exists(fallback)) return sarct::load_linear_model(fallback);
  return std::nullopt;
}

std::string target_words_line(const sarct::TaggedSentence& s,
                              const sarct::TargetAnnotation& pred) {
  if (pred.is_outside()) return "OUTSIDE";
  std::string out;
  for (std::size_t i : pred.words) {
    if (!out.empty()) out += ' ';
    out += s.tokens[i].surface;
  }
  return out;
}

json prediction_record(const std::string& id, const sarct::TaggedSentence& s,
                       const sarct::TargetAnnotation& pred) {
  json rec;
  rec["id"] = id;
  rec["outside"] = pred.is_outside();
  json words = json::array();
  json indices = json::array();
  for (std::size_t i : pred.words) {
    words.push_back(s.tokens[i].surface);
    indices.push_back(i);
  }
  rec["words"] = words;
  rec["indices"] = indices;
  return rec;
}

struct ExtractArgs {
  std::string text;
  std::string corpus;
  std::string mode = "hybrid-or";
  std::string lexicon;
  std::string weights;
  std::string model;
  std::string tagger;
  std::string data_dir;
  std::string format = "text";
  bool no_outside_votes = false;
  unsigned jobs = 1;
};

int run_extract(const ExtractArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  sarct::IntegratorMode mode = mode_or_throw(a.mode);
  sarct::Models models;
  models.tagger = load_tagger_arg(a.tagger);
  models.lexicon = load_lexicon_arg(a.lexicon, data_dir);
  models.rule_weights = load_weights_arg(a.weights, data_dir);
  models.count_outside_votes = !a.no_outside_votes;
  bool needs_stat = mode != sarct::IntegratorMode::RuleOnly;
  if (needs_stat) {
    auto linear = load_model_arg(a.model, data_dir);
    if (!linear) {
      std::cerr << "sarct: no statistical model; pass --model or train one "
                   "(sarct train), or use --mode rule-only\n";
      return 1;
    }
    models.linear = *linear;
  }

  if (!a.text.empty()) {
    sarct::TaggedSentence s = sarct::tag_text(a.text, models.tagger);
    sarct::TargetAnnotation pred = sarct::extract_target(s, models, mode);
    if (a.format == "records") {
      std::cout << prediction_record("-", s, pred).dump() << '\n';
    } else {
      std::cout << target_words_line(s, pred) << '\n';
    }
    return 0;
  }

  auto docs = sarct::load_corpus(a.corpus);
  std::vector<sarct::TaggedSentence> sentences(docs.size());
  std::vector<sarct::TargetAnnotation> preds(docs.size());
  unsigned jobs = std::max(1u, a.jobs);
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      sentences[i] = sarct::tag_text(docs[i].text, models.tagger);
      preds[i] = sarct::extract_target(sentences[i], models, mode);
    }
  };
  if (jobs == 1 || docs.size() < 2) {
    worker(0, docs.size());
  } else {
    jobs = std::min<unsigned>(jobs, docs.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (docs.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(docs.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (a.format == "records") {
      std::cout << prediction_record(docs[i].id, sentences[i], preds[i]).dump() << '\n';
    } else {
      std::string joined;
      if (preds[i].is_outside()) {
        joined = "OUTSIDE";
      } else {
        for (std::size_t w : preds[i].words) {
          if (!joined.empty()) joined += '|';
          joined += sentences[i].tokens[w].surface;
        }
      }
      std::cout << docs[i].id << '\t' << joined << '\n';
    }
  }
  return 0;
}

struct TrainArgs {
  std::string corpus;
  std::string out;
  std::string lexicon;
  std::string tagger;
  std::string data_dir;
  sarct::TrainConfig config;
};

int run_train(const TrainArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  auto lex = load_lexicon_arg(a.lexicon, data_dir);
  auto tagger = load_tagger_arg(a.tagger);
  auto docs = sarct::load_corpus(a.corpus);
  auto corpus = sarct::prepare_corpus(docs, tagger);
  std::vector<sarct::WordInstance> instances;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto more = sarct::decompose(corpus[i].first, corpus[i].second, lex, docs[i].id);
    instances.insert(instances.end(), more.begin(), more.end());
  }
  sarct::LinearModel model = sarct::train(instances, a.config);
  sarct::save_linear_model(model, a.out);
  std::size_t hits = 0;
  for (const auto& wi : instances)
    hits += sarct::predict_word(model, wi.features) == (wi.label == 1);
  std::cout << "trained on " << instances.size() << " word instances from "
            << docs.size() << " sentences; training accuracy " << hits << "/"
            << instances.size() << "; model written to " << a.out << '\n';
  return 0;
}

struct CalibrateArgs {
  std::string corpus;
  std::string out;
  std::string lexicon;
  std::string tagger;
  std::string data_dir;
  std::string metric = "overall-dice";
};

int run_calibrate(const CalibrateArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  auto lex = load_lexicon_arg(a.lexicon, data_dir);
  auto tagger = load_tagger_arg(a.tagger);
  auto docs = sarct::load_corpus(a.corpus);
  auto corpus = sarct::prepare_corpus(docs, tagger);
  sarct::WeightMetric metric = metric_or_throw(a.metric);
  sarct::RuleWeights weights = sarct::calibrate_rule_weights(corpus, lex, metric);
  sarct::save_rule_weights(weights, a.out);
  std::cout << "calibrated rule weights on " << docs.size()
            << " sentences (" << a.metric << "); written to " << a.out << '\n';
  return 0;
}

struct EvalArgs {
  std::string corpus;
  std::string lexicon;
  std::string stopwords;
  std::string tagger;
  std::string data_dir;
  std::string metric = "overall-dice";
  std::string format = "text";
  sarct::TrainConfig config;
};

json row_record(const std::string& name, const sarct::EvalReport& r) {
  json rec;
  rec["system"] = name;
  rec["exact_match"] = r.exact_match_accuracy;
  rec["dice"] = r.dice_score;
  rec["sentences"] = r.n_instances;
  return rec;
}

int run_eval(const EvalArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  auto lex = load_lexicon_arg(a.lexicon, data_dir);
  auto tagger = load_tagger_arg(a.tagger);
  std::string stop_path =
      a.stopwords.empty() ? join_path(data_dir, "stopwords.txt") : a.stopwords;
  auto stopwords = sarct::load_word_list(stop_path);
  auto docs = sarct::load_corpus(a.corpus);
  auto corpus = sarct::prepare_corpus(docs, tagger);

  std::vector<sarct::WordInstance> instances;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto more = sarct::decompose(corpus[i].first, corpus[i].second, lex, docs[i].id);
    instances.insert(instances.end(), more.begin(), more.end());
  }
  sarct::LinearModel linear = sarct::train(instances, a.config);
  sarct::RuleWeights weights = sarct::calibrate_rule_weights(
      corpus, lex, metric_or_throw(a.metric));
  sarct::Models models{tagger, lex, weights, linear, true};

  std::vector<sarct::SystemRow> rows;
  auto add_row = [&](const std::string& name, const sarct::SystemFn& fn) {
    rows.push_back({name, sarct::evaluate_system(fn, corpus)});
  };
  add_row(sarct::system_row_names()[0], [&](const sarct::TaggedSentence& s) {
    return sarct::baseline_objective_words(s, lex, stopwords);
  });
  add_row(sarct::system_row_names()[1], [&](const sarct::TaggedSentence& s) {
    return sarct::baseline_sequence_labeler(corpus, s, lex);
  });
  const sarct::IntegratorMode modes[] = {
      sarct::IntegratorMode::RuleOnly, sarct::IntegratorMode::StatOnly,
      sarct::IntegratorMode::HybridOr, sarct::IntegratorMode::HybridAnd};
  for (int m = 0; m < 4; ++m) {
    sarct::IntegratorMode mode = modes[m];
    add_row(sarct::system_row_names()[2 + m], [&, mode](const sarct::TaggedSentence& s) {
      return sarct::extract_target(s, models, mode);
    });
  }

  if (a.format == "records") {
    for (const auto& row : rows) std::cout << row_record(row.name, row.report).dump() << '\n';
  } else {
    std::cout << sarct::render_eval_table(rows);
  }
  return 0;
}

struct RulesArgs {
  std::string corpus;
  std::string lexicon;
  std::string tagger;
  std::string data_dir;
  std::string format = "text";
};

int run_rules(const RulesArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  auto lex = load_lexicon_arg(a.lexicon, data_dir);
  auto tagger = load_tagger_arg(a.tagger);
  auto docs = sarct::load_corpus(a.corpus);
  auto corpus = sarct::prepare_corpus(docs, tagger);
  std::vector<sarct::RuleRow> rows;
  for (sarct::RuleId r : sarct::kAllRules) {
    auto [overall, conditional] = sarct::rule_report(r, corpus, lex);
    rows.push_back({r, overall, conditional});
  }
  if (a.format == "records") {
    for (const auto& row : rows) {
      json rec;
      rec["rule"] = sarct::to_string(row.rule);
      rec["overall"] = row_record("overall", row.overall);
      rec["conditional"] = row_record("conditional", row.conditional);
      std::cout << rec.dump() << '\n';
    }
  } else {
    std::cout << sarct::render_rule_table(rows);
  }
  return 0;
}

struct StatsArgs {
  std::string corpus;
  std::string lexicon;
  std::string data_dir;
  std::string format = "text";
};

int run_stats(const StatsArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  auto lex = load_lexicon_arg(a.lexicon, data_dir);
  auto docs = sarct::load_corpus(a.corpus);
  sarct::CorpusStats st = sarct::corpus_stats(docs, lex);
  if (a.format == "records") {
    json rec;
    rec["count"] = st.count;
    rec["average_words"] = st.avg_words;
    rec["vocabulary"] = st.vocabulary;
    rec["total_words"] = st.total_words;
    rec["outside_count"] = st.outside_count;
    if (st.has_targets) {
      rec["average_target_length"] = st.avg_target_length;
      rec["average_target_polarity_strength"] = st.avg_target_polarity_strength;
    }
    rec["average_rest_polarity_strength"] = st.avg_rest_polarity_strength;
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << sarct::render_stats(st);
  }
  return 0;
}

struct CrossvalArgs {
  std::string corpus;
  std::string lexicon;
  std::string tagger;
  std::string data_dir;
  std::string granularity = "word";
  std::string metric = "overall-dice";
  std::string format = "text";
  unsigned folds = 4;
  sarct::TrainConfig config;
};

int run_crossval(const CrossvalArgs& a) {
  std::string data_dir = data_dir_or_default(a.data_dir);
  auto lex = load_lexicon_arg(a.lexicon, data_dir);
  auto tagger = load_tagger_arg(a.tagger);
  auto docs = sarct::load_corpus(a.corpus);
  auto corpus = sarct::prepare_corpus(docs, tagger);
  if (a.granularity != "sentence" && a.granularity != "word")
    throw sarct::Error("unknown granularity: " + a.granularity);
  sarct::Granularity gran = a.granularity == "sentence"
                                ? sarct::Granularity::Sentence
                                : sarct::Granularity::WordInstance;

  std::size_t units = corpus.size();
  if (gran == sarct::Granularity::WordInstance) {
    units = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      units += sarct::decompose(corpus[i].first, corpus[i].second, lex, docs[i].id).size();
  }
  sarct::FoldPlan plan = sarct::make_fold_plan(units, a.folds, gran, a.config.seed);

  std::vector<sarct::SystemRow> rows;
  const sarct::IntegratorMode modes[] = {
      sarct::IntegratorMode::RuleOnly, sarct::IntegratorMode::StatOnly,
      sarct::IntegratorMode::HybridOr, sarct::IntegratorMode::HybridAnd};
  for (int m = 0; m < 4; ++m) {
    auto report = sarct::cross_validate(corpus, plan, modes[m], lex, a.config,
                                        metric_or_throw(a.metric), true);
    rows.push_back({sarct::system_row_names()[2 + m], report});
  }
  if (a.format == "records") {
    for (const auto& row : rows) std::cout << row_record(row.name, row.report).dump() << '\n';
  } else {
    std::cout << sarct::render_eval_table(rows);
  }
  return 0;
}

void add_train_options(CLI::App* cmd, sarct::TrainConfig& cfg) {
  cmd->add_option("--epochs", cfg.epochs, "training epochs");
  cmd->add_option("--lr", cfg.learning_rate, "learning rate");
  cmd->add_option("--l2", cfg.l2, "L2 regularization strength");
  cmd->add_option("--pos-weight", cfg.positive_weight,
                  "positive class weight (0 = inverse label ratio)");
  cmd->add_option("--threshold", cfg.threshold, "decision threshold");
  cmd->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sarcasm target extraction toolkit"};
  app.require_subcommand(1);

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "extract targets from text or corpus");
  auto* text_opt = extract->add_option("--text", ex.text, "one sentence to process");
  auto* corpus_opt = extract->add_option("--corpus", ex.corpus, "corpus TSV to process");
  text_opt->excludes(corpus_opt);
  extract->add_option("--mode", ex.mode,
                      "rule-only | stat-only | hybrid-or | hybrid-and");
  extract->add_option("--lexicon", ex.lexicon, "sentiment lexicon TSV");
  extract->add_option("--weights", ex.weights, "rule weights TSV");
  extract->add_option("--model", ex.model, "statistical model TSV");
  extract->add_option("--tagger-model", ex.tagger, "trained tagger model TSV");
  extract->add_option("--data-dir", ex.data_dir, "data directory");
  extract->add_option("--format", ex.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  extract->add_flag("--no-outside-votes", ex.no_outside_votes,
                    "ignore Outside votes in the rule combiner");
  extract->add_option("--jobs", ex.jobs, "worker threads for corpus extraction");

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "train the statistical extractor");
  train_cmd->add_option("--corpus", tr.corpus, "annotated corpus TSV")->required();
  train_cmd->add_option("--out", tr.out, "output model path")->required();
  train_cmd->add_option("--lexicon", tr.lexicon, "sentiment lexicon TSV");
  train_cmd->add_option("--tagger-model", tr.tagger, "trained tagger model TSV");
  train_cmd->add_option("--data-dir", tr.data_dir, "data directory");
  add_train_options(train_cmd, tr.config);

  CalibrateArgs ca;
  auto* calib = app.add_subcommand("calibrate", "calibrate rule weights");
  calib->add_option("--corpus", ca.corpus, "annotated corpus TSV")->required();
  calib->add_option("--out", ca.out, "output weights path")->required();
  calib->add_option("--lexicon", ca.lexicon, "sentiment lexicon TSV");
  calib->add_option("--tagger-model", ca.tagger, "trained tagger model TSV");
  calib->add_option("--data-dir", ca.data_dir, "data directory");
  calib->add_option("--metric", ca.metric,
                    "overall-dice | overall-em | conditional-dice | conditional-em");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate all systems on a corpus");
  eval_cmd->add_option("--corpus", ev.corpus, "annotated corpus TSV")->required();
  eval_cmd->add_option("--lexicon", ev.lexicon, "sentiment lexicon TSV");
  eval_cmd->add_option("--stopwords", ev.stopwords, "stopword list");
  eval_cmd->add_option("--tagger-model", ev.tagger, "trained tagger model TSV");
  eval_cmd->add_option("--data-dir", ev.data_dir, "data directory");
  eval_cmd->add_option("--metric", ev.metric, "rule weight calibration metric");
  eval_cmd->add_option("--format", ev.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  add_train_options(eval_cmd, ev.config);

  RulesArgs ru;
  auto* rules_cmd = app.add_subcommand("rules", "per-rule accuracy report");
  rules_cmd->add_option("--corpus", ru.corpus, "annotated corpus TSV")->required();
  rules_cmd->add_option("--lexicon", ru.lexicon, "sentiment lexicon TSV");
  rules_cmd->add_option("--tagger-model", ru.tagger, "trained tagger model TSV");
  rules_cmd->add_option("--data-dir", ru.data_dir, "data directory");
  rules_cmd->add_option("--format", ru.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "corpus statistics");
  stats_cmd->add_option("--corpus", st.corpus, "corpus TSV")->required();
  stats_cmd->add_option("--lexicon", st.lexicon, "sentiment lexicon TSV");
  stats_cmd->add_option("--data-dir", st.data_dir, "data directory");
  stats_cmd->add_option("--format", st.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  CrossvalArgs cv;
  auto* cv_cmd = app.add_subcommand("crossval", "k-fold cross validation");
  cv_cmd->add_option("--corpus", cv.corpus, "annotated corpus TSV")->required();
  cv_cmd->add_option("--lexicon", cv.lexicon, "sentiment lexicon TSV");
  cv_cmd->add_option("--tagger-model", cv.tagger, "trained tagger model TSV");
  cv_cmd->add_option("--data-dir", cv.data_dir, "data directory");
  cv_cmd->add_option("--k", cv.folds, "number of folds");
  cv_cmd->add_option("--granularity", cv.granularity, "word | sentence");
  cv_cmd->add_option("--metric", cv.metric, "rule weight calibration metric");
  cv_cmd->add_option("--format", cv.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  add_train_options(cv_cmd, cv.config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*extract) {
      if (ex.text.empty() && ex.corpus.empty()) {
        std::cerr << "sarct: extract needs --text or --corpus\n";
        return 2;
      }
      return run_extract(ex);
    }
    if (*train_cmd) return run_train(tr);
    if (*calib) return run_calibrate(ca);
    if (*eval_cmd) return run_eval(ev);
    if (*rules_cmd) return run_rules(ru);
    if (*stats_cmd) return run_stats(st);
    if (*cv_cmd) return run_crossval(cv);
  } catch (const std::exception& e) {
    std::cerr << "sarct: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

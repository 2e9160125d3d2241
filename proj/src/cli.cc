// Copyright 2026 The Nightjar Authors.
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

#include "nightjar/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nightjar/config.h"
#include "nightjar/corpus_io.h"
#include "nightjar/evaluation.h"
#include "nightjar/external_recognizer.h"
#include "nightjar/parallel.h"
#include "nightjar/pipeline.h"

namespace nightjar {
namespace {

struct Options {
  std::string config_path;
  std::string input;
  std::string output;
  std::string recognizers;
  std::string policy;
  std::string detections;
  std::string lang;
  std::string gold;
  std::string pred;
  std::string tweets;
  std::string report;
  std::string from_rows;
  std::string rates;
  std::string out_tweets;
  std::string out_gold;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  int jobs = 0;
  bool case_insensitive = false;
  bool seed_set = false;
};

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

// Writes via `fn` to `path`, or to `out` when path is "-".
template <typename Fn>
void WriteTo(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DataError("cannot write " + path);
  fn(file);
  file.flush();
  if (!file) throw DataError("write to " + path + " failed");
}

void RefuseOverwrite(const std::string& output, std::initializer_list<std::string> inputs) {
  if (output == "-" || output.empty()) return;
  std::error_code ec;
  for (const std::string& in : inputs) {
    if (!in.empty() && std::filesystem::equivalent(in, output, ec)) {
      throw ConfigError("output " + output + " would overwrite input " + in);
    }
  }
}

Config ResolveConfig(const Options& o) {
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("NIGHTJAR_CONFIG"); env && *env) path = env;
  }
  Config config = path.empty() ? Config{} : LoadConfig(path);
  if (!o.recognizers.empty()) config.recognizers = o.recognizers;
  if (o.jobs > 0) config.jobs = o.jobs;
  if (o.case_insensitive) config.case_insensitive = true;
  return config;
}

std::vector<Tweet> LoadTweets(const Options& o) {
  std::ifstream in = OpenIn(o.input);
  std::vector<Tweet> tweets = ReadTweets(in);
  return o.lang.empty() ? tweets : FilterLanguage(tweets, o.lang);
}

void ReportDrops(const Pipeline& pipeline, std::ostream& err) {
  for (const auto& r : pipeline.recognizers()) {
    if (auto* ext = dynamic_cast<const ExternalRecognizer*>(r.get()); ext && ext->dropped_labels()) {
      err << "nightjar: " << ext->name() << " dropped " << ext->dropped_labels()
          << " entities with unmapped labels\n";
    }
  }
}

int Detect(const Options& o, std::ostream& out, std::ostream& err) {
  RefuseOverwrite(o.output, {o.input});
  const Config config = ResolveConfig(o);
  const std::vector<Tweet> tweets = LoadTweets(o);
  const Pipeline pipeline = BuildPipeline(config, config.recognizers);
  const auto predictions = DetectCorpus(pipeline, tweets, config.jobs);
  ReportDrops(pipeline, err);
  WriteTo(o.output, out, [&](std::ostream& s) { WriteDetections(predictions, s); });
  return kExitOk;
}

int Mask(const Options& o, std::ostream& out, std::ostream& err) {
  RefuseOverwrite(o.output, {o.input, o.detections});
  Config config = ResolveConfig(o);
  if (!o.policy.empty()) {
    const ReplacementPolicy named = ReplacementPolicy::Named(o.policy);
    config.policy.actions = named.actions;
  }
  if (o.seed_set) config.policy.seed = o.seed;
  const std::vector<Tweet> tweets = LoadTweets(o);
  const ValuePool pool = LoadPool(config);
  ValidatePool(pool, config.policy, RegexDetectors(config.regex));

  std::vector<PredictedTweet> predictions;
  if (!o.detections.empty()) {
    std::ifstream in = OpenIn(o.detections);
    predictions = ReadDetections(in, tweets);
    for (PredictedTweet& p : predictions) p.detections = ResolveSpans(std::move(p.detections));
  } else {
    const Pipeline pipeline = BuildPipeline(config, config.recognizers);
    predictions = DetectCorpus(pipeline, tweets, config.jobs);
    ReportDrops(pipeline, err);
  }
  const auto masked = MaskCorpus(tweets, predictions, config.policy, pool, config.jobs);
  WriteTo(o.output, out, [&](std::ostream& s) { WriteMasked(masked, s); });
  return kExitOk;
}

MetricsReport ReportFromRows(const std::string& path) {
  std::ifstream in = OpenIn(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw DataError(path + ": expected a non-empty array of rows");
  MetricsReport report;
  try {
    for (const auto& r : doc) {
      MetricsRow row;
      const std::string name = r.at("label").get<std::string>();
      row.label = ParseLabel(name);
      if (!row.label) throw DataError(path + ": unknown label '" + name + "'");
      row.gold_tokens = r.value("n", std::int64_t{1});
      row.precision = r.at("precision").get<double>();
      row.recall = r.at("recall").get<double>();
      row.f1 = r.contains("f1") ? r["f1"].get<double>() : F1Score(row.precision, row.recall);
      row.aon_recall = r.value("aon_recall", 0.0);
      report.rows.push_back(row);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  report.macro = MacroAverage(report.rows);
  return report;
}

int Evaluate(const Options& o, std::ostream& out, std::ostream&) {
  MetricsReport report;
  if (!o.from_rows.empty()) {
    report = ReportFromRows(o.from_rows);
  } else {
    if (o.gold.empty() || o.pred.empty() || o.tweets.empty()) {
      throw ConfigError("evaluate needs --tweets, --gold and --pred (or --from-rows)");
    }
    RefuseOverwrite(o.report, {o.gold, o.pred, o.tweets});
    const Config config = ResolveConfig(o);
    std::ifstream tweets_in = OpenIn(o.tweets);
    const std::vector<Tweet> tweets = ReadTweets(tweets_in);
    std::ifstream gold_in = OpenIn(o.gold);
    const auto gold = ReadAnnotations(gold_in, tweets);
    std::ifstream pred_in = OpenIn(o.pred);
    const auto predictions = ReadDetections(pred_in, tweets);
    report = EvaluateCorpus(gold, predictions, config.jobs);
  }
  if (!o.report.empty()) {
    WriteTo(o.report, out, [&](std::ostream& s) { s << ReportToJson(report); });
  }
  out << FormatTable(report);
  return kExitOk;
}

int Synth(const Options& o, std::ostream& out, std::ostream&) {
  const InjectionRates rates =
      o.rates.empty() ? InjectionRates::Defaults() : InjectionRates::Parse(o.rates);
  if (o.n < 1) throw ConfigError("--n must be at least 1");
  const SyntheticCorpus corpus = GenerateSyntheticCorpus(o.seed, o.n, rates);
  WriteTo(o.out_tweets, out, [&](std::ostream& s) { WriteTweets(corpus.tweets, s); });
  WriteTo(o.out_gold, out, [&](std::ostream& s) { WriteAnnotations(corpus.gold, s); });
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"De-identify short social media texts and score detectors", "nightjar"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config_path, "INI config file (default: $NIGHTJAR_CONFIG)");
    cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* detect = app.add_subcommand("detect", "Write resolved detections for a tweet corpus");
  detect->add_option("--input", o.input, "tweets.jsonl")->required();
  detect->add_option("--output", o.output, "detections.jsonl, or - for stdout")->required();
  detect->add_option("--recognizers", o.recognizers,
                     "Comma list: builtin, external:<command>, or config adapter names");
  detect->add_option("--lang", o.lang, "Keep only tweets with this language code");
  detect->add_flag("--case-insensitive", o.case_insensitive, "Ignore case in gazetteer lookup");
  add_config(detect);

  CLI::App* mask = app.add_subcommand("mask", "Detect and replace identifiable spans");
  mask->add_option("--input", o.input, "tweets.jsonl")->required();
  mask->add_option("--output", o.output, "masked.jsonl, or - for stdout")->required();
  mask->add_option("--seed", o.seed, "Seed for synthetic replacements");
  mask->add_option("--policy", o.policy, "default, placeholder, delete or synthetic");
  mask->add_option("--recognizers", o.recognizers, "As for detect");
  mask->add_option("--detections", o.detections, "Use these detections instead of detecting");
  mask->add_option("--lang", o.lang, "Keep only tweets with this language code");
  mask->add_flag("--case-insensitive", o.case_insensitive, "Ignore case in gazetteer lookup");
  add_config(mask);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score detections against gold annotations");
  evaluate->add_option("--tweets", o.tweets, "tweets.jsonl the annotations refer to");
  evaluate->add_option("--gold", o.gold, "annotations.jsonl");
  evaluate->add_option("--pred", o.pred, "detections.jsonl");
  evaluate->add_option("--report", o.report, "Write report.json here");
  evaluate->add_option("--from-rows", o.from_rows,
                       "Average precomputed per-label rows (JSON array) instead");
  add_config(evaluate);

  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic gold-labeled corpus");
  synth->add_option("--seed", o.seed, "Generator seed")->required();
  synth->add_option("--n", o.n, "Number of tweets")->required();
  synth->add_option("--rates", o.rates, "e.g. 0.2 or URL=0.5,PHONE=0.1,verified=0.2");
  synth->add_option("--out-tweets", o.out_tweets, "tweets.jsonl")->required();
  synth->add_option("--out-gold", o.out_gold, "annotations.jsonl")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nightjar: " << e.what() << "\n";
    return kExitUsage;
  }
  o.seed_set = mask->count("--seed") > 0;

  try {
    if (detect->parsed()) return Detect(o, out, err);
    if (mask->parsed()) return Mask(o, out, err);
    if (evaluate->parsed()) return Evaluate(o, out, err);
    if (synth->parsed()) return Synth(o, out, err);
  } catch (const ConfigError& e) {
    err << "nightjar: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AdapterError& e) {
    err << "nightjar: adapter error: " << e.what() << "\n";
    return kExitAdapter;
  } catch (const std::exception& e) {
    err << "nightjar: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace nightjar

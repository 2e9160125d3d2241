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

#include "nightjar/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "nightjar/parallel.h"

namespace nightjar {
namespace {

using TokenSets = std::map<EntityLabel, std::set<std::size_t>>;

template <typename SpanLike>
void Mark(TokenSets& sets, const std::vector<Token>& tokens, const SpanLike& item) {
  const auto [first, last] = OverlappingRange(tokens, item.span);
  for (std::size_t t = first; t < last; ++t) sets[item.label].insert(t);
}

nlohmann::json RowJson(const MetricsRow& row) {
  nlohmann::json j = {{"gold_tokens", row.gold_tokens}, {"tp", row.tp},
                      {"fp", row.fp},                   {"fn", row.fn},
                      {"precision", row.precision},     {"recall", row.recall},
                      {"f1", row.f1},                   {"aon_recall", row.aon_recall}};
  if (row.label) j["label"] = LabelName(*row.label);
  return j;
}

std::string DisplayName(EntityLabel label) {
  switch (label) {
    case EntityLabel::kUrl: return "URL";
    case EntityLabel::kUsername: return "Username";
    case EntityLabel::kPhone: return "Phone #";
    case EntityLabel::kEmail: return "Email";
    case EntityLabel::kIdNumber: return "ID";
    case EntityLabel::kPerson: return "Person";
    case EntityLabel::kOrg: return "Org";
    case EntityLabel::kGroup: return "Group";
    case EntityLabel::kCity: return "City";
    case EntityLabel::kState: return "State";
    case EntityLabel::kCountry: return "Country";
    case EntityLabel::kLocation: return "Location";
    case EntityLabel::kZip: return "Zip code";
  }
  return "?";
}

}  // namespace

LabelCounts& LabelCounts::operator+=(const LabelCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  tweets_with_gold += other.tweets_with_gold;
  tweets_all_found += other.tweets_all_found;
  return *this;
}

TweetConfusion TokenConfusion(const AnnotatedTweet& gold, const PredictedTweet& predicted,
                              const std::vector<Token>& tokens) {
  if (gold.tweet.id != predicted.tweet_id) {
    throw DataError("tweet id mismatch: gold '" + gold.tweet.id + "' vs predicted '" +
                    predicted.tweet_id + "'");
  }
  TokenSets gold_sets, pred_sets;
  for (const GoldSpan& g : gold.gold) Mark(gold_sets, tokens, g);
  for (const Detection& d : predicted.detections) Mark(pred_sets, tokens, d);

  TweetConfusion out;
  auto counts_for = [&](EntityLabel label) -> LabelCounts& {
    auto [it, inserted] = out.try_emplace(label);
    if (inserted) it->second.label = label;
    return it->second;
  };
  for (const auto& [label, g] : gold_sets) {
    LabelCounts& c = counts_for(label);
    const auto p = pred_sets.find(label);
    for (std::size_t t : g) {
      if (p != pred_sets.end() && p->second.contains(t)) {
        ++c.tp;
      } else {
        ++c.fn;
      }
    }
    if (!g.empty()) {
      c.tweets_with_gold = 1;
      c.tweets_all_found = c.fn == 0 ? 1 : 0;
    }
  }
  for (const auto& [label, p] : pred_sets) {
    LabelCounts& c = counts_for(label);
    const auto g = gold_sets.find(label);
    for (std::size_t t : p) {
      if (g == gold_sets.end() || !g->second.contains(t)) ++c.fp;
    }
  }
  return out;
}

double F1Score(double precision, double recall) {
  return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
}

Scores Prf(const LabelCounts& c) {
  Scores s;
  if (c.tp + c.fp > 0) {
    s.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  } else {
    s.precision = c.fn == 0 ? 1.0 : 0.0;
  }
  s.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn)
                             : 1.0;
  s.f1 = F1Score(s.precision, s.recall);
  return s;
}

double AonRecall(const std::vector<TweetConfusion>& per_tweet, EntityLabel label) {
  std::int64_t with_gold = 0, found = 0;
  for (const TweetConfusion& tc : per_tweet) {
    auto it = tc.find(label);
    if (it == tc.end()) continue;
    with_gold += it->second.tweets_with_gold;
    found += it->second.tweets_all_found;
  }
  return with_gold > 0 ? static_cast<double>(found) / static_cast<double>(with_gold) : 1.0;
}

MetricsRow RowFor(const LabelCounts& c) {
  const Scores s = Prf(c);
  MetricsRow row;
  row.label = c.label;
  row.gold_tokens = c.gold_tokens();
  row.tp = c.tp;
  row.fp = c.fp;
  row.fn = c.fn;
  row.precision = s.precision;
  row.recall = s.recall;
  row.f1 = s.f1;
  row.aon_recall = c.tweets_with_gold > 0 ? static_cast<double>(c.tweets_all_found) /
                                                static_cast<double>(c.tweets_with_gold)
                                          : 1.0;
  return row;
}

MetricsRow MacroAverage(std::span<const MetricsRow> rows) {
  if (rows.empty()) throw DataError("cannot average zero rows");
  MetricsRow m;
  for (const MetricsRow& r : rows) {
    m.gold_tokens += r.gold_tokens;
    m.tp += r.tp;
    m.fp += r.fp;
    m.fn += r.fn;
    m.precision += r.precision;
    m.recall += r.recall;
    m.f1 += r.f1;
    m.aon_recall += r.aon_recall;
  }
  const auto n = static_cast<double>(rows.size());
  m.precision /= n;
  m.recall /= n;
  m.f1 /= n;
  m.aon_recall /= n;
  return m;
}

Aggregates Aggregate(std::span<const LabelCounts> rows) {
  std::vector<MetricsRow> scored;
  LabelCounts pooled;
  for (const LabelCounts& c : rows) {
    if (c.gold_tokens() == 0) continue;
    scored.push_back(RowFor(c));
    pooled += c;
  }
  if (scored.empty()) throw DataError("no labels with gold tokens to aggregate");
  Aggregates a;
  a.micro = RowFor(pooled);
  a.micro.label.reset();
  a.macro = MacroAverage(scored);
  return a;
}

MetricsReport BuildReport(const std::vector<TweetConfusion>& per_tweet) {
  std::map<EntityLabel, LabelCounts> totals;
  for (const TweetConfusion& tc : per_tweet) {
    for (const auto& [label, c] : tc) {
      auto [it, inserted] = totals.try_emplace(label);
      if (inserted) it->second.label = label;
      it->second += c;
    }
  }
  MetricsReport report;
  report.tweets = per_tweet.size();
  std::vector<LabelCounts> rows;
  for (const auto& [label, c] : totals) {
    report.rows.push_back(RowFor(c));
    report.false_positives += c.fp;
    report.false_negatives += c.fn;
    rows.push_back(c);
  }
  const bool any_gold =
      std::any_of(rows.begin(), rows.end(), [](const LabelCounts& c) { return c.gold_tokens() > 0; });
  if (any_gold) {
    const Aggregates a = Aggregate(rows);
    report.micro = a.micro;
    report.macro = a.macro;
  }
  return report;
}

MetricsReport EvaluateCorpus(const std::vector<AnnotatedTweet>& gold,
                             const std::vector<PredictedTweet>& predictions, int jobs) {
  return BuildReport(ConfusionCorpus(gold, predictions, jobs));
}

std::string ReportToJson(const MetricsReport& report) {
  nlohmann::json j;
  j["tweets"] = report.tweets;
  j["false_positives"] = report.false_positives;
  j["false_negatives"] = report.false_negatives;
  j["labels"] = nlohmann::json::array();
  for (const MetricsRow& row : report.rows) {
    nlohmann::json r = RowJson(row);
    r["averaged"] = row.gold_tokens > 0;
    j["labels"].push_back(std::move(r));
  }
  j["micro"] = report.micro ? RowJson(*report.micro) : nlohmann::json(nullptr);
  j["macro"] = report.macro ? RowJson(*report.macro) : nlohmann::json(nullptr);
  return j.dump(2) + "\n";
}

std::string FormatTable(const MetricsReport& report) {
  std::string out;
  char line[128];
  auto add = [&](const std::string& name, const MetricsRow& r) {
    std::snprintf(line, sizeof line, "%-10s | %6lld | %5.3f | %5.3f | %5.3f | %5.3f\n",
                  name.c_str(), static_cast<long long>(r.gold_tokens), r.precision,
                  r.recall, r.f1, r.aon_recall);
    out += line;
  };
  std::snprintf(line, sizeof line, "%-10s | %6s | %5s | %5s | %5s | %5s\n", "Info Type", "No",
                "P", "R", "F1", "AON R");
  out += line;
  out += std::string(52, '-') + "\n";
  for (const MetricsRow& row : report.rows) {
    if (row.gold_tokens > 0) add(DisplayName(*row.label), row);
  }
  out += std::string(52, '-') + "\n";
  if (report.micro) add("Micro Avg", *report.micro);
  if (report.macro) add("Macro Avg", *report.macro);
  std::snprintf(line, sizeof line, "false positives: %lld, false negatives: %lld\n",
                static_cast<long long>(report.false_positives),
                static_cast<long long>(report.false_negatives));
  out += line;
  return out;
}

}  // namespace nightjar

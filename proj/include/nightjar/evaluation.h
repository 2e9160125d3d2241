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

#ifndef NIGHTJAR_EVALUATION_H_
#define NIGHTJAR_EVALUATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nightjar/core.h"
#include "nightjar/tokenizer.h"

namespace nightjar {

// System output for one tweet.
struct PredictedTweet {
  std::string tweet_id;
  std::vector<Detection> detections;

  friend bool operator==(const PredictedTweet&, const PredictedTweet&) = default;
};

// Token counts for one label, summed over whatever was scored.
struct LabelCounts {
  EntityLabel label = EntityLabel::kPerson;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tweets_with_gold = 0;
  std::int64_t tweets_all_found = 0;  // tweets with gold and fn == 0

  std::int64_t gold_tokens() const { return tp + fn; }
  LabelCounts& operator+=(const LabelCounts& other);
  friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

// Per-label counts for one tweet; only labels that occur in gold or
// predictions are present.
using TweetConfusion = std::map<EntityLabel, LabelCounts>;

// Projects gold and predicted spans onto `tokens` (a token counts when any
// part of it is covered) and compares the token sets per label. Throws
// DataError if the tweet ids differ.
TweetConfusion TokenConfusion(const AnnotatedTweet& gold, const PredictedTweet& predicted,
                              const std::vector<Token>& tokens);

struct Scores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Harmonic mean; 0 when both are 0.
double F1Score(double precision, double recall);

// P = tp/(tp+fp), R = tp/(tp+fn). With no predictions P is 1 if nothing was
// missed, else 0; with no gold R is 1. All-zero counts score 1/1/1.
Scores Prf(const LabelCounts& counts);

// Fraction of (tweet, label) pairs with gold where every gold token was found.
// 1.0 when no tweet has gold for the label.
double AonRecall(const std::vector<TweetConfusion>& per_tweet, EntityLabel label);

struct MetricsRow {
  std::optional<EntityLabel> label;  // empty on aggregate rows
  std::int64_t gold_tokens = 0;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  double aon_recall = 0;
};

MetricsRow RowFor(const LabelCounts& counts);

// Unweighted mean of P, R, F1 and AON-R; counts are summed. Throws DataError
// on empty input.
MetricsRow MacroAverage(std::span<const MetricsRow> rows);

struct Aggregates {
  MetricsRow micro;
  MetricsRow macro;
};

// Micro pools tp/fp/fn and AON credits; macro averages per-label scores.
// Rows without gold tokens are left out. Throws DataError if none remain.
Aggregates Aggregate(std::span<const LabelCounts> rows);

struct MetricsReport {
  // Every label seen in gold or predictions, in label order.
  std::vector<MetricsRow> rows;
  // Absent when the gold has no labeled tokens at all.
  std::optional<MetricsRow> micro;
  std::optional<MetricsRow> macro;
  std::int64_t false_positives = 0;
  std::int64_t false_negatives = 0;
  std::size_t tweets = 0;
};

// Folds per-tweet confusions into a report.
MetricsReport BuildReport(const std::vector<TweetConfusion>& per_tweet);

// Scores a whole corpus. Gold tweets with no predictions entry count as
// predicting nothing; a prediction for an id missing from gold throws
// DataError. `jobs` > 1 spreads the per-tweet work over threads.
MetricsReport EvaluateCorpus(const std::vector<AnnotatedTweet>& gold,
                             const std::vector<PredictedTweet>& predictions, int jobs = 1);

std::string ReportToJson(const MetricsReport& report);

// Fixed-width table: Info Type | No | P | R | F1 | AON R.
std::string FormatTable(const MetricsReport& report);

}  // namespace nightjar

#endif  // NIGHTJAR_EVALUATION_H_

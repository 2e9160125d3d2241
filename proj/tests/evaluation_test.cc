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

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "metric_oracle.h"
#include "micro_corpus.h"
#include "nightjar/text.h"

namespace nightjar {
namespace {

constexpr double kTight = 1e-12;

using testing_support::kTen;
using testing_support::MicroCorpus;
using testing_support::RandomMicroCorpus;

// Token i of kTen covers [3i, 3i+2).
Span Tok(std::size_t i) { return {3 * i, 3 * i + 2}; }

Detection Pred(Span s, EntityLabel l) { return MakeDetection(Widen(kTen), s, l, "t"); }

TweetConfusion Confuse(const std::vector<GoldSpan>& gold, const std::vector<Detection>& pred) {
  AnnotatedTweet g{{"1", kTen, false, {}}, gold};
  return TokenConfusion(g, {"1", pred}, Tokenize(std::string_view{kTen}));
}

TEST(Confusion, Examples) {
  const auto P = EntityLabel::kPerson;
  auto c = Confuse({{Tok(3), P}}, {Pred(Tok(3), P)});
  EXPECT_EQ(c[P].tp, 1);
  EXPECT_EQ(c[P].fp, 0);
  EXPECT_EQ(c[P].fn, 0);
  c = Confuse({{Tok(3), P}}, {});
  EXPECT_EQ(c[P].fn, 1);
  EXPECT_EQ(c[P].tweets_with_gold, 1);
  EXPECT_EQ(c[P].tweets_all_found, 0);
  c = Confuse({{Tok(3), P}, {Tok(7), P}}, {Pred(Tok(3), P), Pred(Tok(5), P)});
  EXPECT_EQ(c[P].tp, 1);
  EXPECT_EQ(c[P].fp, 1);
  EXPECT_EQ(c[P].fn, 1);
}

TEST(Confusion, PartialTokenCounts) {
  const auto P = EntityLabel::kPerson;
  // One character of w4 and all of w5 and w6.
  auto c = Confuse({{{13, 20}, P}}, {Pred({12, 13}, P)});
  EXPECT_EQ(c[P].tp, 1);
  EXPECT_EQ(c[P].fn, 2);
  // Wrong label: fp on ORG, fn on PERSON.
  c = Confuse({{Tok(1), P}}, {Pred(Tok(1), EntityLabel::kOrg)});
  EXPECT_EQ(c[P].fn, 1);
  EXPECT_EQ(c[EntityLabel::kOrg].fp, 1);
}

TEST(Confusion, IdMismatch) {
  AnnotatedTweet g{{"1", kTen, false, {}}, {}};
  EXPECT_THROW(TokenConfusion(g, {"2", {}}, Tokenize(std::string_view{kTen})), DataError);
}

TEST(PrfTest, Examples) {
  // Harmonic means of the published precision/recall pairs.
  EXPECT_NEAR(F1Score(0.54, 0.961), 2 * 0.54 * 0.961 / (0.54 + 0.961), kTight);
  EXPECT_NEAR(F1Score(0.54, 0.961), 0.691459027, 1e-9);
  EXPECT_NEAR(F1Score(0.685, 0.991), 0.81, 5e-4);
  const Scores vacuous = Prf({EntityLabel::kUrl, 0, 0, 0, 0, 0});
  EXPECT_EQ(vacuous.precision, 1.0);
  EXPECT_EQ(vacuous.recall, 1.0);
  EXPECT_EQ(vacuous.f1, 1.0);
  const Scores missed = Prf({EntityLabel::kUrl, 0, 0, 4, 1, 0});
  EXPECT_EQ(missed.precision, 0.0);
  EXPECT_EQ(missed.recall, 0.0);
  EXPECT_EQ(missed.f1, 0.0);
  const Scores s = Prf({EntityLabel::kUrl, 3, 1, 2, 0, 0});
  EXPECT_NEAR(s.precision, 0.75, kTight);
  EXPECT_NEAR(s.recall, 0.6, kTight);
  EXPECT_NEAR(s.f1, 2 * 0.75 * 0.6 / 1.35, kTight);
}

TEST(Aon, Examples) {
  const auto P = EntityLabel::kPerson;
  std::vector<TweetConfusion> per_tweet = {Confuse({{Tok(1), P}}, {Pred(Tok(1), P)}),
                                           Confuse({{Tok(2), P}}, {})};
  EXPECT_NEAR(AonRecall(per_tweet, P), 0.5, kTight);
  per_tweet = {Confuse({{Tok(1), P}, {Tok(2), P}}, {Pred(Tok(1), P)})};
  EXPECT_EQ(AonRecall(per_tweet, P), 0.0);
  EXPECT_NEAR(BuildReport(per_tweet).rows[0].recall, 0.5, kTight);
  per_tweet = {Confuse({{Tok(1), P}}, {Pred(Tok(1), P)}),
               Confuse({{Tok(2), P}}, {Pred(Tok(2), P)})};
  EXPECT_EQ(AonRecall(per_tweet, P), 1.0);
}

// Published per-label rows, in the order URL, Username, Person, Org, Group,
// City, State, Country, Location, Phone.
const std::vector<double> kPublishedP = {1.0, 0.685, 0.144, 0.02, 0.0,
                                         0.154, 0.278, 0.2, 0.037, 1.0};
const std::vector<double> kPublishedR = {1.0, 0.991, 0.735, 0.308, 0.0,
                                         0.5, 1.0, 1.0, 0.333, 1.0};

std::vector<MetricsRow> PublishedRows() {
  std::vector<MetricsRow> rows;
  for (std::size_t i = 0; i < kPublishedP.size(); ++i) {
    MetricsRow r;
    r.precision = kPublishedP[i];
    r.recall = kPublishedR[i];
    r.f1 = F1Score(r.precision, r.recall);
    rows.push_back(r);
  }
  return rows;
}

TEST(AggregateTest, PublishedMacro) {
  const MetricsRow m = MacroAverage(PublishedRows());
  EXPECT_NEAR(m.recall, 0.687, 5e-4);
  EXPECT_NEAR(m.precision, 0.352, 5e-4);
  // The column mean of the published F1 values, not the printed 0.432.
  EXPECT_NEAR(m.f1, 0.4158, 5e-4);
}

TEST(AggregateTest, SingleLabelAndEmpty) {
  const LabelCounts c{EntityLabel::kPerson, 3, 2, 1, 4, 3};
  const Aggregates a = Aggregate(std::vector<LabelCounts>{c});
  const MetricsRow row = RowFor(c);
  for (const MetricsRow* r : {&a.micro, &a.macro}) {
    EXPECT_NEAR(r->precision, row.precision, kTight);
    EXPECT_NEAR(r->recall, row.recall, kTight);
    EXPECT_NEAR(r->f1, row.f1, kTight);
    EXPECT_NEAR(r->aon_recall, row.aon_recall, kTight);
  }
  EXPECT_THROW(Aggregate(std::vector<LabelCounts>{}), DataError);
  EXPECT_THROW(MacroAverage(std::vector<MetricsRow>{}), DataError);
  // Labels without gold are left out of both averages.
  const LabelCounts fp_only{EntityLabel::kOrg, 0, 5, 0, 0, 0};
  const Aggregates b = Aggregate(std::vector<LabelCounts>{c, fp_only});
  EXPECT_NEAR(b.macro.precision, row.precision, kTight);
  EXPECT_NEAR(b.micro.precision, row.precision, kTight);
}

using testing_support::G;

TEST(Corpus, PerfectAndEmpty) {
  const std::vector<AnnotatedTweet> gold = {
      G("1", "Shout out to Katie for it", {{{13, 18}, EntityLabel::kPerson}}),
      G("2", "see https://t.co/x now", {{{4, 18}, EntityLabel::kUrl}})};
  std::vector<PredictedTweet> pred;
  for (const auto& g : gold) {
    PredictedTweet p{g.tweet.id, {}};
    for (const auto& s : g.gold) p.detections.push_back(MakeDetection(Widen(g.tweet.text), s.span, s.label, "x"));
    pred.push_back(p);
  }
  MetricsReport r = EvaluateCorpus(gold, pred);
  for (const MetricsRow& row : r.rows) {
    EXPECT_EQ(row.precision, 1.0);
    EXPECT_EQ(row.recall, 1.0);
    EXPECT_EQ(row.aon_recall, 1.0);
  }
  EXPECT_EQ(r.false_positives, 0);
  EXPECT_EQ(r.false_negatives, 0);
  ASSERT_TRUE(r.micro && r.macro);
  EXPECT_EQ(r.micro->f1, 1.0);

  r = EvaluateCorpus(gold, {});
  EXPECT_EQ(r.micro->recall, 0.0);
  EXPECT_EQ(r.false_positives, 0);
  EXPECT_EQ(r.false_negatives, 2);
  EXPECT_EQ(r.tweets, 2u);

  EXPECT_THROW(EvaluateCorpus(gold, {{"3", {}}}), DataError);
}

TEST(Corpus, TableAndJson) {
  const std::vector<AnnotatedTweet> gold = {
      G("1", "call 555-123-4567 Katie", {{{5, 17}, EntityLabel::kPhone}})};
  const MetricsReport r = EvaluateCorpus(gold, {});
  const std::string table = FormatTable(r);
  EXPECT_NE(table.find("Info Type"), std::string::npos);
  EXPECT_NE(table.find("Phone #"), std::string::npos);
  EXPECT_NE(table.find("Micro Avg"), std::string::npos);
  EXPECT_NE(table.find("Macro Avg"), std::string::npos);
  const auto j = nlohmann::json::parse(ReportToJson(r));
  EXPECT_EQ(j["false_negatives"], 1);
  EXPECT_EQ(j["labels"][0]["label"], "PHONE");
  EXPECT_EQ(j["labels"][0]["recall"], 0.0);
}

void ExpectRowNear(const MetricsRow& row, const oracle::Row& o) {
  EXPECT_NEAR(row.precision, o.p, kTight);
  EXPECT_NEAR(row.recall, o.r, kTight);
  EXPECT_NEAR(row.f1, o.f1, kTight);
  EXPECT_NEAR(row.aon_recall, o.aon, kTight);
}

TEST(Oracle, RandomMicroCorpora) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    SCOPED_TRACE(trial);
    const MicroCorpus mc = RandomMicroCorpus(rng);
    const MetricsReport r = EvaluateCorpus(mc.gold, mc.pred, 1 + trial % 4);
    const oracle::Result o = oracle::Evaluate(mc.oracle);
    ASSERT_EQ(r.rows.size(), o.rows.size());
    for (const MetricsRow& row : r.rows) {
      const oracle::Row& orow = o.rows.at(static_cast<int>(*row.label));
      EXPECT_EQ(row.tp, orow.tp);
      EXPECT_EQ(row.fp, orow.fp);
      EXPECT_EQ(row.fn, orow.fn);
      ExpectRowNear(row, orow);
    }
    ASSERT_EQ(r.micro.has_value(), o.has_aggregate);
    if (o.has_aggregate) {
      ExpectRowNear(*r.micro, o.micro);
      ExpectRowNear(*r.macro, o.macro);
    }
    EXPECT_EQ(r.false_positives, o.total_fp);
    EXPECT_EQ(r.false_negatives, o.total_fn);
  }
}

// Adding a correct prediction never lowers recall or AON recall.
TEST(Oracle, Monotonicity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    MicroCorpus mc = RandomMicroCorpus(rng);
    const MetricsReport before = EvaluateCorpus(mc.gold, mc.pred);
    // Copy one gold span into the predictions.
    const std::size_t t = rng() % mc.gold.size();
    if (mc.gold[t].gold.empty()) continue;
    const GoldSpan& g = mc.gold[t].gold[rng() % mc.gold[t].gold.size()];
    mc.pred[t].detections.push_back(MakeDetection(Widen(kTen), g.span, g.label, "x"));
    const MetricsReport after = EvaluateCorpus(mc.gold, mc.pred);
    auto find = [&](const MetricsReport& r) {
      for (const MetricsRow& row : r.rows) {
        if (row.label == g.label) return row;
      }
      return MetricsRow{};
    };
    EXPECT_GE(find(after).recall, find(before).recall);
    EXPECT_GE(find(after).aon_recall, find(before).aon_recall);
  }
}

}  // namespace
}  // namespace nightjar

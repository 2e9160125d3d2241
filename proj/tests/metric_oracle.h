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

#ifndef NIGHTJAR_TESTS_METRIC_ORACLE_H_
#define NIGHTJAR_TESTS_METRIC_ORACLE_H_

// Brute-force scorer used as a test oracle. It shares no code with the
// evaluation module: tokens are sets of indices found by scanning character
// by character, and every score is recomputed from those sets.

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Span {
  int start;
  int end;
  int label;
};

struct Tweet {
  // Half-open character ranges of the tokens.
  std::vector<std::pair<int, int>> tokens;
  std::vector<Span> gold;
  std::vector<Span> pred;
};

struct Row {
  double p = 0, r = 0, f1 = 0, aon = 0;
  long tp = 0, fp = 0, fn = 0;
};

struct Result {
  std::map<int, Row> rows;  // labels seen in gold or pred
  bool has_aggregate = false;
  Row micro, macro;
  long total_fp = 0, total_fn = 0;
};

inline std::set<int> TokenSet(const Tweet& t, const std::vector<Span>& spans, int label) {
  std::set<int> out;
  for (const Span& s : spans) {
    if (s.label != label) continue;
    for (int c = s.start; c < s.end; ++c) {
      for (int i = 0; i < static_cast<int>(t.tokens.size()); ++i) {
        if (t.tokens[i].first <= c && c < t.tokens[i].second) out.insert(i);
      }
    }
  }
  return out;
}

inline double Div(double a, double b) { return a / b; }

inline Row Score(long tp, long fp, long fn) {
  Row r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  if (tp + fp == 0) {
    r.p = fn == 0 ? 1.0 : 0.0;
  } else {
    r.p = Div(tp, tp + fp);
  }
  r.r = tp + fn == 0 ? 1.0 : Div(tp, tp + fn);
  r.f1 = r.p + r.r == 0 ? 0.0 : 2 * r.p * r.r / (r.p + r.r);
  return r;
}

inline Result Evaluate(const std::vector<Tweet>& corpus) {
  std::set<int> labels;
  for (const Tweet& t : corpus) {
    for (const Span& s : t.gold) labels.insert(s.label);
    for (const Span& s : t.pred) labels.insert(s.label);
  }
  Result res;
  long micro_tp = 0, micro_fp = 0, micro_fn = 0, pooled_with = 0, pooled_found = 0;
  double sum_p = 0, sum_r = 0, sum_f1 = 0, sum_aon = 0;
  int with_gold = 0;
  for (int label : labels) {
    long tp = 0, fp = 0, fn = 0, tweets_with = 0, tweets_found = 0;
    for (const Tweet& t : corpus) {
      const std::set<int> g = TokenSet(t, t.gold, label);
      const std::set<int> p = TokenSet(t, t.pred, label);
      long ttp = 0, tfn = 0;
      for (int i : g) (p.count(i) ? ttp : tfn) += 1;
      long tfp = 0;
      for (int i : p) tfp += g.count(i) ? 0 : 1;
      tp += ttp;
      fp += tfp;
      fn += tfn;
      if (!g.empty()) {
        ++tweets_with;
        if (tfn == 0) ++tweets_found;
      }
    }
    Row row = Score(tp, fp, fn);
    row.aon = tweets_with == 0 ? 1.0 : Div(tweets_found, tweets_with);
    res.rows[label] = row;
    res.total_fp += fp;
    res.total_fn += fn;
    if (tp + fn > 0) {
      ++with_gold;
      micro_tp += tp;
      micro_fp += fp;
      micro_fn += fn;
      pooled_with += tweets_with;
      pooled_found += tweets_found;
      sum_p += row.p;
      sum_r += row.r;
      sum_f1 += row.f1;
      sum_aon += row.aon;
    }
  }
  if (with_gold > 0) {
    res.has_aggregate = true;
    res.micro = Score(micro_tp, micro_fp, micro_fn);
    res.micro.aon = Div(pooled_found, pooled_with);
    res.macro.p = sum_p / with_gold;
    res.macro.r = sum_r / with_gold;
    res.macro.f1 = sum_f1 / with_gold;
    res.macro.aon = sum_aon / with_gold;
  }
  return res;
}

}  // namespace oracle

#endif  // NIGHTJAR_TESTS_METRIC_ORACLE_H_

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

#ifndef NIGHTJAR_TESTS_MICRO_CORPUS_H_
#define NIGHTJAR_TESTS_MICRO_CORPUS_H_

// Random micro-corpora over ten fixed tokens, in both library and oracle form.

#include <random>
#include <string>
#include <vector>

#include "metric_oracle.h"
#include "nightjar/evaluation.h"
#include "nightjar/text.h"
#include "nightjar/tokenizer.h"

namespace nightjar::testing_support {

inline const std::string kTen = "w0 w1 w2 w3 w4 w5 w6 w7 w8 w9";

inline AnnotatedTweet G(std::string id, std::string text, std::vector<GoldSpan> gold) {
  return {{std::move(id), std::move(text), false, {}}, std::move(gold)};
}

struct MicroCorpus {
  std::vector<AnnotatedTweet> gold;
  std::vector<PredictedTweet> pred;
  std::vector<oracle::Tweet> oracle;
};

inline MicroCorpus RandomMicroCorpus(std::mt19937_64& rng) {
  const std::vector<EntityLabel> labels = {EntityLabel::kPerson, EntityLabel::kOrg,
                                           EntityLabel::kUrl, EntityLabel::kCity,
                                           EntityLabel::kPhone};
  MicroCorpus mc;
  const int n = 1 + static_cast<int>(rng() % 20);
  const int nlabels = 1 + static_cast<int>(rng() % 5);
  const auto tokens = Tokenize(std::string_view{kTen});
  for (int t = 0; t < n; ++t) {
    AnnotatedTweet g = G("t" + std::to_string(t), kTen, {});
    PredictedTweet p{g.tweet.id, {}};
    oracle::Tweet o;
    for (const Token& tok : tokens) {
      o.tokens.emplace_back(static_cast<int>(tok.span.start), static_cast<int>(tok.span.end));
    }
    for (int li = 0; li < nlabels; ++li) {
      const EntityLabel l = labels[li];
      // Gold spans are non-overlapping within a label: pick disjoint token runs.
      for (std::size_t i = 0; i < 10; ++i) {
        if (rng() % 4 != 0) continue;
        const std::size_t len = 1 + rng() % 3;
        const std::size_t j = std::min<std::size_t>(9, i + len - 1);
        Span s{tokens[i].span.start, tokens[j].span.end};
        if (rng() % 3 == 0) s.end = s.start + 1;  // partial token
        g.gold.push_back({s, l});
        o.gold.push_back({static_cast<int>(s.start), static_cast<int>(s.end), static_cast<int>(l)});
        i = j + 1;
      }
      for (std::size_t i = 0; i < 10; ++i) {
        if (rng() % 4 != 0) continue;
        const std::size_t j = std::min<std::size_t>(9, i + rng() % 3);
        const Span s{tokens[i].span.start, tokens[j].span.end};
        p.detections.push_back(MakeDetection(Widen(kTen), s, l, "x"));
        o.pred.push_back({static_cast<int>(s.start), static_cast<int>(s.end), static_cast<int>(l)});
        i = j;
      }
    }
    mc.gold.push_back(std::move(g));
    mc.pred.push_back(std::move(p));
    mc.oracle.push_back(std::move(o));
  }
  return mc;
}

}  // namespace nightjar::testing_support

#endif  // NIGHTJAR_TESTS_MICRO_CORPUS_H_

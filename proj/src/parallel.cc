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

#include "nightjar/parallel.h"


#include <exception>
#include <limits>
#include <unordered_map>

#include "nightjar/pipeline.h"
#include "nightjar/tokenizer.h"

namespace nightjar {
namespace {

// Runs fn(i) for i in [0, n) on `jobs` threads. If any call throws, the
// exception from the smallest index is rethrown so errors are as
// deterministic as the output.
template <typename Fn>
void ParallelFor(std::size_t n, int jobs, Fn&& fn) {
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs < 1 ? 1 : jobs)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(nightjar_parallel_failure)
      if (static_cast<std::size_t>(i) < failed_at) {
        failed_at = static_cast<std::size_t>(i);
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<const PredictedTweet*> Align(std::span<const Tweet> tweets,
                                         std::span<const PredictedTweet> predictions) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < tweets.size(); ++i) index.emplace(tweets[i].id, i);
  std::vector<const PredictedTweet*> aligned(tweets.size(), nullptr);
  for (const PredictedTweet& p : predictions) {
    auto it = index.find(p.tweet_id);
    if (it == index.end()) throw DataError("detections for unknown tweet id " + p.tweet_id);
    aligned[it->second] = &p;
  }
  return aligned;
}

std::vector<const PredictedTweet*> AlignGold(const std::vector<AnnotatedTweet>& gold,
                                             const std::vector<PredictedTweet>& predictions) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < gold.size(); ++i) index.emplace(gold[i].tweet.id, i);
  std::vector<const PredictedTweet*> aligned(gold.size(), nullptr);
  for (const PredictedTweet& p : predictions) {
    auto it = index.find(p.tweet_id);
    if (it == index.end()) {
      throw DataError("prediction for tweet id " + p.tweet_id + " which is not in the gold");
    }
    aligned[it->second] = &p;
  }
  return aligned;
}

MaskedTweet MaskOne(const Tweet& tweet, const PredictedTweet* predicted,
                    const ReplacementPolicy& policy, const ValuePool& pool) {
  static const std::vector<Detection> kNone;
  return MaskTweet(tweet, predicted ? predicted->detections : kNone, policy, pool);
}

TweetConfusion ConfuseOne(const AnnotatedTweet& gold, const PredictedTweet* predicted) {
  const PredictedTweet empty{gold.tweet.id, {}};
  return TokenConfusion(gold, predicted ? *predicted : empty, Tokenize(gold.tweet.text));
}

}  // namespace

std::vector<PredictedTweet> DetectCorpus(const Pipeline& pipeline, std::span<const Tweet> tweets,
                                         int jobs) {
  std::vector<PredictedTweet> out(tweets.size());
  ParallelFor(tweets.size(), jobs, [&](std::size_t i) {
    out[i] = PredictedTweet{tweets[i].id, pipeline.Detect(tweets[i])};
  });
  return out;
}

std::vector<PredictedTweet> DetectCorpusSerial(const Pipeline& pipeline,
                                               std::span<const Tweet> tweets) {
  std::vector<PredictedTweet> out;
  out.reserve(tweets.size());
  for (const Tweet& t : tweets) out.push_back({t.id, pipeline.Detect(t)});
  return out;
}

std::vector<MaskedTweet> MaskCorpus(std::span<const Tweet> tweets,
                                    std::span<const PredictedTweet> predictions,
                                    const ReplacementPolicy& policy, const ValuePool& pool,
                                    int jobs) {
  const auto aligned = Align(tweets, predictions);
  std::vector<MaskedTweet> out(tweets.size());
  ParallelFor(tweets.size(), jobs, [&](std::size_t i) {
    out[i] = MaskOne(tweets[i], aligned[i], policy, pool);
  });
  return out;
}

std::vector<MaskedTweet> MaskCorpusSerial(std::span<const Tweet> tweets,
                                          std::span<const PredictedTweet> predictions,
                                          const ReplacementPolicy& policy,
                                          const ValuePool& pool) {
  const auto aligned = Align(tweets, predictions);
  std::vector<MaskedTweet> out;
  out.reserve(tweets.size());
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    out.push_back(MaskOne(tweets[i], aligned[i], policy, pool));
  }
  return out;
}

std::vector<TweetConfusion> ConfusionCorpus(const std::vector<AnnotatedTweet>& gold,
                                            const std::vector<PredictedTweet>& predictions,
                                            int jobs) {
  const auto aligned = AlignGold(gold, predictions);
  std::vector<TweetConfusion> out(gold.size());
  ParallelFor(gold.size(), jobs, [&](std::size_t i) { out[i] = ConfuseOne(gold[i], aligned[i]); });
  return out;
}

std::vector<TweetConfusion> ConfusionCorpusSerial(const std::vector<AnnotatedTweet>& gold,
                                                  const std::vector<PredictedTweet>& predictions) {
  const auto aligned = AlignGold(gold, predictions);
  std::vector<TweetConfusion> out;
  out.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) out.push_back(ConfuseOne(gold[i], aligned[i]));
  return out;
}

}  // namespace nightjar

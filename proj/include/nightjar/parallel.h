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

#ifndef NIGHTJAR_PARALLEL_H_
#define NIGHTJAR_PARALLEL_H_

// Corpus-level kernels. Each tweet is independent, so the OpenMP versions
// split the tweet loop across `jobs` threads and write results by index; the
// serial versions are plain loops kept as the reference the parallel ones are
// tested and benchmarked against. Output never depends on `jobs`.

#include <span>
#include <vector>

#include "nightjar/core.h"
#include "nightjar/evaluation.h"
#include "nightjar/masking.h"

namespace nightjar {

class Pipeline;

std::vector<PredictedTweet> DetectCorpus(const Pipeline& pipeline, std::span<const Tweet> tweets,
                                         int jobs);
std::vector<PredictedTweet> DetectCorpusSerial(const Pipeline& pipeline,
                                               std::span<const Tweet> tweets);

// Predictions are matched to tweets by id; a tweet without an entry is masked
// with no detections. Detections must already be resolved.
std::vector<MaskedTweet> MaskCorpus(std::span<const Tweet> tweets,
                                    std::span<const PredictedTweet> predictions,
                                    const ReplacementPolicy& policy, const ValuePool& pool,
                                    int jobs);
std::vector<MaskedTweet> MaskCorpusSerial(std::span<const Tweet> tweets,
                                          std::span<const PredictedTweet> predictions,
                                          const ReplacementPolicy& policy,
                                          const ValuePool& pool);

// Per-tweet token confusion in gold order. A prediction whose id is not in
// the gold throws DataError.
std::vector<TweetConfusion> ConfusionCorpus(const std::vector<AnnotatedTweet>& gold,
                                            const std::vector<PredictedTweet>& predictions,
                                            int jobs);
std::vector<TweetConfusion> ConfusionCorpusSerial(const std::vector<AnnotatedTweet>& gold,
                                                  const std::vector<PredictedTweet>& predictions);

}  // namespace nightjar

#endif  // NIGHTJAR_PARALLEL_H_

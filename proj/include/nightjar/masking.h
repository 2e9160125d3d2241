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

#ifndef NIGHTJAR_MASKING_H_
#define NIGHTJAR_MASKING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nightjar/core.h"

namespace nightjar {

class RegexDetectors;

enum class MaskAction { kDelete, kPlaceholder, kSynthetic };

std::string_view MaskActionName(MaskAction action);
std::optional<MaskAction> ParseMaskAction(std::string_view name);

struct ReplacementPolicy {
  std::map<EntityLabel, MaskAction> actions;
  std::map<EntityLabel, std::string> placeholders;
  std::uint64_t seed = 0;
  // Same (label, surface) gets the same replacement in every tweet. Off by
  // default because it links tweets that mention the same name.
  bool consistent_across_tweets = false;

  // Removal class -> placeholder ("<URL>", "<USER>", ...), entity class ->
  // synthetic.
  static ReplacementPolicy Default();
  // "default", "placeholder" (everything), "delete" (everything) or
  // "synthetic" (default plus synthetic @handles for usernames).
  static ReplacementPolicy Named(std::string_view name);

  MaskAction ActionFor(EntityLabel label) const;
  std::string PlaceholderFor(EntityLabel label) const;
};

// Surrogate values per label for synthetic replacement.
class ValuePool {
 public:
  using Values = std::map<EntityLabel, std::vector<std::string>>;

  ValuePool() = default;
  explicit ValuePool(Values values) : values_(std::move(values)) {}

  static ValuePool FromJson(std::string_view json_text);
  static ValuePool Load(const std::string& path);
  // The pool shipped in data/pool.json.
  static const ValuePool& Default();

  const std::vector<std::string>& ValuesFor(EntityLabel label) const;
  const Values& values() const { return values_; }

 private:
  Values values_;
};

// Checks the pool covers every label the policy synthesizes (USERNAME may
// fall back to generated handles) and that no pool value would itself be
// caught by `detectors`. Throws ConfigError.
void ValidatePool(const ValuePool& pool, const ReplacementPolicy& policy,
                  const RegexDetectors& detectors);

// Seed for one tweet's replacement stream, independent of corpus order.
std::uint64_t TweetSeed(std::uint64_t seed, std::string_view tweet_id);

// A value for `label` drawn uniformly from the pool. USERNAME with an empty
// pool yields "@" plus a generated handle. Throws ConfigError if the pool has
// nothing for the label.
std::string SynthValue(EntityLabel label, const ValuePool& pool, std::mt19937_64& rng);

// Picks a non-overlapping subset, sorted by start. Conflicts are settled by:
// regex source over recognizer source, then the longer span, then label
// priority, then the earlier start.
std::vector<Detection> ResolveSpans(std::vector<Detection> detections);

// Applies the policy to resolved detections. Deleting a span also swallows
// the whitespace that would otherwise be left doubled (or dangling at either
// end); the edit's span includes it. Throws DataError naming the tweet on an
// out-of-range or overlapping detection.
MaskedTweet MaskTweet(const Tweet& tweet, const std::vector<Detection>& detections,
                      const ReplacementPolicy& policy,
                      const ValuePool& pool = ValuePool::Default());

}  // namespace nightjar

#endif  // NIGHTJAR_MASKING_H_

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

#include "nightjar/masking.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "default_data.h"
#include "json.hpp"
#include "nightjar/detectors.h"
#include "nightjar/text.h"

namespace nightjar {
namespace {

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view s, std::uint64_t h = 0xCBF29CE484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string GenerateHandle(std::mt19937_64& rng) {
  static constexpr std::string_view kFirst = "abcdefghijklmnopqrstuvwxyz";
  static constexpr std::string_view kRest = "abcdefghijklmnopqrstuvwxyz0123456789_";
  std::uniform_int_distribution<int> length(6, 12);
  std::uniform_int_distribution<std::size_t> first(0, kFirst.size() - 1);
  std::uniform_int_distribution<std::size_t> rest(0, kRest.size() - 1);
  std::string handle = "@";
  handle += kFirst[first(rng)];
  for (int i = length(rng) - 1; i > 0; --i) handle += kRest[rest(rng)];
  return handle;
}

}  // namespace

std::string_view MaskActionName(MaskAction action) {
  switch (action) {
    case MaskAction::kDelete: return "delete";
    case MaskAction::kPlaceholder: return "placeholder";
    case MaskAction::kSynthetic: return "synthetic";
  }
  return "?";
}

std::optional<MaskAction> ParseMaskAction(std::string_view name) {
  for (MaskAction a : {MaskAction::kDelete, MaskAction::kPlaceholder, MaskAction::kSynthetic}) {
    if (MaskActionName(a) == name) return a;
  }
  return std::nullopt;
}

ReplacementPolicy ReplacementPolicy::Default() {
  ReplacementPolicy p;
  for (EntityLabel label : kAllLabels) {
    p.actions[label] = ClassOf(label) == LabelClass::kRemoval ? MaskAction::kPlaceholder
                                                              : MaskAction::kSynthetic;
    p.placeholders[label] = "<" + std::string(LabelName(label)) + ">";
  }
  p.placeholders[EntityLabel::kUsername] = "<USER>";
  p.placeholders[EntityLabel::kIdNumber] = "<ID>";
  return p;
}

ReplacementPolicy ReplacementPolicy::Named(std::string_view name) {
  ReplacementPolicy p = Default();
  if (name == "default") return p;
  if (name == "synthetic") {
    p.actions[EntityLabel::kUsername] = MaskAction::kSynthetic;
    return p;
  }
  const auto action = ParseMaskAction(name);
  if (!action || *action == MaskAction::kSynthetic) {
    throw ConfigError("unknown policy '" + std::string(name) +
                      "' (expected default, placeholder, delete or synthetic)");
  }
  for (auto& [label, a] : p.actions) a = *action;
  return p;
}

MaskAction ReplacementPolicy::ActionFor(EntityLabel label) const {
  auto it = actions.find(label);
  if (it != actions.end()) return it->second;
  return ClassOf(label) == LabelClass::kRemoval ? MaskAction::kPlaceholder
                                                : MaskAction::kSynthetic;
}

std::string ReplacementPolicy::PlaceholderFor(EntityLabel label) const {
  auto it = placeholders.find(label);
  if (it != placeholders.end()) return it->second;
  return "<" + std::string(LabelName(label)) + ">";
}

ValuePool ValuePool::FromJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("value pool: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("value pool: expected a JSON object");
  Values values;
  for (const auto& [name, list] : doc.items()) {
    const auto label = ParseLabel(name);
    if (!label) throw ConfigError("value pool: unknown label '" + name + "'");
    if (!list.is_array()) throw ConfigError("value pool: " + name + " must be an array");
    for (const auto& v : list) {
      if (!v.is_string() || v.get<std::string>().empty()) {
        throw ConfigError("value pool: " + name + " entries must be non-empty strings");
      }
      values[*label].push_back(v.get<std::string>());
    }
  }
  return ValuePool(std::move(values));
}

ValuePool ValuePool::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open value pool " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

const ValuePool& ValuePool::Default() {
  static const ValuePool pool = FromJson(internal::kDefaultPoolJson);
  return pool;
}

const std::vector<std::string>& ValuePool::ValuesFor(EntityLabel label) const {
  static const std::vector<std::string> kEmpty;
  auto it = values_.find(label);
  return it == values_.end() ? kEmpty : it->second;
}

void ValidatePool(const ValuePool& pool, const ReplacementPolicy& policy,
                  const RegexDetectors& detectors) {
  for (EntityLabel label : kAllLabels) {
    if (policy.ActionFor(label) != MaskAction::kSynthetic) continue;
    if (pool.ValuesFor(label).empty() && label != EntityLabel::kUsername) {
      throw ConfigError("value pool has no values for " + std::string(LabelName(label)) +
                        ", which the policy replaces synthetically");
    }
  }
  for (const auto& [label, values] : pool.values()) {
    for (const std::string& v : values) {
      if (!detectors.Run(Widen(v), false).empty()) {
        throw ConfigError("value pool entry '" + v + "' for " +
                          std::string(LabelName(label)) + " matches a regex detector");
      }
    }
  }
}

std::uint64_t TweetSeed(std::uint64_t seed, std::string_view tweet_id) {
  return Mix(seed ^ Mix(Fnv1a(tweet_id)));
}

std::string SynthValue(EntityLabel label, const ValuePool& pool, std::mt19937_64& rng) {
  const auto& values = pool.ValuesFor(label);
  if (values.empty()) {
    if (label == EntityLabel::kUsername) return GenerateHandle(rng);
    throw ConfigError("value pool has no values for " + std::string(LabelName(label)));
  }
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  return values[pick(rng)];
}

std::vector<Detection> ResolveSpans(std::vector<Detection> detections) {
  auto rank = [](const Detection& d) {
    return std::make_tuple(!IsRegexSource(d.source), ~d.span.length(), LabelPriority(d.label),
                           d.span.start, d.span.end, d.source);
  };
  std::sort(detections.begin(), detections.end(),
            [&](const Detection& a, const Detection& b) { return rank(a) < rank(b); });
  std::vector<Detection> kept;
  for (Detection& d : detections) {
    const bool clash = std::any_of(kept.begin(), kept.end(), [&](const Detection& k) {
      return k.span.Overlaps(d.span);
    });
    if (!clash) kept.push_back(std::move(d));
  }
  std::sort(kept.begin(), kept.end(), [](const Detection& a, const Detection& b) {
    return a.span.start < b.span.start;
  });
  return kept;
}

MaskedTweet MaskTweet(const Tweet& tweet, const std::vector<Detection>& detections,
                      const ReplacementPolicy& policy, const ValuePool& pool) {
  const std::wstring text = Widen(tweet.text);
  std::vector<Detection> sorted = detections;
  std::sort(sorted.begin(), sorted.end(), [](const Detection& a, const Detection& b) {
    return a.span.start < b.span.start;
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Span s = sorted[i].span;
    if (!s.ValidFor(text.size())) {
      throw DataError("tweet " + tweet.id + ": span [" + std::to_string(s.start) + ", " +
                      std::to_string(s.end) + ") out of bounds for text of length " +
                      std::to_string(text.size()));
    }
    if (i > 0 && sorted[i - 1].span.Overlaps(s)) {
      throw DataError("tweet " + tweet.id + ": overlapping detections; resolve spans first");
    }
  }

  std::mt19937_64 tweet_rng(TweetSeed(policy.seed, tweet.id));
  std::map<std::pair<EntityLabel, std::string>, std::string> chosen;
  auto synthesize = [&](const Detection& d) {
    const auto key = std::pair(d.label, Narrow(text.substr(d.span.start, d.span.length())));
    if (auto it = chosen.find(key); it != chosen.end()) return it->second;
    std::string value;
    if (policy.consistent_across_tweets) {
      std::mt19937_64 rng(
          Mix(policy.seed ^ Mix(Fnv1a(key.second, Fnv1a(LabelName(d.label))))));
      value = SynthValue(d.label, pool, rng);
    } else {
      value = SynthValue(d.label, pool, tweet_rng);
    }
    chosen.emplace(key, value);
    return value;
  };

  MaskedTweet out{tweet.id, tweet.text, {}, {}};
  // Masked output so far; deletions look at its last character.
  std::wstring prefix;
  std::size_t cursor = 0;
  auto all_space = [&](std::size_t from, std::size_t to) {
    return std::all_of(text.begin() + from, text.begin() + to, IsSpace);
  };
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Detection& d = sorted[i];
    Edit edit{d.span, d.label, {}, d.source};
    switch (policy.ActionFor(d.label)) {
      case MaskAction::kPlaceholder:
        edit.replacement = policy.PlaceholderFor(d.label);
        break;
      case MaskAction::kSynthetic:
        edit.replacement = synthesize(d);
        break;
      case MaskAction::kDelete: {
        const std::size_t next_start =
            i + 1 < sorted.size() ? sorted[i + 1].span.start : text.size();
        if (all_space(d.span.end, text.size())) {
          // Nothing follows: drop the whitespace on both sides.
          std::size_t start = d.span.start;
          while (start > cursor && IsSpace(text[start - 1])) --start;
          edit.span = {start, text.size()};
          if (start == cursor) {
            // Earlier deletions run right up to here; the whitespace before
            // the first of them would dangle, so it goes with that edit.
            std::size_t k = out.edits.size();
            std::size_t boundary = cursor;
            while (k > 0 && out.edits[k - 1].replacement.empty() &&
                   out.edits[k - 1].span.end == boundary) {
              boundary = out.edits[--k].span.start;
            }
            if (k < out.edits.size()) {
              const std::size_t floor = k > 0 ? out.edits[k - 1].span.end : 0;
              std::size_t first = boundary;
              while (first > floor && IsSpace(text[first - 1])) --first;
              prefix.resize(prefix.size() - (boundary - first));
              out.edits[k].span.start = first;
            }
          }
        } else {
          const bool left_open = (prefix.empty() && all_space(cursor, d.span.start)) ||
                                 (d.span.start > cursor && IsSpace(text[d.span.start - 1])) ||
                                 (d.span.start == cursor && !prefix.empty() &&
                                  IsSpace(prefix.back()));
          std::size_t end = d.span.end;
          while (end < next_start && IsSpace(text[end])) ++end;
          if (left_open) edit.span.end = end;
        }
        break;
      }
    }
    prefix.append(text, cursor, edit.span.start - cursor);
    prefix += Widen(edit.replacement);
    cursor = edit.span.end;
    out.edits.push_back(std::move(edit));
  }
  out.masked_text = ApplyEdits(out.original_text, out.edits);
  return out;
}

}  // namespace nightjar

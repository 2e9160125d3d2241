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

#ifndef NIGHTJAR_RECOGNIZER_H_
#define NIGHTJAR_RECOGNIZER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nightjar/core.h"
#include "nightjar/tokenizer.h"

namespace nightjar {

// Maps labels of an external scheme onto EntityLabel. A nullopt value drops
// the label explicitly; labels missing from the map are dropped too.
using LabelMap = std::map<std::string, std::optional<EntityLabel>, std::less<>>;

// PERSON, ORG, NORP->GROUP, GPE/LOC/FAC->LOCATION, CITY, STATE_OR_PROVINCE->STATE,
// COUNTRY. Everything else is dropped.
LabelMap DefaultLabelMap();

// Surface forms per label, indexed for token-sequence lookup.
class Gazetteer {
 public:
  using Entries = std::map<EntityLabel, std::vector<std::string>>;

  Gazetteer() = default;
  // Throws ConfigError on an empty surface string.
  explicit Gazetteer(Entries entries);

  // JSON object mapping label names to arrays of strings.
  static Gazetteer FromJson(std::string_view json_text);
  static Gazetteer Load(const std::string& path);
  // The gazetteer shipped in data/gazetteer.json.
  static const Gazetteer& Default();

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  const Entries& entries() const { return entries_; }
  std::size_t max_tokens() const { return max_tokens_; }

  // Label for a normalized token-sequence key, if any.
  std::optional<EntityLabel> Lookup(const std::wstring& key, bool case_insensitive) const;

  // Key for tokens [first, last): token texts, adjacent ones joined with a
  // single space when whitespace separates them.
  static std::wstring KeyFor(const std::vector<Token>& tokens, std::size_t first,
                             std::size_t last);

 private:
  Entries entries_;
  std::size_t size_ = 0;
  std::size_t max_tokens_ = 0;
  std::unordered_map<std::wstring, EntityLabel> exact_;
  std::unordered_map<std::wstring, EntityLabel> folded_;
};

// Something that marks entity spans in a tweet. Implementations must be safe
// to call from several threads at once.
class Recognizer {
 public:
  virtual ~Recognizer() = default;
  virtual const std::string& name() const = 0;
  virtual std::vector<Detection> Recognize(const Tweet& tweet, std::wstring_view text,
                                           const std::vector<Token>& tokens) const = 0;
};

// Longest-match-first dictionary lookup over token runs. Each maximal run
// found in the gazetteer yields one detection; when a surface is listed under
// several labels the higher-priority label wins. In case-insensitive mode
// ASCII case is ignored, except for short all-caps entries like "MD".
std::vector<Detection> RecognizeBuiltin(std::wstring_view text,
                                        const std::vector<Token>& tokens,
                                        const Gazetteer& gazetteer,
                                        bool case_insensitive,
                                        std::string_view source = "builtin");
std::vector<Detection> RecognizeBuiltin(const Tweet& tweet, const Gazetteer& gazetteer,
                                        bool case_insensitive);

class GazetteerRecognizer : public Recognizer {
 public:
  GazetteerRecognizer(std::string name, Gazetteer gazetteer, bool case_insensitive);

  const std::string& name() const override { return name_; }
  std::vector<Detection> Recognize(const Tweet& tweet, std::wstring_view text,
                                   const std::vector<Token>& tokens) const override;

 private:
  std::string name_;
  Gazetteer gazetteer_;
  bool case_insensitive_;
};

// One recognizer's output for a tweet.
using RecognizerOutput = std::pair<std::string, std::vector<Detection>>;

// Token-level union. A token carries label L if any recognizer put an L
// detection over it; runs of adjacent tokens with the same label merge into
// one detection whose source lists every contributing recognizer, sorted and
// joined with '+'. Commutative and idempotent. Output is sorted by start,
// then label priority.
std::vector<Detection> UnionCombine(std::wstring_view text,
                                    const std::vector<Token>& tokens,
                                    const std::vector<RecognizerOutput>& results);

}  // namespace nightjar

#endif  // NIGHTJAR_RECOGNIZER_H_

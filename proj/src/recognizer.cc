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

#include "nightjar/recognizer.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "default_data.h"
#include "json.hpp"
#include "nightjar/text.h"

namespace nightjar {
namespace {

bool IsShortAllCaps(std::wstring_view s) {
  return s.size() <= 3 &&
         std::all_of(s.begin(), s.end(), [](wchar_t c) { return c >= L'A' && c <= L'Z'; });
}

void Insert(std::unordered_map<std::wstring, EntityLabel>& index,
            const std::wstring& key, EntityLabel label) {
  auto [it, inserted] = index.emplace(key, label);
  if (!inserted && LabelPriority(label) < LabelPriority(it->second)) it->second = label;
}

}  // namespace

LabelMap DefaultLabelMap() {
  return {
      {"PERSON", EntityLabel::kPerson},
      {"PER", EntityLabel::kPerson},
      {"ORG", EntityLabel::kOrg},
      {"ORGANIZATION", EntityLabel::kOrg},
      {"NORP", EntityLabel::kGroup},
      {"NATIONALITY", EntityLabel::kGroup},
      {"RELIGION", EntityLabel::kGroup},
      {"GPE", EntityLabel::kLocation},
      {"LOC", EntityLabel::kLocation},
      {"LOCATION", EntityLabel::kLocation},
      {"FAC", EntityLabel::kLocation},
      {"CITY", EntityLabel::kCity},
      {"STATE_OR_PROVINCE", EntityLabel::kState},
      {"COUNTRY", EntityLabel::kCountry},
  };
}

Gazetteer::Gazetteer(Entries entries) : entries_(std::move(entries)) {
  for (const auto& [label, surfaces] : entries_) {
    for (const std::string& surface : surfaces) {
      if (surface.empty()) {
        throw ConfigError("gazetteer entry for " + std::string(LabelName(label)) +
                          " is empty");
      }
      const std::vector<Token> tokens = Tokenize(surface);
      if (tokens.empty()) {
        throw ConfigError("gazetteer entry '" + surface + "' has no tokens");
      }
      const std::wstring key = KeyFor(tokens, 0, tokens.size());
      Insert(exact_, key, label);
      if (!IsShortAllCaps(key)) Insert(folded_, AsciiLower(key), label);
      max_tokens_ = std::max(max_tokens_, tokens.size());
      ++size_;
    }
  }
}

Gazetteer Gazetteer::FromJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("gazetteer: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("gazetteer: expected a JSON object");
  Entries entries;
  for (const auto& [name, values] : doc.items()) {
    const auto label = ParseLabel(name);
    if (!label) throw ConfigError("gazetteer: unknown label '" + name + "'");
    if (!values.is_array()) throw ConfigError("gazetteer: " + name + " must be an array");
    for (const auto& v : values) {
      if (!v.is_string()) throw ConfigError("gazetteer: " + name + " entries must be strings");
      entries[*label].push_back(v.get<std::string>());
    }
  }
  return Gazetteer(std::move(entries));
}

Gazetteer Gazetteer::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open gazetteer " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

const Gazetteer& Gazetteer::Default() {
  static const Gazetteer gazetteer = FromJson(internal::kDefaultGazetteerJson);
  return gazetteer;
}

std::optional<EntityLabel> Gazetteer::Lookup(const std::wstring& key,
                                             bool case_insensitive) const {
  if (auto it = exact_.find(key); it != exact_.end()) return it->second;
  if (case_insensitive) {
    if (auto it = folded_.find(AsciiLower(key)); it != folded_.end()) return it->second;
  }
  return std::nullopt;
}

std::wstring Gazetteer::KeyFor(const std::vector<Token>& tokens, std::size_t first,
                               std::size_t last) {
  std::wstring key;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first && tokens[i].span.start > tokens[i - 1].span.end) key.push_back(L' ');
    key += tokens[i].text;
  }
  return key;
}

std::vector<Detection> RecognizeBuiltin(std::wstring_view text,
                                        const std::vector<Token>& tokens,
                                        const Gazetteer& gazetteer, bool case_insensitive,
                                        std::string_view source) {
  std::vector<Detection> out;
  if (gazetteer.empty()) return out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    const std::size_t longest = std::min(gazetteer.max_tokens(), tokens.size() - i);
    for (std::size_t n = longest; n >= 1; --n) {
      if (auto label = gazetteer.Lookup(Gazetteer::KeyFor(tokens, i, i + n), case_insensitive)) {
        out.push_back(MakeDetection(text, {tokens[i].span.start, tokens[i + n - 1].span.end},
                                    *label, std::string(source)));
        matched = n;
        break;
      }
    }
    i += matched > 0 ? matched : 1;
  }
  return out;
}

std::vector<Detection> RecognizeBuiltin(const Tweet& tweet, const Gazetteer& gazetteer,
                                        bool case_insensitive) {
  const std::wstring text = Widen(tweet.text);
  return RecognizeBuiltin(text, Tokenize(text), gazetteer, case_insensitive);
}

GazetteerRecognizer::GazetteerRecognizer(std::string name, Gazetteer gazetteer,
                                         bool case_insensitive)
    : name_(std::move(name)),
      gazetteer_(std::move(gazetteer)),
      case_insensitive_(case_insensitive) {}

std::vector<Detection> GazetteerRecognizer::Recognize(const Tweet&, std::wstring_view text,
                                                      const std::vector<Token>& tokens) const {
  return RecognizeBuiltin(text, tokens, gazetteer_, case_insensitive_, name_);
}

std::vector<Detection> UnionCombine(std::wstring_view text,
                                    const std::vector<Token>& tokens,
                                    const std::vector<RecognizerOutput>& results) {
  // label -> token index -> contributing recognizers
  std::map<EntityLabel, std::map<std::size_t, std::set<std::string>>> marks;
  for (const auto& [name, detections] : results) {
    for (const Detection& d : detections) {
      const auto [first, last] = OverlappingRange(tokens, d.span);
      for (std::size_t t = first; t < last; ++t) marks[d.label][t].insert(name);
    }
  }
  std::vector<Detection> out;
  for (const auto& [label, by_token] : marks) {
    auto it = by_token.begin();
    while (it != by_token.end()) {
      const std::size_t first = it->first;
      std::size_t last = first;
      std::set<std::string> names = it->second;
      for (++it; it != by_token.end() && it->first == last + 1; ++it) {
        last = it->first;
        names.insert(it->second.begin(), it->second.end());
      }
      std::string source;
      for (const std::string& n : names) {
        if (!source.empty()) source += '+';
        source += n;
      }
      out.push_back(MakeDetection(text, {tokens[first].span.start, tokens[last].span.end},
                                  label, std::move(source)));
    }
  }
  std::sort(out.begin(), out.end(), [](const Detection& a, const Detection& b) {
    return std::pair(a.span.start, LabelPriority(a.label)) <
           std::pair(b.span.start, LabelPriority(b.label));
  });
  return out;
}

}  // namespace nightjar

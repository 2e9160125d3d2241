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

#ifndef NIGHTJAR_CORPUS_IO_H_
#define NIGHTJAR_CORPUS_IO_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nightjar/core.h"
#include "nightjar/evaluation.h"
#include "nightjar/recognizer.h"

namespace nightjar {

// All files are newline-delimited JSON in UTF-8, one object per line. Blank
// lines are ignored; any other unparsable line is a DataError carrying its
// line number. Offsets count Unicode scalar values. See docs/formats.md.

// Tweet lines: "id_str" or "id" (string or integer), "full_text" or "text",
// optional "user": {"verified": bool} (default false) and "lang".
Tweet ParseTweetLine(std::string_view line, std::size_t line_number);
std::vector<Tweet> ReadTweets(std::istream& in);
void WriteTweets(const std::vector<Tweet>& tweets, std::ostream& out);

// Keeps tweets whose lang equals `code`; tweets without lang are dropped.
std::vector<Tweet> FilterLanguage(const std::vector<Tweet>& tweets, std::string_view code);

// Standoff lines: {"tweet_id": "...", "spans": [{"start", "end", "label"}]}.
// Spans are checked against the joined tweet's text. Extra span fields
// ("source", "surface") are allowed; a surface that disagrees with the text
// is an error.
std::vector<AnnotatedTweet> ReadAnnotations(std::istream& in, const std::vector<Tweet>& tweets);
void WriteAnnotations(const std::vector<AnnotatedTweet>& annotated, std::ostream& out);

// Same schema as annotations, with "source" and "surface" on every span.
std::vector<PredictedTweet> ReadDetections(std::istream& in, const std::vector<Tweet>& tweets);
// Records are written sorted by tweet id.
void WriteDetections(const std::vector<PredictedTweet>& predictions, std::ostream& out);

// {"tweet_id", "original_text", "masked_text",
//  "edits": [{"start", "end", "label", "replacement", "source"}]}
void WriteMasked(const std::vector<MaskedTweet>& masked, std::ostream& out);
std::vector<MaskedTweet> ReadMasked(std::istream& in);

// Per-label injection probabilities for the synthetic corpus.
struct InjectionRates {
  std::map<EntityLabel, double> rate;
  double verified = 0.15;  // share of verified authors

  static InjectionRates Defaults();
  static InjectionRates Zero();
  // "0.1" sets every label; "URL=0.5,PHONE=0.2,verified=0.3" sets the named
  // ones on top of the defaults. Throws ConfigError.
  static InjectionRates Parse(std::string_view spec);
};

struct SyntheticCorpus {
  std::vector<Tweet> tweets;
  std::vector<AnnotatedTweet> gold;
};

// Builds `n` tweets of benign filler with identifiable strings injected at
// recorded offsets; the injection records are the gold spans. Phones and
// emails of verified authors are injected but not recorded, matching the
// removal rule. A pure function of its arguments.
SyntheticCorpus GenerateSyntheticCorpus(std::uint64_t seed, std::size_t n,
                                        const InjectionRates& rates = InjectionRates::Defaults(),
                                        const Gazetteer& gazetteer = Gazetteer::Default());

}  // namespace nightjar

#endif  // NIGHTJAR_CORPUS_IO_H_

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

#ifndef NIGHTJAR_DETECTORS_H_
#define NIGHTJAR_DETECTORS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nightjar/core.h"

namespace nightjar {

// Source names recorded on regex detections.
inline constexpr std::string_view kUrlSource = "regex:url";
inline constexpr std::string_view kUsernameSource = "regex:username";
inline constexpr std::string_view kPhoneSource = "regex:phone";
inline constexpr std::string_view kEmailSource = "regex:email";
inline constexpr std::string_view kIdSource = "regex:id";
inline constexpr std::string_view kZipSource = "regex:zip";

bool IsRegexSource(std::string_view source);

// Patterns use Boost perl syntax and are matched against UTF-32 text.
struct RegexConfig {
  std::string url_pattern;
  std::string username_pattern;
  std::string phone_pattern;
  std::string email_pattern;
  std::string hashtag_pattern;
  std::string zip_pattern;

  int phone_min_digits = 7;
  int phone_max_digits = 15;

  // A token counts as an identification number when it is at least this long
  // and mixes at least this many letters and digits.
  int id_min_length = 9;
  int id_min_letters = 2;
  int id_min_digits = 2;

  // Words next to a 5-digit number that make it a ZIP code. cue words match
  // case-insensitively, state codes exactly.
  std::vector<std::string> zip_cue_words;
  std::vector<std::string> zip_state_codes;
  // ZIP+4 ("21218-2683") is distinctive enough to need no cue.
  bool zip_plus4_needs_no_cue = true;

  static RegexConfig Defaults();
};

// The compiled detector set. Construction compiles every pattern once; the
// object is immutable afterwards and safe to share between threads.
class RegexDetectors {
 public:
  explicit RegexDetectors(RegexConfig config = RegexConfig::Defaults());
  ~RegexDetectors();
  RegexDetectors(RegexDetectors&&) noexcept;
  RegexDetectors& operator=(RegexDetectors&&) noexcept;

  std::vector<Detection> DetectUrls(std::wstring_view text) const;
  std::vector<Detection> DetectUsernames(std::wstring_view text) const;
  std::vector<Detection> DetectPhoneNumbers(std::wstring_view text,
                                            bool author_verified) const;
  std::vector<Detection> DetectEmails(std::wstring_view text,
                                      bool author_verified) const;
  std::vector<Detection> DetectIdNumbers(std::wstring_view text) const;
  std::vector<Detection> DetectZipCodes(std::wstring_view text) const;

  // All detectors, sorted by start. Overlaps are settled by precedence
  // URL > EMAIL > USERNAME > PHONE > ID_NUMBER > ZIP: a later detector drops
  // any match that touches a span already claimed.
  std::vector<Detection> Run(const Tweet& tweet) const;
  std::vector<Detection> Run(std::wstring_view text, bool author_verified) const;

  // Whether `surface` on its own is accepted by the pattern and filters of
  // the detector for `label`.
  bool SelfMatches(EntityLabel label, std::string_view surface) const;

  const RegexConfig& config() const;

 private:
  struct Compiled;
  std::unique_ptr<Compiled> compiled_;
};

// Process-wide detectors built from RegexConfig::Defaults().
const RegexDetectors& DefaultDetectors();

// Convenience wrappers over DefaultDetectors() taking UTF-8.
std::vector<Detection> DetectUrls(std::string_view text);
std::vector<Detection> DetectUsernames(std::string_view text);
std::vector<Detection> DetectPhoneNumbers(std::string_view text, bool author_verified);
std::vector<Detection> DetectEmails(std::string_view text, bool author_verified);
std::vector<Detection> DetectIdNumbers(std::string_view text);
std::vector<Detection> DetectZipCodes(std::string_view text);
std::vector<Detection> RunRegexDetectors(const Tweet& tweet);

}  // namespace nightjar

#endif  // NIGHTJAR_DETECTORS_H_

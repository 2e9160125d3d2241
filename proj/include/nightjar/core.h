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

#ifndef NIGHTJAR_CORE_H_
#define NIGHTJAR_CORE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nightjar {

// Bad configuration or command-line input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed corpus, annotation or span data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An external recognizer process failed or spoke the protocol wrongly.
class AdapterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EntityLabel {
  kUrl,
  kUsername,
  kPhone,
  kEmail,
  kIdNumber,
  kPerson,
  kOrg,
  kGroup,
  kCity,
  kState,
  kCountry,
  kLocation,
  kZip,
};

inline constexpr std::array<EntityLabel, 13> kAllLabels = {
    EntityLabel::kUrl,     EntityLabel::kUsername, EntityLabel::kPhone,
    EntityLabel::kEmail,   EntityLabel::kIdNumber, EntityLabel::kPerson,
    EntityLabel::kOrg,     EntityLabel::kGroup,    EntityLabel::kCity,
    EntityLabel::kState,   EntityLabel::kCountry,  EntityLabel::kLocation,
    EntityLabel::kZip,
};

enum class LabelClass { kRemoval, kEntity };

LabelClass ClassOf(EntityLabel label);

// Canonical upper-case wire name, e.g. "ID_NUMBER".
std::string_view LabelName(EntityLabel label);
std::optional<EntityLabel> ParseLabel(std::string_view name);

// Position of the label in the overlap-resolution order. Lower wins.
// Removal class: URL > EMAIL > USERNAME > PHONE > ID_NUMBER > ZIP;
// entity class: PERSON > ORG > GROUP > CITY > STATE > COUNTRY > LOCATION.
int LabelPriority(EntityLabel label);

// Half-open range of scalar-value offsets.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  // 0 <= start < end <= text_length.
  bool ValidFor(std::size_t text_length) const {
    return start < end && end <= text_length;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Tweet {
  std::string id;
  std::string text;  // UTF-8
  bool author_verified = false;
  std::optional<std::string> lang;

  friend bool operator==(const Tweet&, const Tweet&) = default;
};

struct Detection {
  Span span;
  EntityLabel label = EntityLabel::kPerson;
  std::string source;
  std::string surface;  // UTF-8 text covered by span

  friend bool operator==(const Detection&, const Detection&) = default;
};

// Builds a detection, deriving the surface from the wide text. Throws
// DataError if the span does not fit.
Detection MakeDetection(std::wstring_view text, Span span, EntityLabel label,
                        std::string source);

// True iff the surface equals the covered substring.
bool SurfaceMatches(const Detection& detection, std::wstring_view text);

struct GoldSpan {
  Span span;
  EntityLabel label = EntityLabel::kPerson;

  friend bool operator==(const GoldSpan&, const GoldSpan&) = default;
};

struct AnnotatedTweet {
  Tweet tweet;
  std::vector<GoldSpan> gold;

  friend bool operator==(const AnnotatedTweet&, const AnnotatedTweet&) = default;
};

// Checks span validity against the text and non-overlap within each label.
void ValidateGold(const AnnotatedTweet& annotated);

struct Edit {
  Span span;  // in the original text
  EntityLabel label = EntityLabel::kPerson;
  std::string replacement;
  std::string source;

  friend bool operator==(const Edit&, const Edit&) = default;
};

struct MaskedTweet {
  std::string tweet_id;
  std::string original_text;
  std::string masked_text;
  std::vector<Edit> edits;  // sorted, non-overlapping

  friend bool operator==(const MaskedTweet&, const MaskedTweet&) = default;
};

// Applies edits right to left. Throws DataError on overlapping or
// out-of-range edits.
std::string ApplyEdits(std::string_view original_text,
                       const std::vector<Edit>& edits);

}  // namespace nightjar

#endif  // NIGHTJAR_CORE_H_

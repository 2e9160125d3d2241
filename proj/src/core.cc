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

#include "nightjar/core.h"

#include <algorithm>
#include <string>

#include "nightjar/text.h"

namespace nightjar {

LabelClass ClassOf(EntityLabel label) {
  switch (label) {
    case EntityLabel::kUrl:
    case EntityLabel::kUsername:
    case EntityLabel::kPhone:
    case EntityLabel::kEmail:
    case EntityLabel::kIdNumber:
    case EntityLabel::kZip:
      return LabelClass::kRemoval;
    default:
      return LabelClass::kEntity;
  }
}

std::string_view LabelName(EntityLabel label) {
  switch (label) {
    case EntityLabel::kUrl: return "URL";
    case EntityLabel::kUsername: return "USERNAME";
    case EntityLabel::kPhone: return "PHONE";
    case EntityLabel::kEmail: return "EMAIL";
    case EntityLabel::kIdNumber: return "ID_NUMBER";
    case EntityLabel::kPerson: return "PERSON";
    case EntityLabel::kOrg: return "ORG";
    case EntityLabel::kGroup: return "GROUP";
    case EntityLabel::kCity: return "CITY";
    case EntityLabel::kState: return "STATE";
    case EntityLabel::kCountry: return "COUNTRY";
    case EntityLabel::kLocation: return "LOCATION";
    case EntityLabel::kZip: return "ZIP";
  }
  return "?";
}

std::optional<EntityLabel> ParseLabel(std::string_view name) {
  for (EntityLabel label : kAllLabels) {
    if (LabelName(label) == name) return label;
  }
  return std::nullopt;
}

int LabelPriority(EntityLabel label) {
  switch (label) {
    case EntityLabel::kUrl: return 0;
    case EntityLabel::kEmail: return 1;
    case EntityLabel::kUsername: return 2;
    case EntityLabel::kPhone: return 3;
    case EntityLabel::kIdNumber: return 4;
    case EntityLabel::kZip: return 5;
    case EntityLabel::kPerson: return 6;
    case EntityLabel::kOrg: return 7;
    case EntityLabel::kGroup: return 8;
    case EntityLabel::kCity: return 9;
    case EntityLabel::kState: return 10;
    case EntityLabel::kCountry: return 11;
    case EntityLabel::kLocation: return 12;
  }
  return 13;
}

Detection MakeDetection(std::wstring_view text, Span span, EntityLabel label,
                        std::string source) {
  if (!span.ValidFor(text.size())) {
    throw DataError("span [" + std::to_string(span.start) + ", " +
                    std::to_string(span.end) + ") invalid for text of length " +
                    std::to_string(text.size()));
  }
  return Detection{span, label, std::move(source),
                   Narrow(text.substr(span.start, span.length()))};
}

bool SurfaceMatches(const Detection& detection, std::wstring_view text) {
  if (!detection.span.ValidFor(text.size())) return false;
  return Narrow(text.substr(detection.span.start, detection.span.length())) ==
         detection.surface;
}

void ValidateGold(const AnnotatedTweet& annotated) {
  const std::size_t length = CodepointLength(annotated.tweet.text);
  std::vector<GoldSpan> sorted = annotated.gold;
  for (const GoldSpan& g : sorted) {
    if (!g.span.ValidFor(length)) {
      throw DataError("tweet " + annotated.tweet.id + ": span [" +
                      std::to_string(g.span.start) + ", " +
                      std::to_string(g.span.end) + ") invalid for text of length " +
                      std::to_string(length));
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const GoldSpan& a, const GoldSpan& b) {
    return std::pair(a.label, a.span) < std::pair(b.label, b.span);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].label == sorted[i - 1].label &&
        sorted[i].span.Overlaps(sorted[i - 1].span)) {
      throw DataError("tweet " + annotated.tweet.id + ": overlapping " +
                      std::string(LabelName(sorted[i].label)) + " spans");
    }
  }
}

std::string ApplyEdits(std::string_view original_text,
                       const std::vector<Edit>& edits) {
  std::wstring text = Widen(original_text);
  std::size_t limit = text.size();
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    if (it->span.start > it->span.end || it->span.end > limit) {
      throw DataError("edits overlap or exceed the text");
    }
    text.replace(it->span.start, it->span.length(), Widen(it->replacement));
    limit = it->span.start;
  }
  return Narrow(text);
}

}  // namespace nightjar

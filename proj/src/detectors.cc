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

#include "nightjar/detectors.h"

#include <algorithm>
#include <boost/regex.hpp>
#include <set>

#include "nightjar/text.h"

namespace nightjar {
namespace {

// Whitespace as the tokenizer sees it, for use inside character classes.
constexpr std::string_view kSpaceClass =
    R"(\s\x{85}\x{A0}\x{1680}\x{2000}-\x{200A}\x{2028}\x{2029}\x{202F}\x{205F}\x{3000})";

std::string UrlPattern() {
  std::string non_space = "[^" + std::string(kSpaceClass) + "]";
  std::string tail = "[^" + std::string(kSpaceClass) +
                     R"(.,;:!?)\]}'"\x{2019}\x{201D}\x{2026}])";
  return R"((?<![A-Za-z0-9_@/.]))"
         R"((?i:(?:https?://|www\.|(?:t\.co|bit\.ly|goo\.gl|ow\.ly|buff\.ly|dlvr\.it|ift\.tt|tinyurl\.com|youtu\.be|fb\.me)/)))" +
         non_space + "*" + tail;
}

boost::wregex Compile(const std::string& pattern, const char* what) {
  try {
    return boost::wregex(Widen(pattern), boost::regex::perl);
  } catch (const boost::regex_error& e) {
    throw ConfigError(std::string("bad ") + what + " pattern: " + e.what());
  }
}

using Match = boost::match_results<const wchar_t*>;

template <typename Fn>
void ForEachMatch(const boost::wregex& re, std::wstring_view text, Fn&& fn) {
  const wchar_t* begin = text.data();
  const wchar_t* end = text.data() + text.size();
  boost::wcregex_iterator it(begin, end, re), last;
  for (; it != last; ++it) {
    const Match& m = *it;
    fn(static_cast<std::size_t>(m[0].first - begin),
       static_cast<std::size_t>(m[0].second - begin));
  }
}

bool FullMatch(const boost::wregex& re, std::wstring_view text) {
  return boost::regex_match(text.data(), text.data() + text.size(), re);
}

int CountDigits(std::wstring_view s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), IsAsciiDigit));
}

int CountLetters(std::wstring_view s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), IsAsciiAlpha));
}

bool OverlapsAny(const std::vector<Span>& spans, Span span) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const Span& s) { return s.Overlaps(span); });
}

// Letters of the word ending just before `pos`, skipping whitespace and at
// most one comma or colon.
std::wstring PreviousWord(std::wstring_view text, std::size_t pos) {
  std::size_t i = pos;
  bool separator = false;
  while (i > 0 && (IsSpace(text[i - 1]) ||
                   (!separator && (text[i - 1] == L',' || text[i - 1] == L':')))) {
    separator = separator || !IsSpace(text[i - 1]);
    --i;
  }
  std::size_t end = i;
  while (i > 0 && IsAsciiAlpha(text[i - 1])) --i;
  return std::wstring(text.substr(i, end - i));
}

std::wstring NextWord(std::wstring_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size() && (IsSpace(text[i]) || text[i] == L',' || text[i] == L':')) ++i;
  std::size_t start = i;
  while (i < text.size() && IsAsciiAlpha(text[i])) ++i;
  return std::wstring(text.substr(start, i - start));
}

}  // namespace

bool IsRegexSource(std::string_view source) { return source.starts_with("regex:"); }

RegexConfig RegexConfig::Defaults() {
  RegexConfig c;
  c.url_pattern = UrlPattern();
  c.username_pattern = R"((?<![A-Za-z0-9_@.%+\-])@[A-Za-z0-9_]{1,15}(?![A-Za-z0-9_@]))";
  c.email_pattern =
      R"((?<![A-Za-z0-9._%+\-])[A-Za-z0-9._%+\-]+@[A-Za-z0-9\-]+(?:\.[A-Za-z0-9\-]+)*\.[A-Za-z]{2,}(?![A-Za-z0-9_\-]|\.[A-Za-z0-9]))";
  c.phone_pattern =
      R"((?<![A-Za-z0-9_+\-.(/]))"
      R"((?:(?:\+?1[ .\-]?)?(?:\(\d{3}\)|\d{3})[ .\-]?\d{3}[ .\-]\d{4})"
      R"(|\+\d{1,3}(?:[ .\-]\(?\d{1,5}\)?){2,5})"
      R"(|\d{3}[.\-]\d{4})"
      R"(|\+?\d{10,15}))"
      R"((?![A-Za-z0-9_]|[.\-/]\d))";
  c.hashtag_pattern = R"((?<![A-Za-z0-9_&])#[A-Za-z0-9_]+)";
  c.zip_pattern = R"((?<![A-Za-z0-9_\-.])\d{5}(?:-\d{4})?(?![A-Za-z0-9_]|[\-.]\d))";
  c.zip_cue_words = {"zip", "zipcode", "postal", "postcode"};
  for (const char* state :
       {"Alabama", "Alaska", "Arizona", "Arkansas", "California", "Colorado",
        "Connecticut", "Delaware", "Florida", "Georgia", "Hawaii", "Idaho",
        "Illinois", "Indiana", "Iowa", "Kansas", "Kentucky", "Louisiana", "Maine",
        "Maryland", "Massachusetts", "Michigan", "Minnesota", "Mississippi",
        "Missouri", "Montana", "Nebraska", "Nevada", "Ohio", "Oklahoma", "Oregon",
        "Pennsylvania", "Tennessee", "Texas", "Utah", "Vermont", "Virginia",
        "Washington", "Wisconsin", "Wyoming", "Hampshire", "Jersey", "Mexico",
        "York", "Carolina", "Dakota", "Island"}) {
    c.zip_cue_words.emplace_back(state);
  }
  c.zip_state_codes = {
      "AL", "AK", "AZ", "AR", "CA", "CO", "CT", "DE", "DC", "FL", "GA", "HI", "ID",
      "IL", "IN", "IA", "KS", "KY", "LA", "ME", "MD", "MA", "MI", "MN", "MS", "MO",
      "MT", "NE", "NV", "NH", "NJ", "NM", "NY", "NC", "ND", "OH", "OK", "OR", "PA",
      "RI", "SC", "SD", "TN", "TX", "UT", "VT", "VA", "WA", "WV", "WI", "WY"};
  return c;
}

struct RegexDetectors::Compiled {
  RegexConfig config;
  boost::wregex url, username, phone, email, hashtag, zip, id_candidate;
  std::set<std::wstring> cue_words;  // lower-cased
  std::set<std::wstring> state_codes;
};

RegexDetectors::RegexDetectors(RegexConfig config)
    : compiled_(std::make_unique<Compiled>()) {
  if (config.id_min_length < 1 || config.id_min_letters < 0 ||
      config.id_min_digits < 0 || config.phone_min_digits < 1 ||
      config.phone_max_digits < config.phone_min_digits) {
    throw ConfigError("regex thresholds out of range");
  }
  Compiled& c = *compiled_;
  c.url = Compile(config.url_pattern, "url");
  c.username = Compile(config.username_pattern, "username");
  c.phone = Compile(config.phone_pattern, "phone");
  c.email = Compile(config.email_pattern, "email");
  c.hashtag = Compile(config.hashtag_pattern, "hashtag");
  c.zip = Compile(config.zip_pattern, "zip");
  c.id_candidate = Compile("(?<![A-Za-z0-9_#@])[A-Za-z0-9]{" +
                               std::to_string(config.id_min_length) +
                               ",}(?![A-Za-z0-9_])",
                           "id");
  for (const std::string& w : config.zip_cue_words) {
    c.cue_words.insert(AsciiLower(Widen(w)));
  }
  for (const std::string& w : config.zip_state_codes) c.state_codes.insert(Widen(w));
  c.config = std::move(config);
}

RegexDetectors::~RegexDetectors() = default;
RegexDetectors::RegexDetectors(RegexDetectors&&) noexcept = default;
RegexDetectors& RegexDetectors::operator=(RegexDetectors&&) noexcept = default;

const RegexConfig& RegexDetectors::config() const { return compiled_->config; }

std::vector<Detection> RegexDetectors::DetectUrls(std::wstring_view text) const {
  std::vector<Detection> out;
  ForEachMatch(compiled_->url, text, [&](std::size_t s, std::size_t e) {
    out.push_back(MakeDetection(text, {s, e}, EntityLabel::kUrl, std::string(kUrlSource)));
  });
  return out;
}

std::vector<Detection> RegexDetectors::DetectUsernames(std::wstring_view text) const {
  std::vector<Detection> out;
  ForEachMatch(compiled_->username, text, [&](std::size_t s, std::size_t e) {
    out.push_back(
        MakeDetection(text, {s, e}, EntityLabel::kUsername, std::string(kUsernameSource)));
  });
  return out;
}

std::vector<Detection> RegexDetectors::DetectPhoneNumbers(std::wstring_view text,
                                                          bool author_verified) const {
  std::vector<Detection> out;
  if (author_verified) return out;
  const RegexConfig& cfg = compiled_->config;
  ForEachMatch(compiled_->phone, text, [&](std::size_t s, std::size_t e) {
    const int digits = CountDigits(text.substr(s, e - s));
    if (digits < cfg.phone_min_digits || digits > cfg.phone_max_digits) return;
    out.push_back(MakeDetection(text, {s, e}, EntityLabel::kPhone, std::string(kPhoneSource)));
  });
  return out;
}

std::vector<Detection> RegexDetectors::DetectEmails(std::wstring_view text,
                                                    bool author_verified) const {
  std::vector<Detection> out;
  if (author_verified) return out;
  ForEachMatch(compiled_->email, text, [&](std::size_t s, std::size_t e) {
    out.push_back(MakeDetection(text, {s, e}, EntityLabel::kEmail, std::string(kEmailSource)));
  });
  return out;
}

std::vector<Detection> RegexDetectors::DetectIdNumbers(std::wstring_view text) const {
  const RegexConfig& cfg = compiled_->config;
  // Tokens inside links, addresses, mentions and hashtags are never IDs.
  std::vector<Span> excluded;
  for (const boost::wregex* re :
       {&compiled_->url, &compiled_->email, &compiled_->username, &compiled_->hashtag}) {
    ForEachMatch(*re, text, [&](std::size_t s, std::size_t e) { excluded.push_back({s, e}); });
  }
  std::vector<Detection> out;
  ForEachMatch(compiled_->id_candidate, text, [&](std::size_t s, std::size_t e) {
    const std::wstring_view token = text.substr(s, e - s);
    if (CountLetters(token) < cfg.id_min_letters || CountDigits(token) < cfg.id_min_digits) {
      return;
    }
    if (OverlapsAny(excluded, {s, e})) return;
    out.push_back(MakeDetection(text, {s, e}, EntityLabel::kIdNumber, std::string(kIdSource)));
  });
  return out;
}

std::vector<Detection> RegexDetectors::DetectZipCodes(std::wstring_view text) const {
  const Compiled& c = *compiled_;
  auto is_cue = [&](const std::wstring& word) {
    return !word.empty() &&
           (c.state_codes.contains(word) || c.cue_words.contains(AsciiLower(word)));
  };
  std::vector<Detection> out;
  ForEachMatch(c.zip, text, [&](std::size_t s, std::size_t e) {
    const bool plus4 = e - s == 10;
    if (!(plus4 && c.config.zip_plus4_needs_no_cue) && !is_cue(PreviousWord(text, s)) &&
        !is_cue(NextWord(text, e))) {
      return;
    }
    out.push_back(MakeDetection(text, {s, e}, EntityLabel::kZip, std::string(kZipSource)));
  });
  return out;
}

std::vector<Detection> RegexDetectors::Run(std::wstring_view text,
                                           bool author_verified) const {
  std::vector<Detection> out;
  std::vector<Span> claimed;
  auto claim = [&](std::vector<Detection> found) {
    for (Detection& d : found) {
      if (OverlapsAny(claimed, d.span)) continue;
      claimed.push_back(d.span);
      out.push_back(std::move(d));
    }
  };
  claim(DetectUrls(text));
  claim(DetectEmails(text, author_verified));
  claim(DetectUsernames(text));
  claim(DetectPhoneNumbers(text, author_verified));
  claim(DetectIdNumbers(text));
  claim(DetectZipCodes(text));
  std::sort(out.begin(), out.end(), [](const Detection& a, const Detection& b) {
    return a.span.start < b.span.start;
  });
  return out;
}

std::vector<Detection> RegexDetectors::Run(const Tweet& tweet) const {
  return Run(Widen(tweet.text), tweet.author_verified);
}

bool RegexDetectors::SelfMatches(EntityLabel label, std::string_view surface) const {
  const std::wstring text = Widen(surface);
  auto whole = [&](const std::vector<Detection>& found) {
    return found.size() == 1 && found[0].span == Span{0, text.size()};
  };
  switch (label) {
    case EntityLabel::kUrl: return whole(DetectUrls(text));
    case EntityLabel::kUsername: return whole(DetectUsernames(text));
    case EntityLabel::kPhone:
      return FullMatch(compiled_->phone, text) && whole(DetectPhoneNumbers(text, false));
    case EntityLabel::kEmail: return whole(DetectEmails(text, false));
    case EntityLabel::kIdNumber: return whole(DetectIdNumbers(text));
    case EntityLabel::kZip: return FullMatch(compiled_->zip, text);
    default: return false;
  }
}

const RegexDetectors& DefaultDetectors() {
  static const RegexDetectors detectors;
  return detectors;
}

std::vector<Detection> DetectUrls(std::string_view text) {
  return DefaultDetectors().DetectUrls(Widen(text));
}
std::vector<Detection> DetectUsernames(std::string_view text) {
  return DefaultDetectors().DetectUsernames(Widen(text));
}
std::vector<Detection> DetectPhoneNumbers(std::string_view text, bool author_verified) {
  return DefaultDetectors().DetectPhoneNumbers(Widen(text), author_verified);
}
std::vector<Detection> DetectEmails(std::string_view text, bool author_verified) {
  return DefaultDetectors().DetectEmails(Widen(text), author_verified);
}
std::vector<Detection> DetectIdNumbers(std::string_view text) {
  return DefaultDetectors().DetectIdNumbers(Widen(text));
}
std::vector<Detection> DetectZipCodes(std::string_view text) {
  return DefaultDetectors().DetectZipCodes(Widen(text));
}
std::vector<Detection> RunRegexDetectors(const Tweet& tweet) {
  return DefaultDetectors().Run(tweet);
}

}  // namespace nightjar

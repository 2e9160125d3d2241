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

#include <algorithm>
#include <array>
#include <charconv>
#include <random>

#include "nightjar/corpus_io.h"
#include "nightjar/text.h"

namespace nightjar {
namespace {

// Benign filler. Contains decoys the detectors must leave alone: a hashtag
// with digits, short words with digits, a lone '@', emoji and accents.
constexpr std::array<std::string_view, 64> kFiller = {
    "the", "a", "so", "just", "really", "love", "this", "that", "today", "tonight",
    "morning", "coffee", "game", "music", "new", "old", "day", "week", "happy", "sad",
    "tired", "excited", "going", "home", "work", "school", "with", "for", "and", "but",
    "lol", "omg", "can't", "won't", "it's", "we're", "great", "bad", "weather", "rain",
    "sunny", "pizza", "movie", "show", "finally", "again", "never", "always", "friends", "family",
    "#tbt", "#mondaymotivation", "#promo2024code99", "hello123", "covid19", "b2b", "café",
    "naïve", "😀", "🔥", "…", "@", "&", "—"};

constexpr std::array<std::string_view, 12> kWords = {
    "news", "blog", "shop", "photos", "events", "daily", "sports", "tech", "food", "travel",
    "music", "local"};

constexpr std::array<std::string_view, 4> kTlds = {"com", "org", "net", "io"};

constexpr std::array<std::string_view, 12> kStateCodes = {
    "MD", "CA", "NY", "TX", "FL", "WA", "IL", "MA", "GA", "NJ", "VA", "AZ"};

constexpr std::array<std::string_view, 6> kTrailing = {"", "", "", ",", ".", "!"};

using Rng = std::mt19937_64;

template <typename Container>
const auto& Pick(const Container& c, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, c.size() - 1);
  return c[d(rng)];
}

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string Digits(Rng& rng, int n, bool nonzero_first = false) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    s += static_cast<char>('0' + Uniform(rng, i == 0 && nonzero_first ? 2 : 0, 9));
  }
  return s;
}

std::string Chars(Rng& rng, std::string_view alphabet, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += Pick(alphabet, rng);
  return s;
}

constexpr std::string_view kLower = "abcdefghijklmnopqrstuvwxyz";
constexpr std::string_view kAlnum =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

std::string MakeUrl(Rng& rng) {
  switch (Uniform(rng, 0, 4)) {
    case 0: return "https://t.co/" + Chars(rng, kAlnum, 10);
    case 1:
      return "http://" + std::string(Pick(kWords, rng)) + "." + std::string(Pick(kTlds, rng)) +
             "/" + std::string(Pick(kWords, rng));
    case 2: return "www." + std::string(Pick(kWords, rng)) + ".org";
    case 3: return "bit.ly/" + Chars(rng, kAlnum, 7);
    default:
      return "https://" + std::string(Pick(kWords, rng)) + ".com/p?id=" + Chars(rng, kAlnum, 5);
  }
}

std::string MakeHandle(Rng& rng) {
  std::string h = "@";
  h += Pick(kLower, rng);
  h += Chars(rng, "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_",
             Uniform(rng, 2, 14));
  return h;
}

std::string MakePhone(Rng& rng) {
  const std::string area = Digits(rng, 3, true), mid = Digits(rng, 3, true), last = Digits(rng, 4);
  switch (Uniform(rng, 0, 5)) {
    case 0: return area + "-" + mid + "-" + last;
    case 1: return "(" + area + ") " + mid + "-" + last;
    case 2: return area + "." + mid + "." + last;
    case 3: return "+1 " + area + " " + mid + " " + last;
    case 4: return "+44 20 " + Digits(rng, 4, true) + " " + Digits(rng, 4);
    default: return mid + "-" + last;
  }
}

std::string MakeEmail(Rng& rng) {
  std::string local = Chars(rng, kLower, Uniform(rng, 3, 8));
  if (Uniform(rng, 0, 1) == 1) local += "." + Chars(rng, kLower, Uniform(rng, 2, 6));
  return local + "@" + Chars(rng, kLower, Uniform(rng, 3, 8)) + "." +
         std::string(Pick(kTlds, rng));
}

std::string MakeId(Rng& rng) {
  constexpr std::string_view kChars = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  for (;;) {
    std::string id = Chars(rng, kChars, Uniform(rng, 10, 14));
    const auto letters = std::count_if(id.begin(), id.end(), [](char c) { return c >= 'A'; });
    const auto digits = static_cast<std::ptrdiff_t>(id.size()) - letters;
    if (letters >= 2 && digits >= 2) return id;
  }
}

struct Piece {
  std::string text;
  // Gold spans relative to the piece, in scalar values.
  std::vector<GoldSpan> gold;
};

Piece Labeled(std::string text, EntityLabel label, bool record = true) {
  Piece p{std::move(text), {}};
  if (record) p.gold.push_back({{0, CodepointLength(p.text)}, label});
  return p;
}

Piece MakeZip(Rng& rng) {
  const std::string zip = Digits(rng, 5, true);
  switch (Uniform(rng, 0, 3)) {
    case 0: {
      std::string prefix = std::string(Pick(kStateCodes, rng)) + " ";
      return Piece{prefix + zip, {{{prefix.size(), prefix.size() + 5}, EntityLabel::kZip}}};
    }
    case 1: return Piece{"zip " + zip, {{{4, 9}, EntityLabel::kZip}}};
    case 2: return Piece{"zipcode: " + zip, {{{9, 14}, EntityLabel::kZip}}};
    default: return Labeled(zip + "-" + Digits(rng, 4), EntityLabel::kZip);
  }
}

}  // namespace

InjectionRates InjectionRates::Defaults() {
  InjectionRates r;
  r.rate = {
      {EntityLabel::kUrl, 0.5},     {EntityLabel::kUsername, 0.5}, {EntityLabel::kPhone, 0.1},
      {EntityLabel::kEmail, 0.1},   {EntityLabel::kIdNumber, 0.05}, {EntityLabel::kZip, 0.05},
      {EntityLabel::kPerson, 0.15}, {EntityLabel::kOrg, 0.05},     {EntityLabel::kGroup, 0.03},
      {EntityLabel::kCity, 0.05},   {EntityLabel::kState, 0.05},   {EntityLabel::kCountry, 0.05},
      {EntityLabel::kLocation, 0.02},
  };
  return r;
}

InjectionRates InjectionRates::Zero() {
  InjectionRates r;
  for (EntityLabel label : kAllLabels) r.rate[label] = 0.0;
  r.verified = 0.0;
  return r;
}

InjectionRates InjectionRates::Parse(std::string_view spec) {
  auto number = [](std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0 || v > 1) {
      throw ConfigError("rate '" + std::string(s) + "' is not a number in [0, 1]");
    }
    return v;
  };
  InjectionRates r = Defaults();
  if (spec.find('=') == std::string_view::npos) {
    const double v = number(spec);
    for (auto& [label, rate] : r.rate) rate = v;
    return r;
  }
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("bad rate item '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const double v = number(item.substr(eq + 1));
    if (key == "verified") {
      r.verified = v;
    } else if (key == "all") {
      for (auto& [label, rate] : r.rate) rate = v;
    } else if (auto label = ParseLabel(key)) {
      r.rate[*label] = v;
    } else {
      throw ConfigError("unknown label '" + std::string(key) + "' in rates");
    }
  }
  return r;
}

SyntheticCorpus GenerateSyntheticCorpus(std::uint64_t seed, std::size_t n,
                                        const InjectionRates& rates, const Gazetteer& gazetteer) {
  Rng rng(seed);
  std::vector<std::string_view> filler;
  for (std::string_view w : kFiller) {
    // Case-insensitive gazetteer hits would blur entity evaluation.
    if (!gazetteer.Lookup(Widen(w), true)) filler.push_back(w);
  }
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  SyntheticCorpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    Tweet tweet;
    char id[32];
    std::snprintf(id, sizeof id, "syn-%06zu", i);
    tweet.id = id;
    tweet.lang = "en";
    tweet.author_verified = chance(rates.verified);

    std::vector<Piece> pieces;
    for (int k = Uniform(rng, 4, 12); k > 0; --k) pieces.push_back({std::string(Pick(filler, rng)), {}});
    for (EntityLabel label : kAllLabels) {
      auto it = rates.rate.find(label);
      if (it == rates.rate.end() || !chance(it->second)) continue;
      switch (label) {
        case EntityLabel::kUrl: pieces.push_back(Labeled(MakeUrl(rng), label)); break;
        case EntityLabel::kUsername: pieces.push_back(Labeled(MakeHandle(rng), label)); break;
        case EntityLabel::kPhone:
          pieces.push_back(Labeled(MakePhone(rng), label, !tweet.author_verified));
          break;
        case EntityLabel::kEmail:
          pieces.push_back(Labeled(MakeEmail(rng), label, !tweet.author_verified));
          break;
        case EntityLabel::kIdNumber: pieces.push_back(Labeled(MakeId(rng), label)); break;
        case EntityLabel::kZip: pieces.push_back(MakeZip(rng)); break;
        default: {
          auto entries = gazetteer.entries().find(label);
          if (entries == gazetteer.entries().end() || entries->second.empty()) break;
          pieces.push_back(Labeled(Pick(entries->second, rng), label));
        }
      }
    }
    std::shuffle(pieces.begin(), pieces.end(), rng);

    AnnotatedTweet annotated;
    std::size_t offset = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (p > 0) {
        tweet.text += ' ';
        ++offset;
      }
      for (const GoldSpan& g : pieces[p].gold) {
        annotated.gold.push_back({{offset + g.span.start, offset + g.span.end}, g.label});
      }
      tweet.text += pieces[p].text;
      offset += CodepointLength(pieces[p].text);
      if (!pieces[p].gold.empty()) {
        const std::string_view punct = Pick(kTrailing, rng);
        tweet.text += punct;
        offset += punct.size();
      }
    }
    std::sort(annotated.gold.begin(), annotated.gold.end(),
              [](const GoldSpan& a, const GoldSpan& b) { return a.span < b.span; });
    annotated.tweet = tweet;
    corpus.tweets.push_back(std::move(tweet));
    corpus.gold.push_back(std::move(annotated));
  }
  return corpus;
}

}  // namespace nightjar

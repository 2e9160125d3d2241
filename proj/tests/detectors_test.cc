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

#include <gtest/gtest.h>

#include <random>

#include "nightjar/text.h"

namespace nightjar {
namespace {

std::vector<Span> Spans(const std::vector<Detection>& ds) {
  std::vector<Span> out;
  for (const Detection& d : ds) out.push_back(d.span);
  return out;
}

std::vector<std::string> Surfaces(const std::vector<Detection>& ds) {
  std::vector<std::string> out;
  for (const Detection& d : ds) out.push_back(d.surface);
  return out;
}

TEST(Urls, Examples) {
  auto d = DetectUrls("read https://t.co/Ab3dE now");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].surface, "https://t.co/Ab3dE");
  EXPECT_EQ(d[0].label, EntityLabel::kUrl);
  EXPECT_EQ(d[0].source, kUrlSource);
  EXPECT_TRUE(DetectUrls("no links here").empty());
  d = DetectUrls("a https://x.io/1 b http://y.com");
  EXPECT_EQ(Surfaces(d), (std::vector<std::string>{"https://x.io/1", "http://y.com"}));
  EXPECT_LT(d[0].span.start, d[1].span.start);
}

TEST(Urls, Shapes) {
  EXPECT_EQ(Surfaces(DetectUrls("see t.co/xYz12 and bit.ly/abc")),
            (std::vector<std::string>{"t.co/xYz12", "bit.ly/abc"}));
  EXPECT_EQ(Surfaces(DetectUrls("go to www.example.org.")),
            (std::vector<std::string>{"www.example.org"}));
  EXPECT_EQ(Surfaces(DetectUrls("(https://example.com/a?b=1&c=2)")),
            (std::vector<std::string>{"https://example.com/a?b=1&c=2"}));
}

TEST(Usernames, Examples) {
  auto d = DetectUsernames("@TwitterUser hello");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].span, (Span{0, 12}));
  EXPECT_TRUE(DetectUsernames("email me@host.com").empty());
  EXPECT_EQ(DetectUsernames("@a @b").size(), 2u);
  EXPECT_TRUE(DetectUsernames("price @ $5").empty());
}

TEST(Usernames, FifteenCharLimit) {
  EXPECT_EQ(Surfaces(DetectUsernames("@abcdefghijklmno")),
            (std::vector<std::string>{"@abcdefghijklmno"}));
  EXPECT_TRUE(DetectUsernames("@abcdefghijklmnop").empty());
}

// Hand-built mention/email confusions. Each case is assembled from pieces so
// the expected offsets are the positions where pieces were placed.
struct Piece {
  std::string text;
  std::optional<EntityLabel> label;
};

struct ConfusionCase {
  std::string text;
  std::vector<Span> mentions;
  std::vector<Span> emails;
};

ConfusionCase Assemble(const std::vector<Piece>& pieces) {
  ConfusionCase c;
  for (const Piece& p : pieces) {
    const std::size_t start = CodepointLength(c.text);
    c.text += p.text;
    const Span span{start, CodepointLength(c.text)};
    if (p.label == EntityLabel::kUsername) c.mentions.push_back(span);
    if (p.label == EntityLabel::kEmail) c.emails.push_back(span);
  }
  return c;
}

std::vector<ConfusionCase> MentionEmailCorpus() {
  const std::vector<std::string> handles = {"bob", "Alice_99", "_x", "TwitterUser", "a1b2c3d4e5"};
  const std::vector<std::string> emails = {"me@host.com", "a.b@example.com",
                                           "first_last+tag@mail.co.uk", "x1@y.io", "bob@bob.org"};
  const auto M = [](const std::string& h) { return Piece{"@" + h, EntityLabel::kUsername}; };
  const auto E = [](const std::string& e) { return Piece{e, EntityLabel::kEmail}; };
  const auto T = [](const std::string& t) { return Piece{t, std::nullopt}; };
  std::vector<ConfusionCase> cases;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::string& h = handles[i];
    const std::string& e = emails[i];
    const std::string& h2 = handles[(i + 1) % 5];
    cases.push_back(Assemble({T("email "), E(e)}));
    cases.push_back(Assemble({M(h), T(" email "), E(e)}));
    cases.push_back(Assemble({T("cc "), M(h), T(": "), E(e)}));
    cases.push_back(Assemble({E(e), T(","), M(h)}));
    cases.push_back(Assemble({T("("), M(h), T(") <"), E(e), T(">")}));
    cases.push_back(Assemble({M(h), T("'s mail is "), E(e), T(".")}));
    cases.push_back(Assemble({T("x@" + h + " is not a mention")}));
    cases.push_back(Assemble({T("at @ "), M(h2), T(" @@ "), M(h)}));
    cases.push_back(Assemble({E(e), T(" "), E(emails[(i + 2) % 5]), T(" "), M(h2)}));
    cases.push_back(Assemble({T("RT "), M(h), T(": write "), E(e), T("!"), M(h2)}));
  }
  return cases;
}

TEST(Usernames, MentionEmailConfusionCorpus) {
  const auto corpus = MentionEmailCorpus();
  ASSERT_EQ(corpus.size(), 50u);
  for (const ConfusionCase& c : corpus) {
    SCOPED_TRACE(c.text);
    EXPECT_EQ(Spans(DetectUsernames(c.text)), c.mentions);
    EXPECT_EQ(Spans(DetectEmails(c.text, false)), c.emails);
    std::vector<Span> both;
    Tweet t{"c", c.text, false, {}};
    for (const Detection& d : RunRegexDetectors(t)) {
      EXPECT_TRUE(d.label == EntityLabel::kUsername || d.label == EntityLabel::kEmail)
          << LabelName(d.label) << " " << d.surface;
    }
  }
}

TEST(Phones, Examples) {
  auto d = DetectPhoneNumbers("call 555-123-4567", false);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].surface, "555-123-4567");
  EXPECT_TRUE(DetectPhoneNumbers("call 555-123-4567", true).empty());
  EXPECT_TRUE(DetectPhoneNumbers("in 2018 we won", false).empty());
}

TEST(Phones, Formats) {
  for (const std::string p : {"(410) 555-1234", "+1 410 555 1234", "410.555.1234", "4105551234",
                              "+44 20 7946 0958", "555-1234", "+1-410-555-1234",
                              "+33 1 23 45 67 89"}) {
    SCOPED_TRACE(p);
    const auto d = DetectPhoneNumbers("ring " + p + " now", false);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].surface, p);
  }
  for (const std::string p : {"2018-2019", "12/25/2020", "3.14159", "1,000,000", "21218",
                              "$5.99", "v2.10.3", "1234567890123456789"}) {
    SCOPED_TRACE(p);
    EXPECT_TRUE(DetectPhoneNumbers("x " + p + " y", false).empty());
  }
}

TEST(Emails, Examples) {
  auto d = DetectEmails("mail me at a.b@example.com", false);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].surface, "a.b@example.com");
  EXPECT_TRUE(DetectEmails("mail me at a.b@example.com", true).empty());
  EXPECT_TRUE(DetectEmails("price @ $5", false).empty());
  EXPECT_TRUE(DetectEmails("me@host", false).empty());
}

TEST(Ids, Examples) {
  auto d = DetectIdNumbers("ref A1B2C3D4E5");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].surface, "A1B2C3D4E5");
  EXPECT_TRUE(DetectIdNumbers("hello123").empty());
  EXPECT_TRUE(DetectIdNumbers("#promo2024code99").empty());
  EXPECT_TRUE(DetectIdNumbers("abcdefghijk1").empty());  // one digit
  EXPECT_TRUE(DetectIdNumbers("12345678901x").empty());  // one letter
  EXPECT_TRUE(DetectIdNumbers("@user12345abc").empty());
  EXPECT_TRUE(DetectIdNumbers("https://t.co/AbC123xYz9").empty());
  EXPECT_TRUE(DetectIdNumbers("ab12cd34ef@mail.com").empty());
  EXPECT_EQ(Surfaces(DetectIdNumbers("order #5, code XK42LM99PQ.")),
            (std::vector<std::string>{"XK42LM99PQ"}));
}

std::string RandomAlnum(std::mt19937_64& rng, int len, int letters, int digits) {
  static const std::string kL = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  static const std::string kD = "0123456789";
  std::string s;
  for (int i = 0; i < letters; ++i) s += kL[rng() % kL.size()];
  for (int i = 0; i < digits; ++i) s += kD[rng() % kD.size()];
  const std::string all = kL + kD;
  while (static_cast<int>(s.size()) < len) s += all[rng() % all.size()];
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

// Injected IDs must be found exactly; hashtags (and mentions) built from the
// same alphabet must never be.
TEST(Ids, HashtagOracle) {
  std::mt19937_64 rng(20240611);
  const std::vector<std::string> filler = {"good", "morning", "ok", "see", "you", "at", "8"};
  for (int trial = 0; trial < 400; ++trial) {
    std::string text;
    std::vector<Span> expected;
    const int pieces = 3 + static_cast<int>(rng() % 6);
    for (int p = 0; p < pieces; ++p) {
      if (!text.empty()) text += ' ';
      const int kind = static_cast<int>(rng() % 4);
      const int len = 9 + static_cast<int>(rng() % 10);
      if (kind == 0) {
        const std::size_t start = CodepointLength(text);
        text += RandomAlnum(rng, len, 2, 2);
        expected.push_back({start, CodepointLength(text)});
      } else if (kind == 1) {
        text += "#" + RandomAlnum(rng, len, 2, 2);
      } else if (kind == 2) {
        text += "@" + RandomAlnum(rng, std::min(len, 15), 2, 2);
      } else {
        text += filler[rng() % filler.size()];
      }
    }
    SCOPED_TRACE(text);
    EXPECT_EQ(Spans(DetectIdNumbers(text)), expected);
  }
}

TEST(Zips, Examples) {
  auto d = DetectZipCodes("Baltimore, MD 21218");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].surface, "21218");
  EXPECT_TRUE(DetectZipCodes("I ran 21218 steps").empty());
  d = DetectZipCodes("90210-1234 Beverly Hills");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].surface, "90210-1234");
}

TEST(Zips, Cues) {
  EXPECT_EQ(Surfaces(DetectZipCodes("zip 21218 please")), (std::vector<std::string>{"21218"}));
  EXPECT_EQ(Surfaces(DetectZipCodes("zipcode: 60614")), (std::vector<std::string>{"60614"}));
  EXPECT_EQ(Surfaces(DetectZipCodes("Austin, Texas 78701")), (std::vector<std::string>{"78701"}));
  EXPECT_EQ(Surfaces(DetectZipCodes("moving to 10001 NY")), (std::vector<std::string>{"10001"}));
  EXPECT_TRUE(DetectZipCodes("md 21218").empty());  // state codes are case-sensitive
  EXPECT_TRUE(DetectZipCodes("zip 212189").empty());
  EXPECT_TRUE(DetectZipCodes("won 12345 dollars").empty());
}

TEST(Run, Composition) {
  auto d = RunRegexDetectors({"1", "hey @bob see https://t.co/x", false, {}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].label, EntityLabel::kUsername);
  EXPECT_EQ(d[1].label, EntityLabel::kUrl);
  d = RunRegexDetectors({"2", "call 555-123-4567 or https://t.co/x", true, {}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].label, EntityLabel::kUrl);
  EXPECT_TRUE(RunRegexDetectors({"3", "", false, {}}).empty());
}

TEST(Run, Precedence) {
  // Digit runs inside a URL belong to the URL.
  auto d = RunRegexDetectors({"1", "https://example.com/4105551234/AB12CD34EF", false, {}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].label, EntityLabel::kUrl);
  d = RunRegexDetectors({"2", "write 4105551234@example.com", false, {}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].label, EntityLabel::kEmail);
  // A verified author's email is not removed, and nothing inside it is either.
  d = RunRegexDetectors({"3", "write abc123def4@example.com", true, {}});
  EXPECT_TRUE(d.empty());
}

TEST(Config, Thresholds) {
  RegexConfig c = RegexConfig::Defaults();
  c.id_min_length = 8;
  const RegexDetectors eight(c);
  EXPECT_EQ(eight.DetectIdNumbers(L"hello123").size(), 1u);
  c.zip_plus4_needs_no_cue = false;
  const RegexDetectors strict(c);
  EXPECT_TRUE(strict.DetectZipCodes(L"90210-1234 Beverly Hills").empty());
  EXPECT_EQ(strict.DetectZipCodes(L"CA 90210-1234").size(), 1u);
  c.url_pattern = "(";
  EXPECT_THROW(RegexDetectors{c}, ConfigError);
}

TEST(SelfMatch, Surfaces) {
  const RegexDetectors& r = DefaultDetectors();
  EXPECT_TRUE(r.SelfMatches(EntityLabel::kUrl, "https://t.co/x"));
  EXPECT_TRUE(r.SelfMatches(EntityLabel::kPhone, "555-123-4567"));
  EXPECT_FALSE(r.SelfMatches(EntityLabel::kPhone, "Brian"));
  EXPECT_FALSE(r.SelfMatches(EntityLabel::kIdNumber, "hello123"));
  EXPECT_TRUE(r.SelfMatches(EntityLabel::kZip, "90210-1234"));
}

}  // namespace
}  // namespace nightjar

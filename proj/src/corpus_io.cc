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

#include "nightjar/corpus_io.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "nightjar/text.h"

namespace nightjar {
namespace {

using nlohmann::json;

std::string At(std::size_t line_number) {
  return "line " + std::to_string(line_number) + ": ";
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

json ParseObject(std::string_view line, std::size_t line_number) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError(At(line_number) + "malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw DataError(At(line_number) + "expected a JSON object");
  return doc;
}

// Calls fn(doc, line_number) for every non-blank line.
template <typename Fn>
void ForEachRecord(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    fn(ParseObject(line, line_number), line_number);
  }
  if (in.bad()) throw DataError("read error after line " + std::to_string(line_number));
}

std::string IdString(const json& value, std::size_t line_number) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw DataError(At(line_number) + "id must be a string or integer");
}

std::unordered_map<std::string, const Tweet*> IndexById(const std::vector<Tweet>& tweets) {
  std::unordered_map<std::string, const Tweet*> index;
  for (const Tweet& t : tweets) index.emplace(t.id, &t);
  return index;
}

struct ParsedSpan {
  Span span;
  EntityLabel label;
  std::optional<std::string> source;
  std::optional<std::string> surface;
};

std::pair<std::string, std::vector<ParsedSpan>> ParseStandoff(const json& doc,
                                                              std::size_t line_number) {
  if (!doc.contains("tweet_id")) throw DataError(At(line_number) + "missing tweet_id");
  std::string id = IdString(doc["tweet_id"], line_number);
  if (!doc.contains("spans") || !doc["spans"].is_array()) {
    throw DataError(At(line_number) + "tweet " + id + ": missing spans array");
  }
  std::vector<ParsedSpan> spans;
  for (const json& s : doc["spans"]) {
    if (!s.is_object() || !s.contains("start") || !s.contains("end") || !s.contains("label") ||
        !s["start"].is_number_unsigned() || !s["end"].is_number_unsigned() ||
        !s["label"].is_string()) {
      throw DataError(At(line_number) + "tweet " + id +
                      ": span needs unsigned start/end and a string label");
    }
    const std::string name = s["label"].get<std::string>();
    const auto label = ParseLabel(name);
    if (!label) throw DataError(At(line_number) + "tweet " + id + ": unknown label '" + name + "'");
    ParsedSpan p{{s["start"].get<std::size_t>(), s["end"].get<std::size_t>()}, *label, {}, {}};
    if (s.contains("source")) p.source = s["source"].get<std::string>();
    if (s.contains("surface")) p.surface = s["surface"].get<std::string>();
    spans.push_back(std::move(p));
  }
  return {std::move(id), std::move(spans)};
}

void CheckSpan(const ParsedSpan& p, std::wstring_view text, const std::string& id,
               std::size_t line_number) {
  if (!p.span.ValidFor(text.size())) {
    throw DataError(At(line_number) + "tweet " + id + ": span [" +
                    std::to_string(p.span.start) + ", " + std::to_string(p.span.end) +
                    ") invalid for text of length " + std::to_string(text.size()));
  }
  if (p.surface && Narrow(text.substr(p.span.start, p.span.length())) != *p.surface) {
    throw DataError(At(line_number) + "tweet " + id + ": surface '" + *p.surface +
                    "' does not match the text");
  }
}

json SpanJson(Span span, EntityLabel label) {
  return json{{"start", span.start}, {"end", span.end}, {"label", LabelName(label)}};
}

void WriteLine(std::ostream& out, const json& doc) {
  out << doc.dump() << '\n';
  if (!out) throw DataError("write failed");
}

}  // namespace

Tweet ParseTweetLine(std::string_view line, std::size_t line_number) {
  const json doc = ParseObject(line, line_number);
  Tweet t;
  if (doc.contains("id_str")) {
    t.id = IdString(doc["id_str"], line_number);
  } else if (doc.contains("id")) {
    t.id = IdString(doc["id"], line_number);
  } else {
    throw DataError(At(line_number) + "missing id");
  }
  if (t.id.empty()) throw DataError(At(line_number) + "empty id");
  const char* text_key = doc.contains("full_text") ? "full_text" : "text";
  if (!doc.contains(text_key) || !doc[text_key].is_string()) {
    throw DataError(At(line_number) + "tweet " + t.id + ": missing text");
  }
  t.text = doc[text_key].get<std::string>();
  try {
    Widen(t.text);
  } catch (const DataError& e) {
    throw DataError(At(line_number) + "tweet " + t.id + ": " + e.what());
  }
  if (doc.contains("user") && doc["user"].is_object()) {
    const json& user = doc["user"];
    if (user.contains("verified") && user["verified"].is_boolean()) {
      t.author_verified = user["verified"].get<bool>();
    }
  }
  if (doc.contains("lang") && doc["lang"].is_string()) t.lang = doc["lang"].get<std::string>();
  return t;
}

std::vector<Tweet> ReadTweets(std::istream& in) {
  std::vector<Tweet> tweets;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    Tweet t = ParseTweetLine(line, line_number);
    if (!seen.insert(t.id).second) {
      throw DataError(At(line_number) + "duplicate tweet id " + t.id);
    }
    tweets.push_back(std::move(t));
  }
  if (in.bad()) throw DataError("read error after line " + std::to_string(line_number));
  return tweets;
}

void WriteTweets(const std::vector<Tweet>& tweets, std::ostream& out) {
  for (const Tweet& t : tweets) {
    json doc = {{"id", t.id}, {"text", t.text}, {"user", {{"verified", t.author_verified}}}};
    if (t.lang) doc["lang"] = *t.lang;
    WriteLine(out, doc);
  }
}

std::vector<Tweet> FilterLanguage(const std::vector<Tweet>& tweets, std::string_view code) {
  std::vector<Tweet> out;
  std::copy_if(tweets.begin(), tweets.end(), std::back_inserter(out),
               [&](const Tweet& t) { return t.lang && *t.lang == code; });
  return out;
}

std::vector<AnnotatedTweet> ReadAnnotations(std::istream& in, const std::vector<Tweet>& tweets) {
  const auto index = IndexById(tweets);
  std::unordered_set<std::string> seen;
  std::vector<AnnotatedTweet> out;
  ForEachRecord(in, [&](const json& doc, std::size_t line_number) {
    auto [id, spans] = ParseStandoff(doc, line_number);
    auto it = index.find(id);
    if (it == index.end()) throw DataError(At(line_number) + "unknown tweet id " + id);
    if (!seen.insert(id).second) throw DataError(At(line_number) + "duplicate tweet id " + id);
    const std::wstring text = Widen(it->second->text);
    AnnotatedTweet annotated{*it->second, {}};
    for (const ParsedSpan& p : spans) {
      CheckSpan(p, text, id, line_number);
      annotated.gold.push_back({p.span, p.label});
    }
    try {
      ValidateGold(annotated);
    } catch (const DataError& e) {
      throw DataError(At(line_number) + e.what());
    }
    out.push_back(std::move(annotated));
  });
  return out;
}

void WriteAnnotations(const std::vector<AnnotatedTweet>& annotated, std::ostream& out) {
  for (const AnnotatedTweet& a : annotated) {
    json spans = json::array();
    for (const GoldSpan& g : a.gold) spans.push_back(SpanJson(g.span, g.label));
    WriteLine(out, json{{"tweet_id", a.tweet.id}, {"spans", std::move(spans)}});
  }
}

std::vector<PredictedTweet> ReadDetections(std::istream& in, const std::vector<Tweet>& tweets) {
  const auto index = IndexById(tweets);
  std::unordered_set<std::string> seen;
  std::vector<PredictedTweet> out;
  ForEachRecord(in, [&](const json& doc, std::size_t line_number) {
    auto [id, spans] = ParseStandoff(doc, line_number);
    auto it = index.find(id);
    if (it == index.end()) throw DataError(At(line_number) + "unknown tweet id " + id);
    if (!seen.insert(id).second) throw DataError(At(line_number) + "duplicate tweet id " + id);
    const std::wstring text = Widen(it->second->text);
    PredictedTweet predicted{id, {}};
    for (const ParsedSpan& p : spans) {
      CheckSpan(p, text, id, line_number);
      predicted.detections.push_back(
          MakeDetection(text, p.span, p.label, p.source.value_or("file")));
    }
    out.push_back(std::move(predicted));
  });
  return out;
}

void WriteDetections(const std::vector<PredictedTweet>& predictions, std::ostream& out) {
  std::vector<const PredictedTweet*> order;
  for (const PredictedTweet& p : predictions) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](const PredictedTweet* a, const PredictedTweet* b) {
    return a->tweet_id < b->tweet_id;
  });
  for (const PredictedTweet* p : order) {
    json spans = json::array();
    for (const Detection& d : p->detections) {
      json s = SpanJson(d.span, d.label);
      s["source"] = d.source;
      s["surface"] = d.surface;
      spans.push_back(std::move(s));
    }
    WriteLine(out, json{{"tweet_id", p->tweet_id}, {"spans", std::move(spans)}});
  }
}

void WriteMasked(const std::vector<MaskedTweet>& masked, std::ostream& out) {
  std::vector<const MaskedTweet*> order;
  for (const MaskedTweet& m : masked) order.push_back(&m);
  std::stable_sort(order.begin(), order.end(), [](const MaskedTweet* a, const MaskedTweet* b) {
    return a->tweet_id < b->tweet_id;
  });
  for (const MaskedTweet* m : order) {
    json edits = json::array();
    for (const Edit& e : m->edits) {
      json j = SpanJson(e.span, e.label);
      j["replacement"] = e.replacement;
      j["source"] = e.source;
      edits.push_back(std::move(j));
    }
    WriteLine(out, json{{"tweet_id", m->tweet_id},
                        {"original_text", m->original_text},
                        {"masked_text", m->masked_text},
                        {"edits", std::move(edits)}});
  }
}

std::vector<MaskedTweet> ReadMasked(std::istream& in) {
  std::vector<MaskedTweet> out;
  ForEachRecord(in, [&](const json& doc, std::size_t line_number) {
    try {
      MaskedTweet m;
      m.tweet_id = IdString(doc.at("tweet_id"), line_number);
      m.original_text = doc.at("original_text").get<std::string>();
      m.masked_text = doc.at("masked_text").get<std::string>();
      for (const json& e : doc.at("edits")) {
        const std::string name = e.at("label").get<std::string>();
        const auto label = ParseLabel(name);
        if (!label) throw DataError(At(line_number) + "unknown label '" + name + "'");
        m.edits.push_back(Edit{{e.at("start").get<std::size_t>(), e.at("end").get<std::size_t>()},
                               *label,
                               e.at("replacement").get<std::string>(),
                               e.at("source").get<std::string>()});
      }
      if (ApplyEdits(m.original_text, m.edits) != m.masked_text) {
        throw DataError(At(line_number) + "edits do not reproduce masked_text");
      }
      out.push_back(std::move(m));
    } catch (const json::exception& e) {
      throw DataError(At(line_number) + "malformed masked record: " + e.what());
    }
  });
  return out;
}

}  // namespace nightjar

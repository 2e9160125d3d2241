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

// Scripted stand-in for an NER adapter process. The first argument picks a
// behavior:
//   ok          marks Katie/Brian as PERSON, Acme as ORG, Paris as GPE,
//               Xyzzy as WEIRD (unmapped) and Dutch as NORP
//   not-ready   reports a failed model load and exits 1
//   silent      never sends the banner
//   garbage     answers every request with a non-JSON line
//   out-of-range answers with an entity past the end of the text
//   hang        sends the banner, then never answers
//   wrong-id    echoes a different id
//   error       answers with an error object
//   die         exits after the banner

#include <cctype>
#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace {

// Scalar-value offset of each byte position; only lead bytes matter.
std::vector<std::size_t> ByteToScalar(const std::string& s) {
  std::vector<std::size_t> map(s.size() + 1, 0);
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    map[i] = n;
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) map[i] = n++;
  }
  map[s.size()] = n;
  return map;
}

bool IsWordByte(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

nlohmann::json Entities(const std::string& text) {
  static const std::vector<std::pair<std::string, std::string>> kWords = {
      {"Katie", "PERSON"}, {"Brian", "PERSON"}, {"Acme", "ORG"},
      {"Paris", "GPE"},    {"Xyzzy", "WEIRD"},  {"Dutch", "NORP"}};
  const auto map = ByteToScalar(text);
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0 && IsWordByte(text[i - 1])) continue;
    for (const auto& [word, label] : kWords) {
      if (text.compare(i, word.size(), word) != 0) continue;
      const std::size_t end = i + word.size();
      if (end < text.size() && IsWordByte(text[end])) continue;
      out.push_back({{"start", map[i]}, {"end", map[end]}, {"label", label}});
    }
  }
  return out;
}

void Sleep() { std::this_thread::sleep_for(std::chrono::seconds(60)); }

}  // namespace

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "ok";
  if (mode == "not-ready") {
    std::cout << R"({"ready":false,"error":"model failed to load"})" << std::endl;
    return 1;
  }
  if (mode == "silent") {
    Sleep();
    return 0;
  }
  std::cout << R"({"ready":true,"scheme":"fake"})" << std::endl;
  if (mode == "die") return 0;

  std::string line;
  while (std::getline(std::cin, line)) {
    if (mode == "hang") {
      Sleep();
      return 0;
    }
    nlohmann::json request = nlohmann::json::parse(line, nullptr, false);
    if (request.is_discarded() || !request.is_object() || !request.contains("text")) {
      std::cout << nlohmann::json{{"id", nullptr}, {"error", "malformed request"}}.dump()
                << std::endl;
      continue;
    }
    const nlohmann::json id = request.value("id", nlohmann::json());
    const std::string text = request["text"].get<std::string>();
    nlohmann::json response;
    if (mode == "garbage") {
      std::cout << "this is not json" << std::endl;
      continue;
    } else if (mode == "out-of-range") {
      const std::size_t len = ByteToScalar(text).back();
      response = {{"id", id},
                  {"entities", {{{"start", 0}, {"end", len + 5}, {"label", "PERSON"}}}}};
    } else if (mode == "wrong-id") {
      response = {{"id", "not-" + id.get<std::string>()}, {"entities", nlohmann::json::array()}};
    } else if (mode == "error") {
      response = {{"id", id}, {"error", "model crashed"}};
    } else {
      response = {{"id", id}, {"entities", Entities(text)}};
    }
    std::cout << response.dump() << std::endl;
  }
  return 0;
}

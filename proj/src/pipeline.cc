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

#include "nightjar/pipeline.h"

#include <chrono>
#include <set>

#include "nightjar/external_recognizer.h"
#include "nightjar/masking.h"
#include "nightjar/text.h"
#include "nightjar/tokenizer.h"

namespace nightjar {

Pipeline::Pipeline(RegexDetectors regex,
                   std::vector<std::shared_ptr<const Recognizer>> recognizers)
    : regex_(std::move(regex)), recognizers_(std::move(recognizers)) {
  std::set<std::string> names;
  for (const auto& r : recognizers_) {
    if (!names.insert(r->name()).second) {
      throw ConfigError("recognizer name '" + r->name() + "' used twice");
    }
  }
}

std::vector<Detection> Pipeline::RecognizeEntities(const Tweet& tweet) const {
  if (recognizers_.empty()) return {};
  const std::wstring text = Widen(tweet.text);
  const std::vector<Token> tokens = Tokenize(text);
  std::vector<RecognizerOutput> outputs;
  for (const auto& r : recognizers_) {
    outputs.emplace_back(r->name(), r->Recognize(tweet, text, tokens));
  }
  return UnionCombine(text, tokens, outputs);
}

std::vector<Detection> Pipeline::Detect(const Tweet& tweet) const {
  std::vector<Detection> all = regex_.Run(tweet);
  std::vector<Detection> entities = RecognizeEntities(tweet);
  all.insert(all.end(), std::make_move_iterator(entities.begin()),
             std::make_move_iterator(entities.end()));
  return ResolveSpans(std::move(all));
}

Pipeline BuildPipeline(const Config& config, std::string_view recognizers) {
  std::vector<std::shared_ptr<const Recognizer>> built;
  int inline_count = 0;
  while (!recognizers.empty()) {
    const std::size_t comma = recognizers.find(',');
    std::string item(recognizers.substr(0, comma));
    recognizers = comma == std::string_view::npos ? std::string_view{}
                                                  : recognizers.substr(comma + 1);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (item == "builtin") {
      built.push_back(std::make_shared<GazetteerRecognizer>("builtin", LoadGazetteer(config),
                                                            config.case_insensitive));
    } else if (item.starts_with("external:")) {
      const std::string command = item.substr(9);
      if (command.empty()) throw ConfigError("external: needs a command");
      ++inline_count;
      RecognizerHandle handle{inline_count == 1 ? "external" : "external" + std::to_string(inline_count),
                              RecognizerKind::kExternal, config.label_map};
      built.push_back(std::make_shared<ExternalRecognizer>(std::move(handle), command));
    } else if (auto it = config.adapters.find(item); it != config.adapters.end()) {
      RecognizerHandle handle{it->second.name, RecognizerKind::kExternal, config.label_map};
      built.push_back(std::make_shared<ExternalRecognizer>(
          std::move(handle), it->second.command, std::chrono::milliseconds(it->second.timeout_ms)));
    } else {
      throw ConfigError("unknown recognizer '" + item + "'");
    }
  }
  return Pipeline(RegexDetectors(config.regex), std::move(built));
}

}  // namespace nightjar

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

#ifndef NIGHTJAR_PIPELINE_H_
#define NIGHTJAR_PIPELINE_H_

#include <memory>
#include <string_view>
#include <vector>

#include "nightjar/config.h"
#include "nightjar/detectors.h"
#include "nightjar/recognizer.h"

namespace nightjar {

// Regex detectors plus a set of recognizers whose outputs are unioned. Detect()
// returns resolved (non-overlapping) detections. Safe to share across threads.
class Pipeline {
 public:
  Pipeline(RegexDetectors regex, std::vector<std::shared_ptr<const Recognizer>> recognizers);

  std::vector<Detection> Detect(const Tweet& tweet) const;
  // Only the recognizer union, unresolved.
  std::vector<Detection> RecognizeEntities(const Tweet& tweet) const;

  const RegexDetectors& regex() const { return regex_; }
  const std::vector<std::shared_ptr<const Recognizer>>& recognizers() const {
    return recognizers_;
  }

 private:
  RegexDetectors regex_;
  std::vector<std::shared_ptr<const Recognizer>> recognizers_;
};

// `recognizers` is a comma-separated list of "builtin", "external:<command>"
// or adapter names declared in the config. Inline commands cannot contain
// commas. Throws ConfigError on unknown names and AdapterError when an
// adapter fails to start.
Pipeline BuildPipeline(const Config& config, std::string_view recognizers);

}  // namespace nightjar

#endif  // NIGHTJAR_PIPELINE_H_

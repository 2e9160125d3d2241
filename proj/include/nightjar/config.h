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

#ifndef NIGHTJAR_CONFIG_H_
#define NIGHTJAR_CONFIG_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "nightjar/detectors.h"
#include "nightjar/masking.h"
#include "nightjar/recognizer.h"

namespace nightjar {

// An external recognizer declared in the config file.
struct AdapterConfig {
  std::string name;
  std::string command;
  int timeout_ms = 30000;
};

// Every knob of a run. Loaded from an INI file (see docs/config.md); command
// line flags override individual values afterwards.
struct Config {
  RegexConfig regex = RegexConfig::Defaults();

  std::optional<std::string> gazetteer_path;  // default: shipped gazetteer
  bool case_insensitive = false;
  std::string recognizers = "builtin";
  LabelMap label_map = DefaultLabelMap();
  std::map<std::string, AdapterConfig> adapters;

  ReplacementPolicy policy = ReplacementPolicy::Default();
  std::optional<std::string> pool_path;  // default: shipped pool

  int jobs = 1;
};

// Relative paths in the file are resolved against `base_dir`. Throws
// ConfigError on unknown sections or keys and on bad values.
Config ParseConfig(std::istream& in, const std::string& base_dir = ".");
Config LoadConfig(const std::string& path);

Gazetteer LoadGazetteer(const Config& config);
ValuePool LoadPool(const Config& config);

}  // namespace nightjar

#endif  // NIGHTJAR_CONFIG_H_

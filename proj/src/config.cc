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

#include "nightjar/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace nightjar {
namespace {

namespace pt = boost::property_tree;

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string::npos) comma = value.size();
    std::string item = value.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

long long ParseInt(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

std::string Resolve(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  return p.is_absolute() ? path : (std::filesystem::path(base_dir) / p).string();
}

EntityLabel LabelOrThrow(const std::string& key, const std::string& name) {
  if (auto label = ParseLabel(name)) return *label;
  throw ConfigError(key + ": unknown label '" + name + "'");
}

void ApplyRegex(const pt::ptree& section, RegexConfig& c) {
  for (const auto& [key, node] : section) {
    const std::string v = node.data();
    const std::string where = "regex." + key;
    if (key == "url_pattern") c.url_pattern = v;
    else if (key == "username_pattern") c.username_pattern = v;
    else if (key == "phone_pattern") c.phone_pattern = v;
    else if (key == "email_pattern") c.email_pattern = v;
    else if (key == "hashtag_pattern") c.hashtag_pattern = v;
    else if (key == "zip_pattern") c.zip_pattern = v;
    else if (key == "phone_min_digits") c.phone_min_digits = static_cast<int>(ParseInt(where, v));
    else if (key == "phone_max_digits") c.phone_max_digits = static_cast<int>(ParseInt(where, v));
    else if (key == "id_min_length") c.id_min_length = static_cast<int>(ParseInt(where, v));
    else if (key == "id_min_letters") c.id_min_letters = static_cast<int>(ParseInt(where, v));
    else if (key == "id_min_digits") c.id_min_digits = static_cast<int>(ParseInt(where, v));
    else if (key == "zip_cue_words") c.zip_cue_words = SplitList(v);
    else if (key == "zip_state_codes") c.zip_state_codes = SplitList(v);
    else if (key == "zip_plus4_needs_no_cue") c.zip_plus4_needs_no_cue = ParseBool(where, v);
    else throw ConfigError("unknown key " + where);
  }
}

void ApplyMasking(const pt::ptree& section, const std::string& base_dir, Config& config) {
  ReplacementPolicy& p = config.policy;
  // "policy" resets the table, so apply it before the per-label keys.
  if (auto named = section.get_optional<std::string>("policy")) {
    const std::uint64_t seed = p.seed;
    const bool consistent = p.consistent_across_tweets;
    p = ReplacementPolicy::Named(*named);
    p.seed = seed;
    p.consistent_across_tweets = consistent;
  }
  for (const auto& [key, node] : section) {
    const std::string v = node.data();
    const std::string where = "masking." + key;
    auto action = [&] {
      auto a = ParseMaskAction(v);
      if (!a) throw ConfigError(where + ": unknown action '" + v + "'");
      return *a;
    };
    if (key == "policy") continue;
    if (key == "seed") {
      p.seed = static_cast<std::uint64_t>(ParseInt(where, v));
    } else if (key == "pool") {
      config.pool_path = Resolve(base_dir, v);
    } else if (key == "consistent_across_tweets") {
      p.consistent_across_tweets = ParseBool(where, v);
    } else if (key == "removal" || key == "entity") {
      const LabelClass cls = key == "removal" ? LabelClass::kRemoval : LabelClass::kEntity;
      const MaskAction a = action();
      if (cls == LabelClass::kRemoval && a == MaskAction::kSynthetic) {
        throw ConfigError(where + ": removal-class labels cannot all be synthetic");
      }
      for (EntityLabel label : kAllLabels) {
        if (ClassOf(label) == cls) p.actions[label] = a;
      }
    } else if (key.starts_with("action_")) {
      p.actions[LabelOrThrow(where, key.substr(7))] = action();
    } else if (key.starts_with("placeholder_")) {
      p.placeholders[LabelOrThrow(where, key.substr(12))] = v;
    } else {
      throw ConfigError("unknown key " + where);
    }
  }
}

}  // namespace

namespace {

bool KnownSection(std::string_view name) {
  return name == "regex" || name == "ner" || name == "labels" || name == "masking" ||
         name.starts_with("adapter:");
}

// The INI reader drops sections without keys, so check every header here.
void CheckSectionHeaders(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] != '[') continue;
    const auto close = line.find(']', first);
    if (close == std::string::npos) continue;  // the reader reports this
    const std::string name = line.substr(first + 1, close - first - 1);
    if (!KnownSection(name)) throw ConfigError("config: unknown section [" + name + "]");
  }
}

}  // namespace

Config ParseConfig(std::istream& in, const std::string& base_dir) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  CheckSectionHeaders(buffer.str());
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(buffer, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  Config config;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("config: key '" + section + "' outside a section");
    }
    if (section == "regex") {
      ApplyRegex(body, config.regex);
    } else if (section == "ner") {
      for (const auto& [key, node] : body) {
        const std::string v = node.data();
        if (key == "gazetteer") config.gazetteer_path = Resolve(base_dir, v);
        else if (key == "case_insensitive") config.case_insensitive = ParseBool("ner." + key, v);
        else if (key == "recognizers") config.recognizers = v;
        else if (key == "jobs") config.jobs = static_cast<int>(ParseInt("ner.jobs", v));
        else throw ConfigError("unknown key ner." + key);
      }
    } else if (section == "labels") {
      for (const auto& [key, node] : body) {
        const std::string v = node.data();
        config.label_map[key] =
            v == "DROP" ? std::nullopt : std::optional(LabelOrThrow("labels." + key, v));
      }
    } else if (section.starts_with("adapter:")) {
      AdapterConfig a;
      a.name = section.substr(8);
      if (a.name.empty() || a.name == "builtin") {
        throw ConfigError("config: bad adapter name in [" + section + "]");
      }
      for (const auto& [key, node] : body) {
        if (key == "command") a.command = node.data();
        else if (key == "timeout_ms") a.timeout_ms = static_cast<int>(ParseInt(section + ".timeout_ms", node.data()));
        else throw ConfigError("unknown key " + section + "." + key);
      }
      if (a.command.empty()) throw ConfigError("config: [" + section + "] needs a command");
      config.adapters[a.name] = a;
    } else if (section == "masking") {
      ApplyMasking(body, base_dir, config);
    } else {
      throw ConfigError("config: unknown section [" + section + "]");
    }
  }
  return config;
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  const auto parent = std::filesystem::path(path).parent_path();
  return ParseConfig(in, parent.empty() ? "." : parent.string());
}

Gazetteer LoadGazetteer(const Config& config) {
  return config.gazetteer_path ? Gazetteer::Load(*config.gazetteer_path) : Gazetteer::Default();
}

ValuePool LoadPool(const Config& config) {
  return config.pool_path ? ValuePool::Load(*config.pool_path) : ValuePool::Default();
}

}  // namespace nightjar

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

#ifndef NIGHTJAR_EXTERNAL_RECOGNIZER_H_
#define NIGHTJAR_EXTERNAL_RECOGNIZER_H_

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "nightjar/recognizer.h"

namespace nightjar {

enum class RecognizerKind { kBuiltin, kExternal };

struct RecognizerHandle {
  std::string name;
  RecognizerKind kind = RecognizerKind::kExternal;
  LabelMap label_map = DefaultLabelMap();
};

// Converts one adapter response line into detections for `text`.
//
// Expects {"id": <expected_id>, "entities": [{"start", "end", "label"}]} with
// scalar-value offsets. Labels absent from the handle's map are dropped and
// counted in *dropped. Throws AdapterError on an error response, an id
// mismatch, malformed JSON or a span outside the text; the message quotes the
// offending line.
std::vector<Detection> ParseAdapterResponse(std::string_view line,
                                            std::string_view expected_id,
                                            std::wstring_view text,
                                            const RecognizerHandle& handle,
                                            std::size_t* dropped);

// A statistical NER model running as a child process that speaks NDJSON on
// stdin/stdout:
//
//   <- {"ready": true, "scheme": "..."}           once, at startup
//   -> {"id": "...", "text": "..."}               one line per tweet
//   <- {"id": "...", "entities": [...]}           one line per request
//
// Requests to one process are serialized; run several recognizers for
// parallelism.
class ExternalRecognizer : public Recognizer {
 public:
  // Starts `command` under /bin/sh and waits for the ready banner. Throws
  // AdapterError if the process cannot start, reports not ready, or stays
  // silent past the timeout.
  ExternalRecognizer(RecognizerHandle handle, std::string command,
                     std::chrono::milliseconds timeout = std::chrono::seconds(30));
  ~ExternalRecognizer() override;

  ExternalRecognizer(const ExternalRecognizer&) = delete;
  ExternalRecognizer& operator=(const ExternalRecognizer&) = delete;

  const std::string& name() const override { return handle_.name; }
  std::vector<Detection> Recognize(const Tweet& tweet, std::wstring_view text,
                                   const std::vector<Token>& tokens) const override;

  const std::string& scheme() const { return scheme_; }
  // Entities dropped so far because their label had no mapping.
  std::size_t dropped_labels() const { return dropped_.load(); }

 private:
  class Process;

  RecognizerHandle handle_;
  std::chrono::milliseconds timeout_;
  std::string scheme_;
  std::unique_ptr<Process> process_;
  mutable std::mutex mutex_;
  mutable std::atomic<std::size_t> dropped_{0};
};

// recognize_external for one tweet.
std::vector<Detection> RecognizeExternal(const Tweet& tweet,
                                         const ExternalRecognizer& recognizer);

}  // namespace nightjar

#endif  // NIGHTJAR_EXTERNAL_RECOGNIZER_H_

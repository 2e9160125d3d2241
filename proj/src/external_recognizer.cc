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

#include "nightjar/external_recognizer.h"

#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "json.hpp"
#include "nightjar/text.h"

extern char** environ;

namespace nightjar {
namespace {

using Clock = std::chrono::steady_clock;

std::string Quote(std::string_view line) {
  constexpr std::size_t kMax = 200;
  std::string s(line.substr(0, kMax));
  if (line.size() > kMax) s += "...";
  return "'" + s + "'";
}

}  // namespace

// Child process connected through one UNIX socket used as both stdin and
// stdout. Sockets let us write with MSG_NOSIGNAL so a dead child surfaces as
// an error instead of SIGPIPE.
class ExternalRecognizer::Process {
 public:
  Process(const std::string& name, const std::string& command) : name_(name) {
    int fds[2];
    if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
      throw AdapterError(name_ + ": socketpair failed: " + std::strerror(errno));
    }
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, fds[1], STDIN_FILENO);
    posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
    std::string sh = "/bin/sh", flag = "-c", cmd = command;
    char* argv[] = {sh.data(), flag.data(), cmd.data(), nullptr};
    const int rc = posix_spawn(&pid_, "/bin/sh", &actions, nullptr, argv, environ);
    posix_spawn_file_actions_destroy(&actions);
    close(fds[1]);
    if (rc != 0) {
      close(fds[0]);
      throw AdapterError(name_ + ": cannot start '" + command + "': " + std::strerror(rc));
    }
    fd_ = fds[0];
  }

  ~Process() {
    shutdown(fd_, SHUT_WR);
    const auto deadline = Clock::now() + std::chrono::seconds(2);
    int status = 0;
    while (waitpid(pid_, &status, WNOHANG) == 0) {
      if (Clock::now() > deadline) {
        kill(pid_, SIGKILL);
        waitpid(pid_, &status, 0);
        break;
      }
      usleep(1000);
    }
    close(fd_);
  }

  void WriteLine(const std::string& line) {
    std::string data = line + "\n";
    std::size_t sent = 0;
    while (sent < data.size()) {
      const ssize_t n = send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw AdapterError(name_ + ": write failed: " + std::strerror(errno));
      }
      sent += static_cast<std::size_t>(n);
    }
  }

  std::string ReadLine(std::chrono::milliseconds timeout) {
    const auto deadline = Clock::now() + timeout;
    for (;;) {
      if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - Clock::now());
      if (left.count() <= 0) throw AdapterError(name_ + ": timed out waiting for adapter");
      pollfd pfd{fd_, POLLIN, 0};
      const int ready = poll(&pfd, 1, static_cast<int>(left.count()));
      if (ready < 0 && errno != EINTR) {
        throw AdapterError(name_ + ": poll failed: " + std::strerror(errno));
      }
      if (ready <= 0) continue;
      char chunk[4096];
      const ssize_t n = recv(fd_, chunk, sizeof chunk, 0);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) throw AdapterError(name_ + ": adapter closed its output");
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  std::string name_;
  pid_t pid_ = -1;
  int fd_ = -1;
  std::string buffer_;
};

std::vector<Detection> ParseAdapterResponse(std::string_view line,
                                            std::string_view expected_id,
                                            std::wstring_view text,
                                            const RecognizerHandle& handle,
                                            std::size_t* dropped) {
  const std::string& name = handle.name;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw AdapterError(name + ": malformed response " + Quote(line));
  }
  if (!doc.is_object() || !doc.contains("id")) {
    throw AdapterError(name + ": response without id " + Quote(line));
  }
  const auto& id = doc["id"];
  if (!id.is_string() || id.get<std::string>() != expected_id) {
    throw AdapterError(name + ": response id does not match request '" +
                       std::string(expected_id) + "': " + Quote(line));
  }
  if (doc.contains("error")) {
    throw AdapterError(name + ": adapter failed on tweet " + std::string(expected_id) +
                       ": " + doc["error"].dump());
  }
  if (!doc.contains("entities") || !doc["entities"].is_array()) {
    throw AdapterError(name + ": response without entities " + Quote(line));
  }
  std::vector<Detection> out;
  for (const auto& e : doc["entities"]) {
    if (!e.is_object() || !e.contains("start") || !e.contains("end") ||
        !e.contains("label") || !e["start"].is_number_unsigned() ||
        !e["end"].is_number_unsigned() || !e["label"].is_string()) {
      throw AdapterError(name + ": malformed entity in " + Quote(line));
    }
    const Span span{e["start"].get<std::size_t>(), e["end"].get<std::size_t>()};
    if (!span.ValidFor(text.size())) {
      throw AdapterError(name + ": span [" + std::to_string(span.start) + ", " +
                         std::to_string(span.end) + ") outside text of length " +
                         std::to_string(text.size()) + " in " + Quote(line));
    }
    const std::string label = e["label"].get<std::string>();
    auto mapped = handle.label_map.find(label);
    if (mapped == handle.label_map.end() || !mapped->second) {
      if (dropped) ++*dropped;
      continue;
    }
    out.push_back(MakeDetection(text, span, *mapped->second, name));
  }
  return out;
}

ExternalRecognizer::ExternalRecognizer(RecognizerHandle handle, std::string command,
                                       std::chrono::milliseconds timeout)
    : handle_(std::move(handle)), timeout_(timeout) {
  handle_.kind = RecognizerKind::kExternal;
  process_ = std::make_unique<Process>(handle_.name, command);
  const std::string banner = process_->ReadLine(timeout_);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(banner);
  } catch (const nlohmann::json::parse_error&) {
    throw AdapterError(handle_.name + ": malformed banner " + Quote(banner));
  }
  if (!doc.is_object() || !doc.value("ready", false)) {
    std::string why = doc.is_object() && doc.contains("error") ? doc["error"].dump() : Quote(banner);
    throw AdapterError(handle_.name + ": adapter not ready: " + why);
  }
  scheme_ = doc.value("scheme", "");
}

ExternalRecognizer::~ExternalRecognizer() = default;

std::vector<Detection> ExternalRecognizer::Recognize(const Tweet& tweet, std::wstring_view text,
                                                     const std::vector<Token>&) const {
  const nlohmann::json request = {{"id", tweet.id}, {"text", tweet.text}};
  std::string line;
  {
    std::lock_guard lock(mutex_);
    process_->WriteLine(request.dump());
    line = process_->ReadLine(timeout_);
  }
  std::size_t dropped = 0;
  auto out = ParseAdapterResponse(line, tweet.id, text, handle_, &dropped);
  dropped_ += dropped;
  return out;
}

std::vector<Detection> RecognizeExternal(const Tweet& tweet,
                                         const ExternalRecognizer& recognizer) {
  const std::wstring text = Widen(tweet.text);
  return recognizer.Recognize(tweet, text, {});
}

}  // namespace nightjar

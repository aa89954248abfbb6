// Copyright 2026 The gdfuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Protocol v1 for out-of-process targets.
//
// On start the child writes `GRAPHFUZZ-ADAPTER 1 <problem names>\n`. Each
// message in either direction is `<decimal body length>\n<body>`. Requests
// are `REQ <id> <problem> <s> <t>\n<graph text>` and responses
// `RESP <id> <ok|crash> <payload>\n`.

#ifndef GDFUZZ_ADAPTER_H_
#define GDFUZZ_ADAPTER_H_

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdfuzz/problem.h"
#include "gdfuzz/targets.h"

namespace gdfuzz {

inline constexpr int kProtocolVersion = 1;

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ProtocolVersionMismatch : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};
class UnsupportedProblem : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

std::string HandshakeLine(std::span<const ProblemId> problems);

// Problems announced by a handshake line (with or without the newline).
// Throws ProtocolVersionMismatch or ProtocolError.
std::vector<ProblemId> ParseHandshake(std::string_view line);

std::string FrameMessage(std::string_view body);

// Incremental de-framer for a byte stream.
class FrameReader {
 public:
  void Feed(std::string_view bytes) { buffer_.append(bytes); }

  // The next complete body, if buffered. Throws ProtocolError on a bad length.
  std::optional<std::string> Next();

  size_t buffered() const { return buffer_.size(); }

 private:
  std::string buffer_;
};

struct AdapterRequest {
  int64_t id = 0;
  ProblemId problem = ProblemId::kSpf;
  TargetInput input;
};

std::string EncodeRequest(int64_t id, ProblemId problem, const TargetInput& in);

// Throws ProtocolError (or ParseError for the graph block).
AdapterRequest ParseRequest(std::string_view body);

struct AdapterResponse {
  int64_t id = 0;
  bool ok = false;
  std::string payload;  // encoded output, or the crash message
};

std::string EncodeResponse(const AdapterResponse& r);
AdapterResponse ParseResponse(std::string_view body);

// Child side: handshake, then answer requests on `in_fd`/`out_fd` until EOF.
// Handler failures (Crash, Hang, exceptions, malformed requests) become crash
// responses. Returns 0 on clean EOF.
using AdapterHandler = std::function<ExecResult(const AdapterRequest&)>;
int ServeAdapter(int in_fd, int out_fd, std::span<const ProblemId> problems,
                 const AdapterHandler& handler);

// Parent side: a Target backed by a child process. A reply that misses the
// budget is a Hang and the child is killed and restarted; a crash status, a
// malformed reply, or a dead child is a Crash.
class RemoteTarget : public Target {
 public:
  // Spawns `argv` and completes the handshake. Throws ProtocolError,
  // ProtocolVersionMismatch or UnsupportedProblem.
  RemoteTarget(std::vector<std::string> argv, ProblemId problem);
  ~RemoteTarget() override;

  RemoteTarget(const RemoteTarget&) = delete;
  RemoteTarget& operator=(const RemoteTarget&) = delete;

  std::string Name() const override;
  ProblemId problem() const override { return problem_; }
  ExecResult Execute(const TargetInput& in, ProbeMap* probes,
                     std::chrono::milliseconds budget) override;

  int restarts() const { return restarts_; }
  pid_t pid() const { return pid_; }

 private:
  void Spawn();
  void Kill();
  void Restart();
  // Reads until a frame is complete or the deadline passes. False on EOF or
  // timeout; `timed_out` distinguishes the two.
  bool ReadFrame(std::chrono::steady_clock::time_point deadline,
                 std::string& body, bool& timed_out);

  std::vector<std::string> argv_;
  ProblemId problem_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  FrameReader reader_;
  std::string handshake_buffer_;
  int64_t next_id_ = 1;
  int restarts_ = 0;
};

}  // namespace gdfuzz

#endif  // GDFUZZ_ADAPTER_H_

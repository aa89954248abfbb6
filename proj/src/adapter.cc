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


#include "gdfuzz/adapter.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <sstream>

#include "gdfuzz/codec.h"

namespace gdfuzz {
namespace {

constexpr std::string_view kMagic = "GRAPHFUZZ-ADAPTER";
constexpr std::chrono::milliseconds kHandshakeTimeout{10000};
constexpr size_t kMaxFrame = 64 << 20;

bool WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    data.remove_prefix(static_cast<size_t>(n));
  }
  return true;
}

std::vector<std::string_view> SplitSpaces(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

int64_t ParseInt(std::string_view tok, const char* what) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ProtocolError(std::string("ProtocolError: bad ") + what + " '" +
                        std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string HandshakeLine(std::span<const ProblemId> problems) {
  std::string s = std::string(kMagic) + " " + std::to_string(kProtocolVersion);
  for (ProblemId p : problems) s += " " + std::string(ProblemName(p));
  return s + "\n";
}

std::vector<ProblemId> ParseHandshake(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  const auto toks = SplitSpaces(line);
  if (toks.size() < 2 || toks[0] != kMagic) {
    throw ProtocolError("ProtocolError: bad handshake '" + std::string(line) + "'");
  }
  if (ParseInt(toks[1], "version") != kProtocolVersion) {
    throw ProtocolVersionMismatch("ProtocolVersionMismatch: adapter speaks version " +
                                  std::string(toks[1]));
  }
  std::vector<ProblemId> problems;
  for (size_t i = 2; i < toks.size(); ++i) {
    auto p = ParseProblem(toks[i]);
    if (!p) throw ProtocolError("ProtocolError: unknown problem '" + std::string(toks[i]) + "'");
    problems.push_back(*p);
  }
  return problems;
}

std::string FrameMessage(std::string_view body) {
  return std::to_string(body.size()) + "\n" + std::string(body);
}

std::optional<std::string> FrameReader::Next() {
  const size_t nl = buffer_.find('\n');
  if (nl == std::string::npos) {
    if (buffer_.size() > 24) throw ProtocolError("ProtocolError: missing frame length");
    return std::nullopt;
  }
  const int64_t len = ParseInt(std::string_view(buffer_).substr(0, nl), "frame length");
  if (len < 0 || static_cast<size_t>(len) > kMaxFrame) {
    throw ProtocolError("ProtocolError: frame length out of range");
  }
  if (buffer_.size() - nl - 1 < static_cast<size_t>(len)) return std::nullopt;
  std::string body = buffer_.substr(nl + 1, len);
  buffer_.erase(0, nl + 1 + len);
  return body;
}

std::string EncodeRequest(int64_t id, ProblemId problem, const TargetInput& in) {
  return "REQ " + std::to_string(id) + " " + std::string(ProblemName(problem)) +
         " " + std::to_string(in.endpoints.s) + " " + std::to_string(in.endpoints.t) +
         "\n" + Serialize(in.graph);
}

AdapterRequest ParseRequest(std::string_view body) {
  const size_t nl = body.find('\n');
  if (nl == std::string_view::npos) throw ProtocolError("ProtocolError: request without graph");
  const auto toks = SplitSpaces(body.substr(0, nl));
  if (toks.size() != 5 || toks[0] != "REQ") {
    throw ProtocolError("ProtocolError: bad request line");
  }
  AdapterRequest req;
  req.id = ParseInt(toks[1], "request id");
  auto p = ParseProblem(toks[2]);
  if (!p) throw UnsupportedProblem("UnsupportedProblem: " + std::string(toks[2]));
  req.problem = *p;
  req.input.endpoints.s = static_cast<VertexId>(ParseInt(toks[3], "s"));
  req.input.endpoints.t = static_cast<VertexId>(ParseInt(toks[4], "t"));
  req.input.graph = Parse(body.substr(nl + 1));
  const VertexId n = req.input.graph.num_vertices;
  if (req.input.endpoints.s < 0 || req.input.endpoints.s >= n ||
      req.input.endpoints.t < 0 || req.input.endpoints.t >= n) {
    throw ProtocolError("ProtocolError: endpoint out of range");
  }
  return req;
}

std::string EncodeResponse(const AdapterResponse& r) {
  std::string payload = r.payload;
  for (char& c : payload) {
    if (c == '\n') c = ' ';
  }
  return "RESP " + std::to_string(r.id) + (r.ok ? " ok " : " crash ") + payload + "\n";
}

AdapterResponse ParseResponse(std::string_view body) {
  if (body.empty() || body.back() != '\n') {
    throw ProtocolError("ProtocolError: response not newline-terminated");
  }
  body.remove_suffix(1);
  if (body.find('\n') != std::string_view::npos) {
    throw ProtocolError("ProtocolError: multi-line response");
  }
  if (body.substr(0, 5) != "RESP ") throw ProtocolError("ProtocolError: bad response tag");
  body.remove_prefix(5);
  const size_t sp1 = body.find(' ');
  if (sp1 == std::string_view::npos) throw ProtocolError("ProtocolError: truncated response");
  AdapterResponse r;
  r.id = ParseInt(body.substr(0, sp1), "response id");
  body.remove_prefix(sp1 + 1);
  const size_t sp2 = body.find(' ');
  const std::string_view status = body.substr(0, sp2);
  if (status == "ok") {
    r.ok = true;
  } else if (status != "crash") {
    throw ProtocolError("ProtocolError: bad status '" + std::string(status) + "'");
  }
  r.payload = sp2 == std::string_view::npos ? "" : std::string(body.substr(sp2 + 1));
  return r;
}

int ServeAdapter(int in_fd, int out_fd, std::span<const ProblemId> problems,
                 const AdapterHandler& handler) {
  if (!WriteAll(out_fd, HandshakeLine(problems))) return 1;
  FrameReader reader;
  char buf[65536];
  while (true) {
    std::optional<std::string> body;
    try {
      body = reader.Next();
    } catch (const ProtocolError&) {
      return 1;  // the stream is unrecoverable
    }
    if (!body) {
      const ssize_t n = ::read(in_fd, buf, sizeof(buf));
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) return n == 0 ? 0 : 1;
      reader.Feed(std::string_view(buf, static_cast<size_t>(n)));
      continue;
    }
    AdapterResponse resp;
    try {
      AdapterRequest req = ParseRequest(*body);
      resp.id = req.id;
      bool supported = false;
      for (ProblemId p : problems) supported |= p == req.problem;
      if (!supported) {
        resp.payload = "UnsupportedProblem: " + std::string(ProblemName(req.problem));
      } else {
        ExecResult r = handler(req);
        if (const auto* out = std::get_if<TargetOutput>(&r)) {
          resp.ok = true;
          resp.payload = EncodeOutput(*out);
        } else {
          resp.payload = DescribeResult(r);
        }
      }
    } catch (const std::exception& e) {
      resp.ok = false;
      resp.payload = e.what();
    }
    if (!WriteAll(out_fd, FrameMessage(EncodeResponse(resp)))) return 1;
  }
}

RemoteTarget::RemoteTarget(std::vector<std::string> argv, ProblemId problem)
    : argv_(std::move(argv)), problem_(problem) {
  if (argv_.empty()) throw ProtocolError("ProtocolError: empty adapter command");
  ::signal(SIGPIPE, SIG_IGN);
  Spawn();
}

RemoteTarget::~RemoteTarget() { Kill(); }

std::string RemoteTarget::Name() const { return "adapter:" + argv_.front(); }

void RemoteTarget::Spawn() {
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0) {
    throw ProtocolError(std::string("ProtocolError: pipe: ") + std::strerror(errno));
  }
  std::vector<char*> args;
  for (std::string& a : argv_) args.push_back(a.data());
  args.push_back(nullptr);
  const pid_t pid = ::fork();
  if (pid < 0) throw ProtocolError(std::string("ProtocolError: fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  reader_ = FrameReader();

  // Handshake: one line, then any bytes already read belong to the frames.
  const auto deadline = std::chrono::steady_clock::now() + kHandshakeTimeout;
  std::string line;
  char buf[4096];
  while (line.find('\n') == std::string::npos) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    pollfd pfd{from_child_, POLLIN, 0};
    const int rc = left.count() > 0 ? ::poll(&pfd, 1, static_cast<int>(left.count())) : 0;
    if (rc < 0 && errno == EINTR) continue;
    if (rc <= 0) {
      Kill();
      throw ProtocolError("ProtocolError: no handshake from adapter");
    }
    const ssize_t n = ::read(from_child_, buf, sizeof(buf));
    if (n <= 0) {
      Kill();
      throw ProtocolError("ProtocolError: adapter exited before handshake");
    }
    line.append(buf, static_cast<size_t>(n));
  }
  const size_t nl = line.find('\n');
  reader_.Feed(std::string_view(line).substr(nl + 1));
  std::vector<ProblemId> problems;
  try {
    problems = ParseHandshake(std::string_view(line).substr(0, nl));
  } catch (...) {
    Kill();
    throw;
  }
  bool supported = false;
  for (ProblemId p : problems) supported |= p == problem_;
  if (!supported) {
    Kill();
    throw UnsupportedProblem("UnsupportedProblem: adapter does not serve " +
                             std::string(ProblemName(problem_)));
  }
}

void RemoteTarget::Kill() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    ::kill(pid_, SIGKILL);
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
  pid_ = -1;
}

void RemoteTarget::Restart() {
  Kill();
  ++restarts_;
  Spawn();
}

bool RemoteTarget::ReadFrame(std::chrono::steady_clock::time_point deadline,
                             std::string& body, bool& timed_out) {
  timed_out = false;
  char buf[65536];
  while (true) {
    if (auto next = reader_.Next()) {
      body = std::move(*next);
      return true;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      return false;
    }
    pollfd pfd{from_child_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (rc < 0 && errno == EINTR) continue;
    if (rc == 0) {
      timed_out = true;
      return false;
    }
    const ssize_t n = ::read(from_child_, buf, sizeof(buf));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    reader_.Feed(std::string_view(buf, static_cast<size_t>(n)));
  }
}

ExecResult RemoteTarget::Execute(const TargetInput& in, ProbeMap* /*probes*/,
                                 std::chrono::milliseconds budget) {
  if (pid_ < 0) Restart();
  const auto deadline = std::chrono::steady_clock::now() + budget;
  const int64_t id = next_id_++;
  if (!WriteAll(to_child_, FrameMessage(EncodeRequest(id, problem_, in)))) {
    Restart();
    return Crash{"adapter closed its input"};
  }
  std::string body;
  bool timed_out = false;
  bool got = false;
  try {
    got = ReadFrame(deadline, body, timed_out);
  } catch (const ProtocolError& e) {
    Restart();
    return Crash{e.what()};
  }
  if (!got) {
    Restart();
    if (timed_out) return Hang{};
    return Crash{"adapter exited"};
  }
  AdapterResponse resp;
  try {
    resp = ParseResponse(body);
  } catch (const ProtocolError& e) {
    return Crash{std::string(e.what()) + ": " + body};
  }
  if (resp.id != id) {
    Restart();
    return Crash{"response id " + std::to_string(resp.id) + " for request " +
                 std::to_string(id)};
  }
  if (!resp.ok) return Crash{resp.payload};
  try {
    return DecodeOutput(problem_, resp.payload);
  } catch (const CodecError& e) {
    return Crash{std::string(e.what())};
  }
}

}  // namespace gdfuzz

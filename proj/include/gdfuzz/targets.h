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

// Reference implementations of the nine problems, the executor that runs them
// with crash capture and a time budget, and the differential comparison.

#ifndef GDFUZZ_TARGETS_H_
#define GDFUZZ_TARGETS_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "gdfuzz/graph.h"
#include "gdfuzz/probe_map.h"
#include "gdfuzz/problem.h"

namespace gdfuzz {

struct TargetInput {
  Graph graph;
  EndpointPair endpoints;

  // Endpoints derived from the graph, as every harness does.
  static TargetInput From(Graph g) {
    EndpointPair ep = DeriveEndpoints(g);
    return {std::move(g), ep};
  }
};

// Thrown through an implementation when its budget runs out.
struct HangSignal {};

// Passed to every implementation. Probe() records coverage when a ProbeMap is
// attached and also serves as the watchdog tick: every loop body in an
// implementation calls it, so a runaway loop is cut off at the deadline.
class ExecContext {
 public:
  using Clock = std::chrono::steady_clock;

  ExecContext(ProbeMap* probes, Clock::time_point deadline)
      : probes_(probes), deadline_(deadline) {}

  void Probe(ProbeId id) {
    if (probes_ != nullptr) probes_->Record(id);
    Tick();
  }

  void Tick() {
    if ((++ticks_ & 0x3ff) == 0 && Clock::now() > deadline_) throw HangSignal{};
  }

 private:
  ProbeMap* probes_;
  Clock::time_point deadline_;
  uint64_t ticks_ = 0;
};

// Probe ids are partitioned by implementation: (impl + 1) << 8 | local.
constexpr ProbeId ProbeBase(ImplId id) {
  return static_cast<ProbeId>((static_cast<int>(id) + 1) << 8);
}

using ImplFn = TargetOutput (*)(const TargetInput&, ExecContext&);

ImplFn ImplementationFor(ImplId id);

struct Crash {
  std::string message;
  friend bool operator==(const Crash&, const Crash&) = default;
};
struct Hang {
  friend bool operator==(const Hang&, const Hang&) = default;
};

using ExecResult = std::variant<TargetOutput, Crash, Hang>;

inline constexpr std::chrono::milliseconds kDefaultExecBudget{5000};

// Runs `fn` on `in`; exceptions become Crash, an expired budget becomes Hang.
// Never throws.
ExecResult RunImpl(ImplFn fn, const TargetInput& in, ProbeMap* probes,
                   std::chrono::milliseconds budget);

// Throws std::invalid_argument when `impl` does not solve `problem`.
ExecResult RunTarget(ProblemId problem, ImplId impl, const TargetInput& in,
                     ProbeMap* probes,
                     std::chrono::milliseconds budget = kDefaultExecBudget);

// Something the engine can execute: an in-process implementation, a mutant, or
// an out-of-process adapter.
class Target {
 public:
  virtual ~Target() = default;
  virtual std::string Name() const = 0;
  virtual ProblemId problem() const = 0;
  virtual ExecResult Execute(const TargetInput& in, ProbeMap* probes,
                             std::chrono::milliseconds budget) = 0;
};

class InProcessTarget : public Target {
 public:
  InProcessTarget(std::string name, ProblemId problem, ImplFn fn)
      : name_(std::move(name)), problem_(problem), fn_(fn) {}

  std::string Name() const override { return name_; }
  ProblemId problem() const override { return problem_; }
  ExecResult Execute(const TargetInput& in, ProbeMap* probes,
                     std::chrono::milliseconds budget) override {
    return RunImpl(fn_, in, probes, budget);
  }

 private:
  std::string name_;
  ProblemId problem_;
  ImplFn fn_;
};

std::unique_ptr<Target> MakeBuiltinTarget(ImplId id);

struct Comparison {
  bool equal = true;
  std::string explanation;
};

// Differential comparison. SPF/MFV: exact. MST: equal total weight and node
// count. SCC/BCC: equal canonical set-of-sets. MM: equal cardinality. HC/JS/AA:
// same keys, scores within kScoreTolerance. When `in` is given, MST and MM
// outputs are also checked for structural validity against the graph.
// Throws std::invalid_argument on a problem mismatch.
Comparison CompareOutputs(ProblemId problem, const TargetOutput& a,
                          const TargetOutput& b, const TargetInput* in = nullptr);

inline constexpr double kScoreTolerance = 1e-9;

// Structural validity of a single output for `in` (forest spanning each
// component, vertex-disjoint matching, SCC partition...). Empty string when
// valid.
std::string CheckOutputValidity(ProblemId problem, const TargetOutput& out,
                                const TargetInput& in);

}  // namespace gdfuzz

#endif  // GDFUZZ_TARGETS_H_

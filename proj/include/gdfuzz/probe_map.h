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

#ifndef GDFUZZ_PROBE_MAP_H_
#define GDFUZZ_PROBE_MAP_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace gdfuzz {

using ProbeId = uint16_t;

// Per-execution hit counters for the explicit probes placed in the reference
// implementations. Counters saturate at kMaxCount. Clearing touches only the
// probes hit since the last clear.
class ProbeMap {
 public:
  static constexpr uint8_t kMaxCount = 255;

  ProbeMap() : counts_(std::make_unique<std::array<uint8_t, 1 << 16>>()) {
    counts_->fill(0);
  }

  void Record(ProbeId id) {
    uint8_t& c = (*counts_)[id];
    if (c == 0) touched_.push_back(id);
    if (c != kMaxCount) ++c;
  }

  uint8_t Count(ProbeId id) const { return (*counts_)[id]; }

  void Clear() {
    for (ProbeId id : touched_) (*counts_)[id] = 0;
    touched_.clear();
  }

  bool empty() const { return touched_.empty(); }

  // (probe, count) pairs in ascending probe order.
  std::vector<std::pair<ProbeId, uint8_t>> Entries() const {
    std::vector<std::pair<ProbeId, uint8_t>> out;
    out.reserve(touched_.size());
    for (ProbeId id : touched_) out.emplace_back(id, (*counts_)[id]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unique_ptr<std::array<uint8_t, 1 << 16>> counts_;
  std::vector<ProbeId> touched_;
};

}  // namespace gdfuzz

#endif  // GDFUZZ_PROBE_MAP_H_

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


#include "gdfuzz/codec.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <variant>

namespace gdfuzz {
namespace {

std::string FormatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string EncodeComponents(const Components& comps) {
  std::string s = "components " + std::to_string(comps.size()) + ";";
  for (const auto& c : comps) {
    s += " {";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(c[i]);
    }
    s += "}";
  }
  return s;
}

std::string EncodePairs(const std::vector<PairScore>& scores) {
  std::string s = "pairs " + std::to_string(scores.size());
  for (const PairScore& p : scores) {
    s += " " + std::to_string(p.u) + "," + std::to_string(p.v) + ":" +
         FormatDouble(p.score);
  }
  return s;
}

// Cursor over a payload. Every accessor throws CodecError on mismatch.
class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void Expect(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) Fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  bool Peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  int64_t Int() {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) Fail("expected an integer");
    pos_ = ptr - s_.data();
    return v;
  }

  int64_t Count() {
    const int64_t k = Int();
    if (k < 0 || k > 1'000'000) Fail("bad count");
    return k;
  }

  double Real() {
    // strtod needs a terminated buffer; scores are short.
    size_t end = pos_;
    while (end < s_.size() && s_[end] != ' ') ++end;
    const std::string tok(s_.substr(pos_, end - pos_));
    char* stop = nullptr;
    const double v = std::strtod(tok.c_str(), &stop);
    if (tok.empty() || *stop != '\0') Fail("expected a number");
    pos_ = end;
    return v;
  }

  void End() {
    if (pos_ != s_.size()) Fail("trailing bytes");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw CodecError("CodecError: " + what + " at offset " + std::to_string(pos_) +
                     " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

Components DecodeComponents(Reader& r) {
  r.Expect("components ");
  const int64_t k = r.Count();
  r.Expect(";");
  Components comps(k);
  for (auto& c : comps) {
    r.Expect(" {");
    while (!r.Peek('}')) {
      if (!c.empty()) r.Expect(",");
      c.push_back(static_cast<VertexId>(r.Int()));
    }
    r.Expect("}");
  }
  r.End();
  return comps;
}

std::vector<PairScore> DecodePairs(Reader& r) {
  r.Expect("pairs ");
  std::vector<PairScore> scores(r.Count());
  for (PairScore& p : scores) {
    r.Expect(" ");
    p.u = static_cast<VertexId>(r.Int());
    r.Expect(",");
    p.v = static_cast<VertexId>(r.Int());
    r.Expect(":");
    p.score = r.Real();
  }
  r.End();
  return scores;
}

}  // namespace

std::string EncodeOutput(const TargetOutput& out) {
  switch (ProblemOf(out)) {
    case ProblemId::kSpf: {
      const auto& o = std::get<SpfOut>(out);
      if (o.kind == SpfOut::Kind::kUnreachable) return "unreachable";
      if (o.kind == SpfOut::Kind::kNegativeCycle) return "negative_cycle";
      return "length " + std::to_string(o.length);
    }
    case ProblemId::kMst: {
      const auto& o = std::get<MstOut>(out);
      std::string s = "forest " + std::to_string(o.total_weight) + " " +
                      std::to_string(o.node_count) + " " +
                      std::to_string(o.edges.size());
      for (const Edge& e : o.edges) {
        s += " " + std::to_string(e.u) + ":" + std::to_string(e.v) + ":" +
             std::to_string(e.w);
      }
      return s;
    }
    case ProblemId::kScc:
      return EncodeComponents(std::get<SccOut>(out).components);
    case ProblemId::kBcc:
      return EncodeComponents(std::get<BccOut>(out).components);
    case ProblemId::kHc: {
      const auto& scores = std::get<HcOut>(out).scores;
      std::string s = "scores " + std::to_string(scores.size());
      for (size_t v = 0; v < scores.size(); ++v) {
        s += " " + std::to_string(v) + ":" + FormatDouble(scores[v]);
      }
      return s;
    }
    case ProblemId::kJs:
      return EncodePairs(std::get<JsOut>(out).scores);
    case ProblemId::kMm: {
      const auto& m = std::get<MmOut>(out).matching;
      std::string s = "matching " + std::to_string(m.size());
      for (const auto& [u, v] : m) s += " " + std::to_string(u) + ":" + std::to_string(v);
      return s;
    }
    case ProblemId::kAa:
      return EncodePairs(std::get<AaOut>(out).scores);
    case ProblemId::kMfv:
      return "flow " + std::to_string(std::get<MfvOut>(out).value);
  }
  return "";
}

TargetOutput DecodeOutput(ProblemId problem, std::string_view payload) {
  Reader r(payload);
  switch (problem) {
    case ProblemId::kSpf:
      if (payload == "unreachable") return SpfOut::Unreachable();
      if (payload == "negative_cycle") return SpfOut::NegativeCycle();
      {
        r.Expect("length ");
        const int64_t l = r.Int();
        r.End();
        return SpfOut::Length(l);
      }
    case ProblemId::kMst: {
      MstOut o;
      r.Expect("forest ");
      o.total_weight = r.Int();
      r.Expect(" ");
      o.node_count = static_cast<int32_t>(r.Int());
      r.Expect(" ");
      o.edges.resize(r.Count());
      for (Edge& e : o.edges) {
        r.Expect(" ");
        e.u = static_cast<VertexId>(r.Int());
        r.Expect(":");
        e.v = static_cast<VertexId>(r.Int());
        r.Expect(":");
        e.w = r.Int();
      }
      r.End();
      return o;
    }
    case ProblemId::kScc:
      return SccOut{DecodeComponents(r)};
    case ProblemId::kBcc:
      return BccOut{DecodeComponents(r)};
    case ProblemId::kHc: {
      HcOut o;
      r.Expect("scores ");
      o.scores.resize(r.Count());
      for (size_t v = 0; v < o.scores.size(); ++v) {
        r.Expect(" ");
        if (r.Int() != static_cast<int64_t>(v)) r.Fail("vertex out of order");
        r.Expect(":");
        o.scores[v] = r.Real();
      }
      r.End();
      return o;
    }
    case ProblemId::kJs:
      return JsOut{DecodePairs(r)};
    case ProblemId::kMm: {
      MmOut o;
      r.Expect("matching ");
      o.matching.resize(r.Count());
      for (auto& [u, v] : o.matching) {
        r.Expect(" ");
        u = static_cast<VertexId>(r.Int());
        r.Expect(":");
        v = static_cast<VertexId>(r.Int());
      }
      r.End();
      return o;
    }
    case ProblemId::kAa:
      return AaOut{DecodePairs(r)};
    case ProblemId::kMfv: {
      r.Expect("flow ");
      const int64_t v = r.Int();
      r.End();
      return MfvOut{v};
    }
  }
  r.Fail("unknown problem");
}

std::string DescribeResult(const ExecResult& r) {
  if (const auto* out = std::get_if<TargetOutput>(&r)) return EncodeOutput(*out);
  if (const auto* c = std::get_if<Crash>(&r)) return "crash: " + c->message;
  return "hang";
}

}  // namespace gdfuzz

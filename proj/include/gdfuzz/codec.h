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


// Text encoding of TargetOutput values, shared by the adapter wire protocol
// and the bug entries of report.json.
//
//   SPF  length <l> | unreachable | negative_cycle
//   MST  forest <total> <n> <k> u:v:w ...
//   SCC  components <k>; {a,b} {c} ...     (BCC identical)
//   HC   scores <k> <v>:<score> ...
//   JS   pairs <k> <u>,<v>:<score> ...     (AA identical)
//   MM   matching <k> <u>:<v> ...
//   MFV  flow <v>
//
// Scores are printed with %.17g so they decode to the same double.

#ifndef GDFUZZ_CODEC_H_
#define GDFUZZ_CODEC_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "gdfuzz/problem.h"
#include "gdfuzz/targets.h"

namespace gdfuzz {

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string EncodeOutput(const TargetOutput& out);

// Throws CodecError when `payload` is not a valid encoding for `problem`.
TargetOutput DecodeOutput(ProblemId problem, std::string_view payload);

// EncodeOutput for outputs, "crash: <message>" and "hang" otherwise.
std::string DescribeResult(const ExecResult& r);

}  // namespace gdfuzz

#endif  // GDFUZZ_CODEC_H_

// Copyright 2026 The tempdrt Authors.
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

// Command-line front end.
//
//   tempdrt construct --strategy split --text "..." [--output box|term]
//   tempdrt eval      --strategy both --text "..." --model FILE [--explain]
//   tempdrt compare   --text "..." --model FILE
//   tempdrt suite     [--filter ID]
//
// Exit codes: 0 success, 1 parse, construction, model or evaluation error
// (or a failing suite item), 2 a verdict contradicting --expect, 64 bad
// command-line usage.

#ifndef TEMPDRT_CLI_H_
#define TEMPDRT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tempdrt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUsage = 64;

// `args` excludes the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace tempdrt

#endif  // TEMPDRT_CLI_H_

// Copyright 2026 The greennet Authors
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

#ifndef GREENNET_TOOLS_CLI_H_
#define GREENNET_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace greennet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // infeasible, invalid solution or diverging models
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Entry point of the greennet tool. Normal output goes to `out`, diagnostics
// and log lines to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Same, with argv[0] supplied.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace greennet::cli

#endif  // GREENNET_TOOLS_CLI_H_

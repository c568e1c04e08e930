// Copyright 2026 The tvh Authors.
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

#ifndef TVH_TOOLS_CLI_HPP_
#define TVH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace tvh::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

// Runs the `tvh` command line. `args` excludes the program name. Machine
// readable output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace tvh::cli

#endif  // TVH_TOOLS_CLI_HPP_

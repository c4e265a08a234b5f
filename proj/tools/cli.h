// Copyright 2026 The GFL Authors
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

#ifndef GFL_TOOLS_CLI_H_
#define GFL_TOOLS_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace gfl::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;
inline constexpr int kInconsistent = 4;

// Runs one subcommand. `args` excludes the program name. The JSON payload
// goes to `out`, diagnostics to `err`.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace gfl::cli

#endif  // GFL_TOOLS_CLI_H_

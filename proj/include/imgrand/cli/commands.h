// Copyright 2026 The imgrand Authors.
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

#ifndef IMGRAND_CLI_COMMANDS_H_
#define IMGRAND_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace imgrand::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the `imgrand` tool. args excludes the program name. Subcommands:
// evaluate, stats, transform, synth.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace imgrand::cli

#endif  // IMGRAND_CLI_COMMANDS_H_

// Copyright 2026 The spdgeom Authors
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

#ifndef SPDGEOM__CLI_HPP_
#define SPDGEOM__CLI_HPP_

#include <string>
#include <vector>

namespace spdgeom
{

/// Process exit codes of the spd tool.
enum ExitCode : int
{
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitNumerical = 4,
};

struct CliResult
{
  int exit_code;
  /// A single JSON document (or CSV payload with --format csv).
  std::string out;
  /// Human-readable log lines.
  std::string err;
};

/// Runs one invocation of the tool. args excludes the program name.
CliResult run_cli(const std::vector<std::string> & args);

/// Entry point: runs run_cli and writes its streams to stdout and stderr.
int cli_main(int argc, char ** argv);

}  // namespace spdgeom

#endif  // SPDGEOM__CLI_HPP_

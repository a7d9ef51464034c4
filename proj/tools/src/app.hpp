// Copyright 2026 The sphull Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>

namespace sphull::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitStatFailure = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

// Parses argv (argv[0] is the program name), runs one subcommand and returns
// its exit code. Tables go to --out, or `out` when none is given; messages
// and usage go to `err`.
int run_app(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace sphull::cli

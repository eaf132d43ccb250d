// Copyright 2026 The tubal-spectra Authors.
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

#ifndef TUBAL_TOOLS_CLI_HPP_
#define TUBAL_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tubal::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalError = 2,
  kVerificationFailure = 3,
};

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace tubal::cli

#endif  // TUBAL_TOOLS_CLI_HPP_

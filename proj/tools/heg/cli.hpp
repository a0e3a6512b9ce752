// Copyright 2026 The HEG Authors
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

#ifndef HEG_TOOLS_CLI_HPP
#define HEG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace heg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapability = 2,
  kDoesNotHold = 3,
};

/// Runs the heg command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace heg::cli

#endif  // HEG_TOOLS_CLI_HPP

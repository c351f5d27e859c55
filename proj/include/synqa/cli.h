// Copyright 2026 The Synqa Authors.
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

// Command-line entry point: synqa generate | mix | stats | validate.

#ifndef SYNQA_CLI_H_
#define SYNQA_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace synqa {

enum ExitStatus : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Runs one command. `args` excludes the program name. Dataset bytes only go
// to the file named by --out; summaries go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace synqa

#endif  // SYNQA_CLI_H_

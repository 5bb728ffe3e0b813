// include/amalgam/cli.hpp

// Copyright 2026  amalgam-lab authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef AMALGAM_CLI_HPP
#define AMALGAM_CLI_HPP

#include <string>
#include <vector>

namespace amalgam::cli {

// Executes one amalgam-lab invocation.  argv excludes the program name.
// Exit codes: 0 all rows pass, 1 a verification row failed, 2 config error.
// When `captured` is non-null the CSV goes there instead of --out/stdout.
int run(const std::vector<std::string>& argv, std::string* captured = nullptr);

}  // namespace amalgam::cli

#endif  // AMALGAM_CLI_HPP

// Copyright 2026 The ratcp Authors
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

#ifndef RATCP_TOOLS_CLI_HPP_
#define RATCP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ratcp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kBoundExceeded = 2;
inline constexpr int kNotInterior = 3;
inline constexpr int kUsage = 64;  // also malformed input files
inline constexpr int kNoInput = 66;
inline constexpr int kInternal = 70;

// Runs one invocation. args[0] is the program name. "-" as a path (the
// default for inputs and -o) means `in` / `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ratcp::cli

#endif  // RATCP_TOOLS_CLI_HPP_

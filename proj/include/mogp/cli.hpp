// Copyright 2026 The mogp Authors
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

#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests can drive it in-process.
//
// Exit codes: 0 success, 2 usage or validation error, 3 campaign state error
// (design incomplete, budget exhausted), 4 I/O or file format error.

#include <iosfwd>
#include <string>
#include <vector>

namespace mogp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitState = 3;
inline constexpr int kExitIo = 4;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mogp

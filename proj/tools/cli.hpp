// Copyright 2026 The bandvqe Authors
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

#include <map>
#include <ostream>
#include <string>

namespace bandvqe::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kNumericalError = 2 };

/// Runs `bandvqe <command> ...` and returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Reads a flat "key = value" file. '#' starts a comment line.
std::map<std::string, std::string> read_config(const std::string& path);

}  // namespace bandvqe::cli

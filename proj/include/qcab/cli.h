// Copyright 2026 The qcab Authors
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

#ifndef QCAB_CLI_H
#define QCAB_CLI_H

#include <ostream>

namespace qcab {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Runs one `qcab` subcommand. Returns 0 on success, 1 when an engine or a
/// check fails, 2 for bad arguments or unreadable input files.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qcab

#endif

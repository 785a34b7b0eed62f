/*
 * Copyright 2026 The lightsout Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lightsout {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitNegative = 1,  // solve: unwinnable; census: disagreements found
    kExitError = 2,     // input, parse or capacity error
};

/**
 * Run one subcommand. `args` excludes the program name.
 *
 *   solve --k K --labels a,b,c FILE
 *   classify --k-min A --k-max B FILE
 *   min-fas FILE [--all]
 *   scc FILE
 *   census --n N --k-max K [--summary]
 */
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace lightsout

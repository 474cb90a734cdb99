/**
 * Copyright 2026 The boxrot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOXROT_TOOLS_CLI_COMMANDS_HPP
#define BOXROT_TOOLS_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace boxrot::cli {

// Entry point of the `boxrot` tool. Returns the process exit code: 0 on
// success, 1 on a runtime error, 2 on a usage error. Every error line written
// to `err` starts with "error: ".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxrot::cli

#endif  // BOXROT_TOOLS_CLI_COMMANDS_HPP

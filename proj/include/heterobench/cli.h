/*
 * Copyright 2026 The heterobench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HETEROBENCH_CLI_H_
#define HETEROBENCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace heterobench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Runs one command. `args` excludes the program name. Results go to `out`
// (or the --out path), diagnostics and usage text to `err`. Returns 0 on
// success, 1 on a usage or validation error, 2 on an I/O error.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heterobench

#endif  // HETEROBENCH_CLI_H_

/*
 * Copyright 2026 The hyperpf Authors
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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

namespace hyperpf::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsage = 2;

/// Enumerations larger than this many partitions need --force.
inline constexpr unsigned long kPartitionGuard = 200000;

struct VerifyOptions {
  int n = 0;
  int k = 0;
  int trials = 10;
  std::uint64_t seed = 1;
  std::string mode;  // "symbolic", "points", or empty for automatic
  int points = 5;
};

int cmd_compute(const std::filesystem::path& input, const std::string& method, bool force,
                std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, bool force, std::ostream& out, std::ostream& err);
int cmd_coeffs(int n, int k, bool force, std::ostream& out, std::ostream& err);
int cmd_torelli(int n, bool force, std::ostream& out, std::ostream& err);
int cmd_involution(int n, int k, bool force, std::ostream& out, std::ostream& err);
int cmd_compose(int k, int n, int p, int trials, std::uint64_t seed, bool force,
                std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperpf::cli

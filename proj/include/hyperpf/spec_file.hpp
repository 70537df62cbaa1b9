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

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperpf/hyperpfaffian.hpp"

namespace hyperpf {

/// Reads a JSON spec document:
///
///   {"n": 4, "k": 2, "degree": 3,
///    "terms": [{"r": [0, 3], "a": "1"}, {"r": [1, 2], "a": "-3"}]}
///
/// `degree` is optional (default k/2 * (n - 1)); `a` is a rational string
/// "p/q" or "p" (plain JSON integers are accepted too).  Throws ParseError
/// naming the offending field or tuple.
SkewSpec parse_spec_json(std::string_view text);
SkewSpec read_spec_file(const std::filesystem::path& path);

/// Inverse of parse_spec_json; keys in lexicographic tuple order.
std::string write_spec_json(const SkewSpec& spec);

}  // namespace hyperpf

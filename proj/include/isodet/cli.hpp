// Copyright 2026 The isodet Authors
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

/**
 * @file cli.hpp
 * @brief Command-line dispatcher behind the isodet executable.
 *
 * Exit codes: 0 success (WARN reports included), 1 domain error, 2 usage
 * error, 3 a verification check failed.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "isodet/fields.hpp"

namespace isodet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

/// "Q", "p=5", "p=7,ext=2" or "p=7,ext=2,d=3". Malformed text raises
/// ParseError; bad primes raise the field_create errors.
FieldDescriptor parse_field_option(std::string_view text);

/// Runs one subcommand. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace isodet::cli

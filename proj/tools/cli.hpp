// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowkit::cli {

/// Runs one subcommand. args excludes the program name. Returns the exit
/// status: 0 success, 1 I/O or parse error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowkit::cli

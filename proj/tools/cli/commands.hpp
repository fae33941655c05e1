// SPDX-License-Identifier: Apache-2.0
//
// Subcommands of the ltoeplitz tool. Exit codes: 0 success, 1 a check
// failed, 2 bad usage or configuration.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ltoeplitz::cli {

struct Options {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::string check = "all";
  std::optional<std::size_t> resolution;
  std::optional<std::size_t> window;
};

int cmd_index(const Options& options, std::ostream& out);
int cmd_spectrum(const Options& options, std::ostream& out);
int cmd_verify(const Options& options, std::ostream& out);

/// Parses argv and dispatches; errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ltoeplitz::cli

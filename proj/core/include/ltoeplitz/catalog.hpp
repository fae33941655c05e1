// SPDX-License-Identifier: Apache-2.0
//
// A catalog is a JSON file of named operator cases plus an ordered list of
// checks with their frozen thresholds. Running it yields one report per check.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltoeplitz/operator.hpp"
#include "ltoeplitz/verify.hpp"

namespace ltoeplitz {

struct RunOptions {
  std::string check = "all";            // a check kind, a "kind:label" name, or "all"
  std::optional<std::uint64_t> seed;    // overrides the seed of randomized checks
};

class Catalog {
 public:
  static Catalog parse(std::string_view text);
  static Catalog load(const std::filesystem::path& path);

  [[nodiscard]] const std::map<std::string, LambdaToeplitz>& cases() const;
  /// "kind:label" for every check, in file order.
  [[nodiscard]] std::vector<std::string> check_names() const;

  /// Runs the selected checks in file order. A check that throws becomes a
  /// failed report. Throws InvalidArgument when nothing matches the selector.
  [[nodiscard]] std::vector<CheckReport> run(const RunOptions& options = {}) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Check kinds understood in catalog files.
[[nodiscard]] const std::vector<std::string>& known_check_kinds();

/// Seeded operators mixing the circle, the lexicographic 2-torus and the
/// real-embedded (1, sqrt 2) dual, with finite-order and irrational lambda.
[[nodiscard]] std::vector<LambdaToeplitz> random_operators(std::uint64_t seed, std::size_t count);

}  // namespace ltoeplitz

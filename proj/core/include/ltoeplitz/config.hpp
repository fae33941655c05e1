// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration files (JSON). Unknown fields are rejected.
//
//   group:   {"type": "lattice_lex", "dimension": 2}
//            {"type": "real_embedded", "basis": ["1", "sqrt(2)"]}
//   lambda:  {"angles": ["1/2", "0.25", "golden"]}   (torus)
//            {"t": "0.37"}                            (real embedded)
//   symbol:  [{"exponents": [1, 0], "re": "2", "im": "0"}, ...]
//
// Angle strings "p/q" and plain decimals are exact rationals; "golden" and
// JSON numbers are real (treated as irrational).

#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ltoeplitz/error.hpp"
#include "ltoeplitz/operator.hpp"

namespace ltoeplitz {

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Either a leading window of `size` cone elements or the cone part of a box.
struct WindowSpec {
  std::optional<std::size_t> size;
  std::optional<ExponentBox> box;

  [[nodiscard]] TruncationWindow resolve(const GroupSpec& spec) const;
};

struct ExperimentConfig {
  explicit ExperimentConfig(GroupSpec g) : group(std::move(g)) {}

  GroupSpec group;
  std::optional<GroupPoint> lambda;
  std::optional<Symbol> symbol;
  std::optional<WindowSpec> window;
  std::vector<Character> characters;
  std::vector<std::complex<double>> mu;
  std::optional<std::int64_t> q;
  std::optional<Character> chi0;
  std::optional<std::size_t> resolution;
  std::vector<std::size_t> probe_sizes;
  std::optional<std::uint64_t> seed;

  /// The operator, or ConfigError if lambda or symbol is missing.
  [[nodiscard]] LambdaToeplitz make_operator() const;
};

[[nodiscard]] ExperimentConfig parse_experiment(std::string_view text);
[[nodiscard]] ExperimentConfig load_experiment(const std::filesystem::path& path);

/// Whole-file read; ConfigError when the file cannot be opened.
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace ltoeplitz

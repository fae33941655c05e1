// SPDX-License-Identifier: Apache-2.0
//
// Property checks over operators and finite sections. Every check returns a
// report with its measured residuals and the budget it ran under; thresholds
// are passed in by the caller (normally from the bundled catalog).

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltoeplitz/operator.hpp"
#include "ltoeplitz/spectral.hpp"

namespace ltoeplitz {

struct CheckReport {
  std::string check_name;
  bool passed = false;
  std::map<std::string, double> residuals;
  std::map<std::string, double> budget;
  std::string detail;
};

/// max |<T(chi xi), chi eta> - lambda(chi) <T xi, eta>| over window triples.
[[nodiscard]] CheckReport check_defining_relation(const LambdaToeplitz& op, const TruncationWindow& window,
                                                  double tolerance = 1e-12);
/// Same check on an arbitrary section, e.g. one with an injected fault.
[[nodiscard]] CheckReport check_defining_relation(const FiniteSection& section, const GroupPoint& lambda,
                                                  double tolerance = 1e-12);

/// sigma_max over nested windows: nondecreasing, at most sup|phi_lambda| + 1e-9,
/// and within `max_relative_gap` of it on the last window.
[[nodiscard]] CheckReport check_norm_identity(const LambdaToeplitz& op,
                                              const std::vector<TruncationWindow>& windows,
                                              double max_relative_gap);

/// S^k against U^k T_{phi_lambda o tau^{k-1}} ... T_{phi_lambda}, compared on
/// the columns whose k-step reach stays inside the window. Analytic symbols
/// are also compared against the iterated weighted-shift form.
[[nodiscard]] CheckReport check_power_factorization(const LambdaToeplitz& op, const TruncationWindow& window,
                                                    unsigned k, double tolerance = 1e-10);

/// Winding number of a d = 1 Laurent polynomial from the roots of its
/// numerator polynomial: zeros in the unit disk minus the pole order at 0.
[[nodiscard]] std::int64_t winding_by_root_count(const Symbol& phi);

struct IndexCase {
  std::complex<double> mu;
  std::optional<std::int64_t> expected;
};

/// Fredholm indices at each mu: the winding of Phi_lambda - mu^q by argument
/// tracking and by an independent route, divisibility by q, and invariance
/// under mu -> lambda(chi0)^{-k} mu.
[[nodiscard]] CheckReport check_index_suite(const LambdaToeplitz& op, const std::vector<IndexCase>& cases,
                                            std::int64_t q, const Character& chi0);

enum class ProbeExpectation { OnSpectrum, OffSpectrum };

struct ProbeSpec {
  std::complex<double> mu;
  ProbeExpectation expectation = ProbeExpectation::OnSpectrum;
  double threshold = 0.0;  // ceiling for the last value when on, floor for every value when off
};

struct ShapeCase {
  std::string name;
  LambdaToeplitz op;
  std::string expected_variant;
  std::optional<double> expected_radius;
  double radius_tolerance = 1e-6;
  std::vector<std::size_t> probe_sizes;
  std::vector<ProbeSpec> probes;
};

[[nodiscard]] CheckReport check_spectrum_shapes(const std::vector<ShapeCase>& cases);

/// |<T(chi xi), chi eta>| = |phi^(xi^{-1} eta)| for every window pair.
[[nodiscard]] CheckReport check_noncompactness(const LambdaToeplitz& op, const TruncationWindow& window,
                                               double relative_tolerance = 1e-14);

struct NegativeControlOptions {
  std::size_t resolution = kDefaultCurveResolution;
  double curve_tolerance = 1e-3;
  double min_mismatch = 0.1;
  std::vector<std::size_t> probe_sizes = {64, 128, 256};
  double probe_ceiling = 0.05;
  double probe_floor = 0.2;
};

/// The z + 2 counterexample: with lambda = 1 and q = 2 the root-lift
/// construction misses the true spectra; with lambda = -1 it applies.
[[nodiscard]] CheckReport check_negative_control(const NegativeControlOptions& options = {});

/// rotation_index against brute-force enumeration for every chi in X_+ of the
/// cube [-bound, bound]^d.
[[nodiscard]] CheckReport check_rotation_index_oracle(const GroupSpec& spec, std::int64_t bound,
                                                      std::int64_t oracle_bound);

struct RadiusCase {
  std::string name;
  LambdaToeplitz op;
  double expected = 0.0;
  double tolerance = 1e-6;
  std::size_t gelfand_window = 0;  // 0 skips the finite-section estimate
  std::vector<unsigned> gelfand_powers;
  double gelfand_relative_tolerance = 0.1;
};

[[nodiscard]] CheckReport check_spectral_radius(const std::vector<RadiusCase>& cases);

}  // namespace ltoeplitz

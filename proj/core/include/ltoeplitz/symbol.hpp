// SPDX-License-Identifier: Apache-2.0
//
// Trigonometric-polynomial symbols on G and the scalar functionals the
// spectral results are phrased in: sup-norms, log-means and windings.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ltoeplitz/ordered_group.hpp"

namespace ltoeplitz {

/// A trigonometric polynomial phi = sum_chi c_chi chi over the dual group.
///
/// Coefficients with modulus below kPruneTolerance are dropped on insertion.
/// Evaluation uses the exponent coordinates, i.e. a RealEmbedded symbol is
/// evaluated on the d-torus through its lattice coordinates.
class Symbol {
 public:
  using Coefficients = std::map<Character, std::complex<double>>;

  static constexpr double kPruneTolerance = 1e-15;

  explicit Symbol(GroupSpec spec);
  Symbol(GroupSpec spec, const Coefficients& coeffs);

  static Symbol constant(GroupSpec spec, std::complex<double> c);
  static Symbol monomial(GroupSpec spec, const Character& chi, std::complex<double> c = 1.0);

  [[nodiscard]] const GroupSpec& group() const { return spec_; }
  [[nodiscard]] const Coefficients& coefficients() const { return coeffs_; }
  [[nodiscard]] std::complex<double> coefficient(const Character& chi) const;
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  /// Adds c to the coefficient at chi, pruning the result.
  void add(const Character& chi, std::complex<double> c);
  /// Overwrites the coefficient at chi, pruning the result.
  void set(const Character& chi, std::complex<double> c);

  /// Support contained in X_+ (phi in H^infinity).
  [[nodiscard]] bool is_analytic() const;
  [[nodiscard]] Symbol analytic_part() const;
  [[nodiscard]] Symbol coanalytic_part() const;

  /// Largest |exponent| appearing at `coordinate`.
  [[nodiscard]] std::int64_t degree(std::size_t coordinate) const;
  [[nodiscard]] std::int64_t max_degree() const;

  /// phi at the torus point with coordinates theta (each in turns, [0,1)).
  [[nodiscard]] std::complex<double> operator()(std::span<const double> theta) const;
  /// One-dimensional shorthand.
  [[nodiscard]] std::complex<double> at(double theta) const;

  /// The complex conjugate function: coefficient conj(c_chi) at chi^{-1}.
  [[nodiscard]] Symbol conjugate() const;

  Symbol& operator+=(const Symbol& other);
  Symbol& operator-=(const Symbol& other);
  Symbol& operator*=(std::complex<double> scalar);
  friend Symbol operator+(Symbol a, const Symbol& b) { return a += b; }
  friend Symbol operator-(Symbol a, const Symbol& b) { return a -= b; }
  friend Symbol operator*(Symbol a, std::complex<double> s) { return a *= s; }
  friend Symbol operator*(std::complex<double> s, Symbol a) { return a *= s; }
  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  void check_same_group(const Symbol& other) const;

  GroupSpec spec_;
  Coefficients coeffs_;
};

/// Max coefficient-wise distance between two symbols on the same group.
[[nodiscard]] double coefficient_distance(const Symbol& a, const Symbol& b);

/// phi_lambda: cone coefficients twisted by conj(lambda(chi)), others unchanged.
[[nodiscard]] Symbol modified_symbol(const Symbol& phi, const GroupPoint& lambda);

/// phi o tau^j with tau(x) = lambda^{-1} x, i.e. coefficients times conj(lambda(chi))^j.
[[nodiscard]] Symbol rotate_symbol(const Symbol& phi, const GroupPoint& lambda, std::int64_t j);

/// Pointwise product (coefficient convolution).
[[nodiscard]] Symbol multiply(const Symbol& phi, const Symbol& psi);

/// Phi_lambda = prod_{j<q} phi_lambda o tau^j.
[[nodiscard]] Symbol big_phi(const Symbol& phi, const GroupPoint& lambda, std::int64_t q);

/// Samples of a symbol on the tensor grid {k/M}^d, stored with the first
/// coordinate varying fastest. The resolution must satisfy M >= 2 deg + 1 in
/// every coordinate so that the samples determine the polynomial.
class SampledFunction {
 public:
  static SampledFunction sample(const Symbol& phi, std::size_t resolution);

  [[nodiscard]] std::size_t resolution() const { return resolution_; }
  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::span<const std::complex<double>> values() const { return values_; }
  [[nodiscard]] std::complex<double> at(std::span<const std::size_t> index) const;

 private:
  std::size_t resolution_ = 0;
  std::size_t dimension_ = 0;
  std::vector<std::complex<double>> values_;
};

/// sup |phi| to within 1e-6: grid maximum refined by local golden-section ascent.
[[nodiscard]] double sup_norm(const Symbol& phi);
/// min |phi| located the same way.
[[nodiscard]] double min_modulus(const Symbol& phi);

inline constexpr std::size_t kDefaultLogMeanResolution = 4096;
inline constexpr double kVanishingThreshold = 1e-13;

/// Integral of log|phi| against Haar measure by the tensor trapezoidal rule.
/// A resolution of 0 selects the default (4096 per coordinate, reduced for
/// d >= 3 to keep the grid at 2^24 samples). Throws SymbolVanishes when a
/// sample drops below kVanishingThreshold.
[[nodiscard]] double log_mean(const Symbol& phi, std::size_t resolution = 0);

struct WindingOptions {
  std::uint64_t seed = 0x5eedULL;  // slice coordinates for d >= 2
  std::size_t max_samples = std::size_t{1} << 20;
};

/// Winding numbers of phi along each coordinate loop, as a character.
/// For d >= 2 the loops are taken at three seeded generic slices which must agree.
[[nodiscard]] Character winding_character(const Symbol& phi, const WindingOptions& options = {});

/// ind(phi): the rotation index of the winding character, absent when that
/// character has no index.
[[nodiscard]] std::optional<std::int64_t> winding_index(const Symbol& phi,
                                                        const WindingOptions& options = {});

struct InvertibilityReport {
  bool in_c_inv = false;             // nonvanishing on G
  std::optional<bool> in_a_inv;      // invertible in A(G); only decided for d = 1 analytic symbols
};

[[nodiscard]] InvertibilityReport invertibility_report(const Symbol& phi);

}  // namespace ltoeplitz

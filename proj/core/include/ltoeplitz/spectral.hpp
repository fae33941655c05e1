// SPDX-License-Identifier: Apache-2.0
//
// Spectra, essential spectra, Fredholm indices and spectral radii, from the
// closed forms where they apply and from resolvent probes on finite sections
// as numerical evidence.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ltoeplitz/operator.hpp"
#include "ltoeplitz/symbol.hpp"

namespace ltoeplitz {

using Points = std::vector<std::complex<double>>;

class SpectrumDescriptor;

/// A sampled closed curve.
struct Curve {
  Points samples;
};
/// {|mu| = radius}.
struct Circle {
  double radius = 0.0;
};
/// {|mu| <= radius}.
struct Disk {
  double radius = 0.0;
};
/// A sampled closed curve together with every point it winds around.
struct FilledCurve {
  Points boundary;
};
/// {mu : mu^q in base}.
struct RootLift {
  std::int64_t q = 1;
  std::shared_ptr<const SpectrumDescriptor> base;
};
struct PointCloud {
  Points points;
};

class SpectrumDescriptor {
 public:
  using Variant = std::variant<Curve, Circle, Disk, FilledCurve, RootLift, PointCloud>;

  SpectrumDescriptor(Variant value);  // NOLINT(google-explicit-constructor)
  template <class T>
    requires(!std::is_same_v<std::remove_cvref_t<T>, SpectrumDescriptor> &&
             !std::is_same_v<std::remove_cvref_t<T>, Variant> && std::is_constructible_v<Variant, T &&>)
  SpectrumDescriptor(T&& alternative)  // NOLINT(google-explicit-constructor)
      : SpectrumDescriptor(Variant(std::forward<T>(alternative))) {}

  [[nodiscard]] const Variant& value() const { return value_; }
  [[nodiscard]] std::string_view variant_name() const;

  template <class T>
  [[nodiscard]] bool holds() const {
    return std::holds_alternative<T>(value_);
  }
  template <class T>
  [[nodiscard]] const T& as() const {
    return std::get<T>(value_);
  }

 private:
  Variant value_;
};

[[nodiscard]] SpectrumDescriptor root_lift(std::int64_t q, SpectrumDescriptor base);

/// phi(e^{2 pi i k / resolution}) for k = 0 .. resolution-1; d = 1 only.
[[nodiscard]] Points sample_curve(const Symbol& phi, std::size_t resolution);

inline constexpr std::size_t kDefaultCurveResolution = 8192;
inline constexpr std::size_t kDefaultRegionGrid = 128;

/// Point samples of a descriptor. Curves and circles give `resolution`
/// points; regions add a `region_grid` x `region_grid` lattice of interior
/// points; a root lift emits all q roots of every base sample.
[[nodiscard]] Points sample_points(const SpectrumDescriptor& desc,
                                   std::size_t resolution = kDefaultCurveResolution,
                                   std::size_t region_grid = kDefaultRegionGrid);

/// Membership up to distance `tol` (scaled through the q-th power for root lifts).
[[nodiscard]] bool contains(const SpectrumDescriptor& desc, std::complex<double> mu, double tol);

/// Winding number of a closed polyline around a point.
[[nodiscard]] std::int64_t polygon_winding(const Points& polygon, std::complex<double> mu);

[[nodiscard]] double hausdorff_distance(const Points& a, const Points& b);

/// Hausdorff distance between a point set and its rotation by `factor`.
[[nodiscard]] double check_circularity(const Points& points, std::complex<double> factor);

/// Closed-form essential spectrum.
///
/// For G = T, analytic phi and lambda of finite order q (primitive at the
/// generator) this is the root lift of the curve Phi_lambda(T). For a generator
/// lambda and phi invertible in A(G) it is the circle of radius
/// exp(integral of log|phi|). Anything else throws NotApplicable.
[[nodiscard]] SpectrumDescriptor essential_spectrum(const LambdaToeplitz& op,
                                                    std::size_t resolution = kDefaultCurveResolution);

/// Closed-form spectrum: a root lift of the filled curve Phi_lambda(T) in the
/// finite-order case, Circle or Disk of the spectral radius for a generator.
[[nodiscard]] SpectrumDescriptor full_spectrum(const LambdaToeplitz& op,
                                               std::size_t resolution = kDefaultCurveResolution);

/// Ind(T - mu) = -ind(Phi_lambda - mu^q) / q. Empty when the winding character
/// has no rotation index (T - mu is not Fredholm).
[[nodiscard]] std::optional<std::int64_t> fredholm_index(const LambdaToeplitz& op,
                                                         std::complex<double> mu, std::int64_t q,
                                                         const Character& chi0,
                                                         const WindingOptions& options = {});

/// exp(integral of log|phi| dm) for analytic phi and a generator lambda.
[[nodiscard]] double spectral_radius(const LambdaToeplitz& op, std::size_t resolution = 0);

/// ||S^k||^{1/k} for the finite section S on `window`; analytic phi only.
[[nodiscard]] double spectral_radius_gelfand(const LambdaToeplitz& op,
                                             const TruncationWindow& window, unsigned k);

struct ResolventProbe {
  std::complex<double> mu;
  std::vector<std::size_t> window_sizes;
  std::vector<double> min_singular_values;
};

/// sigma_min(S_N - mu I) over leading windows of each size. Decay toward zero
/// is evidence that mu is in the spectrum; a stable floor is evidence it is not.
[[nodiscard]] ResolventProbe resolvent_probe(const LambdaToeplitz& op, std::complex<double> mu,
                                             const std::vector<std::size_t>& window_sizes);

}  // namespace ltoeplitz

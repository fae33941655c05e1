// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ltoeplitz/error.hpp"
#include "ltoeplitz/linalg.hpp"

namespace ltoeplitz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double segment_distance(std::complex<double> p, std::complex<double> a, std::complex<double> b) {
  const std::complex<double> ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double polyline_distance(const Points& poly, std::complex<double> mu) {
  if (poly.size() == 1) return std::abs(mu - poly.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, segment_distance(mu, poly[i], poly[(i + 1) % poly.size()]));
  }
  return best;
}

// Interior lattice points of the region enclosed (with nonzero winding) by a polygon.
void append_region(const Points& boundary, std::size_t grid, Points& out) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& p : boundary) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  if (grid < 2 || xmax - xmin <= 0.0 || ymax - ymin <= 0.0) return;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = xmin + (xmax - xmin) * (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
    for (std::size_t j = 0; j < grid; ++j) {
      const double y = ymin + (ymax - ymin) * (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
      const std::complex<double> mu(x, y);
      if (polygon_winding(boundary, mu) != 0) out.push_back(mu);
    }
  }
}

Points circle_points(double radius, std::size_t resolution) {
  Points out(resolution);
  for (std::size_t k = 0; k < resolution; ++k) {
    out[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(resolution));
  }
  return out;
}

void require_resolution(std::size_t resolution) {
  if (resolution < 3) throw InvalidArgument("curve resolution must be at least 3");
}

struct FiniteOrderData {
  std::int64_t q;
  Symbol big;
};

// Hypotheses of the finite-order closed forms: G = T, analytic phi, lambda of
// order q that is primitive at the generator.
std::optional<FiniteOrderData> finite_order_case(const LambdaToeplitz& op) {
  const auto q = order_of_point(op.lambda());
  if (!q) return std::nullopt;
  if (op.group().dimension() != 1) {
    throw NotApplicable("closed-form essential spectrum is implemented for the circle group only (d = 1), got d = " +
                        std::to_string(op.group().dimension()));
  }
  if (!op.symbol().is_analytic()) throw NotApplicable("closed-form spectrum requires an analytic symbol");
  const auto zeta = smallest_positive(op.group());
  if (!zeta || !is_primitive_root_at(op.lambda(), *zeta, *q)) {
    throw NotApplicable("lambda is not a primitive root of unity at the generator");
  }
  return FiniteOrderData{*q, big_phi(op.symbol(), op.lambda(), *q)};
}

SpectrumDescriptor lift_if_needed(std::int64_t q, SpectrumDescriptor base) {
  if (q == 1) return base;
  return root_lift(q, std::move(base));
}

// Generator case: returns the radius and whether phi is invertible in A(G).
std::pair<double, bool> generator_case(const LambdaToeplitz& op) {
  if (!op.symbol().is_analytic()) throw NotApplicable("closed-form spectrum requires an analytic symbol");
  if (!is_probable_generator(op.lambda())) {
    throw NotApplicable("lambda is neither of finite order nor a generator of G");
  }
  const InvertibilityReport inv = invertibility_report(op.symbol());
  if (!inv.in_c_inv) throw NotApplicable("symbol vanishes on G, so it is not in C(G)^-1");
  if (!inv.in_a_inv) throw NotApplicable("invertibility in A(G) is only decided for d = 1 analytic symbols");
  return {std::exp(log_mean(op.symbol())), *inv.in_a_inv};
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors

SpectrumDescriptor::SpectrumDescriptor(Variant value) : value_(std::move(value)) {
  std::visit(Overloaded{
                 [](const Circle& c) {
                   if (!(c.radius >= 0.0)) throw InvalidArgument("circle radius must be nonnegative");
                 },
                 [](const Disk& c) {
                   if (!(c.radius >= 0.0)) throw InvalidArgument("disk radius must be nonnegative");
                 },
                 [](const RootLift& r) {
                   if (r.q < 1) throw InvalidArgument("root lift order must be positive");
                   if (!r.base) throw InvalidArgument("root lift needs a base descriptor");
                 },
                 [](const auto&) {},
             },
             value_);
}

std::string_view SpectrumDescriptor::variant_name() const {
  return std::visit(Overloaded{
                        [](const Curve&) { return std::string_view("Curve"); },
                        [](const Circle&) { return std::string_view("Circle"); },
                        [](const Disk&) { return std::string_view("Disk"); },
                        [](const FilledCurve&) { return std::string_view("FilledCurve"); },
                        [](const RootLift&) { return std::string_view("RootLift"); },
                        [](const PointCloud&) { return std::string_view("PointCloud"); },
                    },
                    value_);
}

SpectrumDescriptor root_lift(std::int64_t q, SpectrumDescriptor base) {
  return SpectrumDescriptor(RootLift{q, std::make_shared<const SpectrumDescriptor>(std::move(base))});
}

Points sample_curve(const Symbol& phi, std::size_t resolution) {
  if (phi.group().dimension() != 1) throw NotApplicable("curve sampling needs a symbol on the circle group");
  require_resolution(resolution);
  Points out(resolution);
  for (std::size_t k = 0; k < resolution; ++k) {
    out[k] = phi.at(static_cast<double>(k) / static_cast<double>(resolution));
  }
  return out;
}

Points sample_points(const SpectrumDescriptor& desc, std::size_t resolution, std::size_t region_grid) {
  require_resolution(resolution);
  return std::visit(
      Overloaded{
          [](const Curve& c) { return c.samples; },
          [&](const Circle& c) { return circle_points(c.radius, resolution); },
          [&](const Disk& c) {
            Points out = circle_points(c.radius, resolution);
            append_region(out, region_grid, out);
            return out;
          },
          [&](const FilledCurve& c) {
            Points out = c.boundary;
            append_region(c.boundary, region_grid, out);
            return out;
          },
          [&](const RootLift& r) {
            const Points base = sample_points(*r.base, resolution, region_grid);
            Points out;
            out.reserve(base.size() * static_cast<std::size_t>(r.q));
            const double qd = static_cast<double>(r.q);
            for (const auto& w : base) {
              const double mod = std::pow(std::abs(w), 1.0 / qd);
              const double arg = std::arg(w);
              for (std::int64_t j = 0; j < r.q; ++j) {
                out.push_back(std::polar(mod, (arg + kTwoPi * static_cast<double>(j)) / qd));
              }
            }
            return out;
          },
          [](const PointCloud& p) { return p.points; },
      },
      desc.value());
}

bool contains(const SpectrumDescriptor& desc, std::complex<double> mu, double tol) {
  return std::visit(Overloaded{
                        [&](const Curve& c) { return !c.samples.empty() && polyline_distance(c.samples, mu) <= tol; },
                        [&](const Circle& c) { return std::abs(std::abs(mu) - c.radius) <= tol; },
                        [&](const Disk& c) { return std::abs(mu) <= c.radius + tol; },
                        [&](const FilledCurve& c) {
                          if (c.boundary.empty()) return false;
                          return polyline_distance(c.boundary, mu) <= tol || polygon_winding(c.boundary, mu) != 0;
                        },
                        [&](const RootLift& r) {
                          const double scale = static_cast<double>(r.q) *
                                               std::pow(std::max(1.0, std::abs(mu)), static_cast<double>(r.q - 1));
                          return contains(*r.base, std::pow(mu, static_cast<int>(r.q)), tol * scale);
                        },
                        [&](const PointCloud& p) {
                          return std::any_of(p.points.begin(), p.points.end(),
                                             [&](auto z) { return std::abs(z - mu) <= tol; });
                        },
                    },
                    desc.value());
}

std::int64_t polygon_winding(const Points& polygon, std::complex<double> mu) {
  // Crossing count with orientation, exact for points off the polygon.
  std::int64_t w = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> a = polygon[i] - mu;
    const std::complex<double> b = polygon[(i + 1) % n] - mu;
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    if (a.imag() <= 0.0) {
      if (b.imag() > 0.0 && cross > 0.0) ++w;
    } else if (b.imag() <= 0.0 && cross < 0.0) {
      --w;
    }
  }
  return w;
}

double hausdorff_distance(const Points& a, const Points& b) {
  if (a.empty() || b.empty()) throw InvalidArgument("Hausdorff distance of an empty set");
  auto directed = [](const Points& from, Points to) {
    std::sort(to.begin(), to.end(), [](auto x, auto y) { return x.real() < y.real(); });
    double worst = 0.0;
    for (const auto& p : from) {
      const auto it = std::lower_bound(to.begin(), to.end(), p.real(),
                                       [](auto z, double x) { return z.real() < x; });
      double best = std::numeric_limits<double>::infinity();
      for (auto r = it; r != to.end() && r->real() - p.real() < best; ++r) best = std::min(best, std::abs(*r - p));
      for (auto l = it; l != to.begin();) {
        --l;
        if (p.real() - l->real() >= best) break;
        best = std::min(best, std::abs(*l - p));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

double check_circularity(const Points& points, std::complex<double> factor) {
  if (points.empty()) throw InvalidArgument("circularity of an empty set");
  Points rotated(points.size());
  std::transform(points.begin(), points.end(), rotated.begin(), [&](auto z) { return factor * z; });
  return hausdorff_distance(points, rotated);
}

// ---------------------------------------------------------------------------
// Closed forms

SpectrumDescriptor essential_spectrum(const LambdaToeplitz& op, std::size_t resolution) {
  if (auto fo = finite_order_case(op)) {
    return lift_if_needed(fo->q, Curve{sample_curve(fo->big, resolution)});
  }
  const auto [r, invertible] = generator_case(op);
  if (!invertible) {
    throw NotApplicable("essential spectrum is not given in closed form when phi is not invertible in A(G)");
  }
  return Circle{r};
}

SpectrumDescriptor full_spectrum(const LambdaToeplitz& op, std::size_t resolution) {
  if (auto fo = finite_order_case(op)) {
    return lift_if_needed(fo->q, FilledCurve{sample_curve(fo->big, resolution)});
  }
  const auto [r, invertible] = generator_case(op);
  if (invertible) return Circle{r};
  return Disk{r};
}

std::optional<std::int64_t> fredholm_index(const LambdaToeplitz& op, std::complex<double> mu, std::int64_t q,
                                           const Character& chi0, const WindingOptions& options) {
  if (q < 1) throw InvalidArgument("q must be positive");
  const auto order = order_of_point(op.lambda());
  if (!order) throw NotApplicable("lambda has infinite order");
  if (*order != q) {
    throw NotApplicable("lambda has order " + std::to_string(*order) + ", not " + std::to_string(q));
  }
  op.group().check_compatible(chi0);
  if (!is_primitive_root_at(op.lambda(), chi0, q)) {
    throw NotApplicable("lambda(chi0) is not a primitive root of unity of order " + std::to_string(q));
  }
  Symbol shifted = big_phi(op.symbol(), op.lambda(), q);
  shifted.add(Character{}, -std::pow(mu, static_cast<int>(q)));
  if (min_modulus(shifted) < 1e-10) {
    throw SymbolVanishes("Phi_lambda - mu^q vanishes on G: mu lies in the essential spectrum");
  }
  const auto w = rotation_index(winding_character(shifted, options), op.group());
  if (!w) return std::nullopt;
  if (*w % q != 0) {
    throw NumericalInconsistency("winding " + std::to_string(*w) + " is not divisible by q = " + std::to_string(q));
  }
  return -*w / q;
}

double spectral_radius(const LambdaToeplitz& op, std::size_t resolution) {
  if (!op.symbol().is_analytic()) throw NotApplicable("spectral radius formula requires an analytic symbol");
  if (!is_probable_generator(op.lambda())) throw NotApplicable("spectral radius formula requires a generator lambda");
  return std::exp(log_mean(op.symbol(), resolution));
}

double spectral_radius_gelfand(const LambdaToeplitz& op, const TruncationWindow& window, unsigned k) {
  if (k == 0) throw InvalidArgument("power must be positive");
  if (!op.symbol().is_analytic()) throw NotApplicable("Gelfand estimate requires an analytic symbol");
  const FiniteSection s = build_finite_section(op, window);
  return std::pow(sigma_max(matrix_power(s.matrix, k)), 1.0 / static_cast<double>(k));
}

ResolventProbe resolvent_probe(const LambdaToeplitz& op, std::complex<double> mu,
                               const std::vector<std::size_t>& window_sizes) {
  ResolventProbe probe{mu, window_sizes, {}};
  for (std::size_t i = 0; i < window_sizes.size(); ++i) {
    if (window_sizes[i] == 0) throw InvalidArgument("probe window sizes must be positive");
    if (i && window_sizes[i] <= window_sizes[i - 1]) throw InvalidArgument("probe window sizes must increase");
    const FiniteSection s = build_finite_section(op, TruncationWindow::leading(op.group(), window_sizes[i]));
    Matrix shifted = s.matrix;
    shifted.diagonal().array() -= mu;
    probe.min_singular_values.push_back(sigma_min(shifted));
  }
  return probe;
}

}  // namespace ltoeplitz

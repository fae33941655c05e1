// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "ltoeplitz/error.hpp"
#include "ltoeplitz/linalg.hpp"

namespace ltoeplitz {

namespace {

// idx[i * n + j] = position of w_i * w_j in the window, or -1.
std::vector<long> product_table(const TruncationWindow& w) {
  const std::size_t n = w.size();
  std::vector<long> table(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (auto k = w.index_of(w[i] * w[j])) {
        table[i * n + j] = static_cast<long>(*k);
        table[j * n + i] = static_cast<long>(*k);
      }
    }
  }
  return table;
}

// Classical Toeplitz compression: entry (row chi2, col chi1) = psi^(chi1^{-1} chi2).
Matrix classical_section(const Symbol& psi, const TruncationWindow& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      m(r, c) = psi.coefficient(w[static_cast<std::size_t>(c)].inverse() * w[static_cast<std::size_t>(r)]);
    }
  }
  return m;
}

// True when every k-step image of chi under the symbol's support that stays in
// X_+ also stays in the window.
bool column_is_interior(const Character& chi, const Symbol& phi, const TruncationWindow& w, unsigned k) {
  std::set<Character> frontier{chi};
  for (unsigned step = 0; step < k; ++step) {
    std::set<Character> next;
    for (const auto& x : frontier) {
      for (const auto& [s, c] : phi.coefficients()) {
        Character y = x * s;
        if (!w.group().is_positive(y)) continue;
        if (!w.index_of(y)) return false;
        next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

void fail(CheckReport& r, const std::string& why) {
  r.passed = false;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += why;
}

template <class F>
void guarded(CheckReport& r, const std::string& label, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    fail(r, label + ": " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport check_defining_relation(const FiniteSection& section, const GroupPoint& lambda, double tolerance) {
  CheckReport r{"defining_relation", true, {}, {}, {}};
  const TruncationWindow& w = section.window;
  lambda.check_compatible(w.group());
  const std::size_t n = w.size();
  const auto table = product_table(w);
  std::vector<std::complex<double>> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = evaluate(lambda, w[i]);

  double worst = 0.0;
  std::uint64_t triples = 0;
  const auto& m = section.matrix;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      const long col = table[i * n + a];
      if (col < 0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const long row = table[i * n + b];
        if (row < 0) continue;
        ++triples;
        const auto lhs = m(row, col);
        const auto rhs = weight[i] * m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  r.residuals["max_residual"] = worst;
  r.budget["window_size"] = static_cast<double>(n);
  r.budget["triples"] = static_cast<double>(triples);
  if (!(worst < tolerance)) fail(r, "residual " + std::to_string(worst) + " exceeds tolerance");
  return r;
}

CheckReport check_defining_relation(const LambdaToeplitz& op, const TruncationWindow& window, double tolerance) {
  return check_defining_relation(build_finite_section(op, window), op.lambda(), tolerance);
}

CheckReport check_norm_identity(const LambdaToeplitz& op, const std::vector<TruncationWindow>& windows,
                                double max_relative_gap) {
  CheckReport r{"norm_identity", true, {}, {}, {}};
  if (windows.empty()) throw InvalidArgument("norm identity needs at least one window");
  const double sup = sup_norm(op.modified_symbol());
  double prev = 0.0;
  double max_decrease = 0.0;
  double max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (i) {
      for (const auto& chi : windows[i - 1].characters()) {
        if (!windows[i].index_of(chi)) throw InvalidArgument("norm identity windows must be nested");
      }
    }
    const double s = sigma_max(build_finite_section(op, windows[i]).matrix);
    r.residuals["sigma_max[" + std::to_string(windows[i].size()) + "]"] = s;
    if (i) max_decrease = std::max(max_decrease, prev - s);
    max_excess = std::max(max_excess, s - sup);
    prev = s;
  }
  const double gap = sup > 0.0 ? (sup - prev) / sup : 0.0;
  r.residuals["sup_norm"] = sup;
  r.residuals["max_decrease"] = max_decrease;
  r.residuals["max_excess"] = max_excess;
  r.residuals["final_relative_gap"] = gap;
  r.budget["largest_window"] = static_cast<double>(windows.back().size());
  r.budget["max_relative_gap"] = max_relative_gap;
  if (max_decrease > 1e-12 * std::max(1.0, sup)) fail(r, "sigma_max decreased along nested windows");
  if (max_excess > 1e-9) fail(r, "sigma_max exceeds sup norm of the modified symbol");
  if (gap > max_relative_gap) fail(r, "final gap " + std::to_string(gap) + " above frozen threshold");
  return r;
}

CheckReport check_power_factorization(const LambdaToeplitz& op, const TruncationWindow& window, unsigned k,
                                      double tolerance) {
  CheckReport r{"power_factorization", true, {}, {}, {}};
  if (k == 0) throw InvalidArgument("power must be positive");
  const std::size_t n = window.size();
  const Matrix lhs = matrix_power(build_finite_section(op, window).matrix, k);

  const Symbol phi_lambda = op.modified_symbol();
  Matrix rhs = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (unsigned j = 0; j < k; ++j) rhs = classical_section(rotate_symbol(phi_lambda, op.lambda(), j), window) * rhs;
  for (std::size_t i = 0; i < n; ++i) {
    rhs.row(static_cast<Eigen::Index>(i)) *= evaluate(op.lambda(), window[i].pow(k));
  }

  std::vector<std::size_t> interior;
  for (std::size_t c = 0; c < n; ++c) {
    if (column_is_interior(window[c], op.symbol(), window, k)) interior.push_back(c);
  }
  if (interior.empty()) throw InvalidArgument("window too small: no column has its k-step reach inside it");

  double worst = 0.0;
  for (std::size_t c : interior) {
    const auto col = static_cast<Eigen::Index>(c);
    worst = std::max(worst, (lhs.col(col) - rhs.col(col)).cwiseAbs().maxCoeff());
  }
  r.residuals["factorization"] = worst;
  if (!(worst < tolerance)) fail(r, "factorization residual " + std::to_string(worst));

  if (op.symbol().is_analytic()) {
    double shift = 0.0;
    for (std::size_t c : interior) {
      Symbol f = Symbol::monomial(op.group(), window[c]);
      for (unsigned j = 0; j < k; ++j) f = apply_weighted_shift(op, f);
      Vector col = lhs.col(static_cast<Eigen::Index>(c));
      for (const auto& [chi, v] : f.coefficients()) {
        if (auto i = window.index_of(chi)) {
          col(static_cast<Eigen::Index>(*i)) -= v;
        } else {
          shift = std::max(shift, std::abs(v));
        }
      }
      shift = std::max(shift, col.cwiseAbs().maxCoeff());
    }
    r.residuals["weighted_shift"] = shift;
    if (!(shift < tolerance)) fail(r, "weighted-shift residual " + std::to_string(shift));
  }
  r.budget["window_size"] = static_cast<double>(n);
  r.budget["k"] = k;
  r.budget["interior_columns"] = static_cast<double>(interior.size());
  return r;
}

std::int64_t winding_by_root_count(const Symbol& phi) {
  if (phi.group().dimension() != 1) throw NotApplicable("root counting needs a symbol on the circle group");
  if (phi.is_zero()) throw SymbolVanishes("zero symbol has no winding number");
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [chi, c] : phi.coefficients()) {
    const std::int64_t e = chi.exponent(0);
    lo = first ? e : std::min(lo, e);
    hi = first ? e : std::max(hi, e);
    first = false;
  }
  // p(z) = z^{-lo} phi(z) has degree hi - lo and no root at 0.
  const std::int64_t degree = hi - lo;
  const std::int64_t zeros_at_origin = std::max<std::int64_t>(lo, 0);
  const std::int64_t pole_order = std::max<std::int64_t>(-lo, 0);
  if (degree == 0) return zeros_at_origin - pole_order;
  const auto dn = static_cast<Eigen::Index>(degree);
  const std::complex<double> lead = phi.coefficient(Character::unit(0, hi));
  Matrix companion = Matrix::Zero(dn, dn);
  for (Eigen::Index i = 1; i < dn; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < dn; ++i) {
    companion(i, dn - 1) = -phi.coefficient(Character::unit(0, lo + static_cast<std::int64_t>(i))) / lead;
  }
  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalInconsistency("companion eigenvalues did not converge");
  std::int64_t inside = 0;
  for (Eigen::Index i = 0; i < dn; ++i) {
    const double m = std::abs(solver.eigenvalues()(i));
    if (std::abs(m - 1.0) < 1e-8) throw SymbolVanishes("a root lies on the unit circle");
    if (m < 1.0) ++inside;
  }
  return inside + zeros_at_origin - pole_order;
}

CheckReport check_index_suite(const LambdaToeplitz& op, const std::vector<IndexCase>& cases, std::int64_t q,
                              const Character& chi0) {
  CheckReport r{"index_suite", true, {}, {}, {}};
  const Symbol big = big_phi(op.symbol(), op.lambda(), q);
  const std::complex<double> factor = std::conj(evaluate(op.lambda(), chi0));
  double divisibility = 0, routes = 0, invariance = 0, expectation = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto mu = cases[i].mu;
    const std::string tag = "mu[" + std::to_string(i) + "]";
    guarded(r, tag, [&] {
      Symbol shifted = big;
      shifted.add(Character{}, -std::pow(mu, static_cast<int>(q)));
      const Character wchar = winding_character(shifted);
      const auto direct = rotation_index(wchar, op.group());
      if (op.group().dimension() == 1) {
        if (winding_by_root_count(shifted) != *direct) {
          ++routes;
          fail(r, tag + ": argument tracking and root count disagree");
        }
      } else if (!(winding_character(shifted, WindingOptions{0x9e3779b97f4a7c15ULL}) == wchar)) {
        ++routes;
        fail(r, tag + ": windings from independent slices disagree");
      }
      if (direct && *direct % q != 0) {
        ++divisibility;
        fail(r, tag + ": winding not divisible by q");
        return;
      }
      const auto index = fredholm_index(op, mu, q, chi0);
      r.residuals[tag + ".index"] = index ? static_cast<double>(*index) : std::nan("");
      if (cases[i].expected && index != cases[i].expected) {
        ++expectation;
        fail(r, tag + ": index differs from expected " + std::to_string(*cases[i].expected));
      }
      std::complex<double> rotated = mu;
      for (std::int64_t k = 1; k < std::max<std::int64_t>(q, 2); ++k) {
        rotated *= factor;
        if (fredholm_index(op, rotated, q, chi0) != index) {
          ++invariance;
          fail(r, tag + ": index changes under rotation by lambda(chi0)^-" + std::to_string(k));
        }
      }
    });
  }
  r.residuals["divisibility_failures"] = divisibility;
  r.residuals["route_disagreements"] = routes;
  r.residuals["invariance_failures"] = invariance;
  r.residuals["expectation_failures"] = expectation;
  r.budget["q"] = static_cast<double>(q);
  r.budget["cases"] = static_cast<double>(cases.size());
  return r;
}

CheckReport check_spectrum_shapes(const std::vector<ShapeCase>& cases) {
  CheckReport r{"spectrum_shapes", true, {}, {}, {}};
  constexpr std::size_t kResolution = 2048;
  for (const auto& sc : cases) {
    guarded(r, sc.name, [&] {
      const SpectrumDescriptor desc = full_spectrum(sc.op);
      if (desc.variant_name() != sc.expected_variant) {
        fail(r, sc.name + ": expected " + sc.expected_variant + ", got " + std::string(desc.variant_name()));
      }
      Points pts;
      double circ_tol = 1e-9;
      if (desc.holds<Circle>() || desc.holds<Disk>()) {
        const double radius = desc.holds<Circle>() ? desc.as<Circle>().radius : desc.as<Disk>().radius;
        const double exact = spectral_radius(sc.op);
        r.residuals[sc.name + ".radius"] = radius;
        r.residuals[sc.name + ".radius_vs_formula"] = std::abs(radius - exact);
        if (radius != exact) fail(r, sc.name + ": descriptor radius differs from spectral_radius");
        if (sc.expected_radius) {
          const double err = std::abs(radius - *sc.expected_radius);
          r.residuals[sc.name + ".radius_error"] = err;
          if (!(err <= sc.radius_tolerance)) fail(r, sc.name + ": radius off by " + std::to_string(err));
        }
        pts = sample_points(Circle{radius}, kResolution);
        circ_tol = 2.0 * std::numbers::pi * radius / static_cast<double>(kResolution) + 1e-12;
      } else {
        pts = sample_points(desc, kResolution, 64);
      }
      const auto zeta = smallest_positive(sc.op.group());
      const Character gen = zeta ? *zeta : Character::unit(0);
      const double circ = check_circularity(pts, evaluate(sc.op.lambda(), gen));
      r.residuals[sc.name + ".circularity"] = circ;
      if (!(circ <= circ_tol)) fail(r, sc.name + ": spectrum not invariant under lambda(chi)");

      for (std::size_t i = 0; i < sc.probes.size(); ++i) {
        const auto& p = sc.probes[i];
        const auto probe = resolvent_probe(sc.op, p.mu, sc.probe_sizes);
        const auto& v = probe.min_singular_values;
        const std::string tag = sc.name + ".probe[" + std::to_string(i) + "]";
        if (p.expectation == ProbeExpectation::OnSpectrum) {
          r.residuals[tag + ".last"] = v.back();
          // Nested sections cannot raise sigma_min; the slack only absorbs SVD rounding.
          constexpr double kProbeSlack = 1e-9;
          if (!(v.back() < p.threshold) || v.back() > v.front() * (1.0 + kProbeSlack)) fail(r, tag + ": no decay");
        } else {
          const double floor = *std::min_element(v.begin(), v.end());
          r.residuals[tag + ".floor"] = floor;
          if (!(floor > p.threshold)) fail(r, tag + ": floor too low");
        }
      }
    });
  }
  r.budget["cases"] = static_cast<double>(cases.size());
  return r;
}

CheckReport check_noncompactness(const LambdaToeplitz& op, const TruncationWindow& window,
                                 double relative_tolerance) {
  CheckReport r{"noncompactness", true, {}, {}, {}};
  const FiniteSection s = build_finite_section(op, window);
  const std::size_t n = window.size();
  double worst = 0.0;
  std::map<Character, std::size_t> seen;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t row = 0; row < n; ++row) {
      const Character diff = window[c].inverse() * window[row];
      const double expected = std::abs(op.symbol().coefficient(diff));
      const double got = std::abs(s.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)));
      worst = std::max(worst, std::abs(got - expected) / std::max(1.0, expected));
      if (expected != 0.0) ++seen[diff];
    }
  }
  std::size_t min_pairs = seen.empty() ? 0 : n;
  for (const auto& [chi, count] : seen) min_pairs = std::min(min_pairs, count);
  r.residuals["max_relative_deviation"] = worst;
  r.residuals["min_pairs_per_coefficient"] = static_cast<double>(min_pairs);
  r.budget["window_size"] = static_cast<double>(n);
  if (!(worst <= relative_tolerance)) fail(r, "entry modulus varies along a diagonal");
  if (!op.symbol().is_zero() && seen.size() != op.symbol().size()) {
    fail(r, "window does not expose every symbol coefficient");
  }
  return r;
}

CheckReport check_negative_control(const NegativeControlOptions& o) {
  CheckReport r{"negative_control", true, {}, {}, {}};
  const GroupSpec circle = GroupSpec::lattice_lex(1);
  Symbol phi = Symbol::monomial(circle, Character::unit(0));
  phi.add(Character{}, 2.0);
  guarded(r, "counterexample", [&] {
    const LambdaToeplitz classical(GroupPoint::identity(circle), phi);
    const SpectrumDescriptor ess = essential_spectrum(classical, o.resolution);
    Points exact(o.resolution);
    for (std::size_t k = 0; k < o.resolution; ++k) {
      exact[k] = 2.0 + std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                            static_cast<double>(o.resolution));
    }
    const double curve_err = hausdorff_distance(sample_points(ess, o.resolution), exact);
    r.residuals["essential_curve_error"] = curve_err;
    if (!(curve_err < o.curve_tolerance)) fail(r, "essential spectrum is not the circle |mu - 2| = 1");

    const Symbol big = big_phi(phi, classical.lambda(), 2);
    Symbol square(circle);
    square.add(Character::unit(0, 2), 1.0);
    square.add(Character::unit(0, 1), 4.0);
    square.add(Character{}, 4.0);
    r.residuals["big_phi_coefficient_error"] = coefficient_distance(big, square);
    if (!(big == square)) fail(r, "Phi_lambda is not (z + 2)^2");

    const Points true_curve = sample_curve(phi, o.resolution);
    const double curve_gap = hausdorff_distance(
        sample_points(root_lift(2, Curve{sample_curve(big, o.resolution)}), o.resolution), true_curve);
    constexpr std::size_t kRegionBoundary = 2048;
    const double disk_gap = hausdorff_distance(
        sample_points(root_lift(2, FilledCurve{sample_curve(big, kRegionBoundary)}), kRegionBoundary, 64),
        sample_points(FilledCurve{sample_curve(phi, kRegionBoundary)}, kRegionBoundary, 64));
    r.residuals["lifted_curve_mismatch"] = curve_gap;
    r.residuals["lifted_disk_mismatch"] = disk_gap;
    if (!(curve_gap > o.min_mismatch)) fail(r, "lifted curve unexpectedly matches the essential spectrum");
    if (!(disk_gap > o.min_mismatch)) fail(r, "lifted region unexpectedly matches the spectrum");

    // -3 is in the lifted set but the operator minus -3 stays invertible.
    const auto probe = resolvent_probe(classical, -3.0, o.probe_sizes);
    const double floor = *std::min_element(probe.min_singular_values.begin(), probe.min_singular_values.end());
    r.residuals["spurious_point_floor"] = floor;
    if (!(floor > o.probe_floor)) fail(r, "probe at -3 decays");
  });
  guarded(r, "positive twin", [&] {
    const LambdaToeplitz twin(GroupPoint::torus({Angle::rational(1, 2)}), phi);
    const SpectrumDescriptor ess = essential_spectrum(twin, o.resolution);
    if (!ess.holds<RootLift>()) throw NumericalInconsistency("expected a root lift for lambda = -1");
    const Symbol big = big_phi(phi, twin.lambda(), 2);
    // q-th powers of the lift against the curve samples, in both directions.
    Points squared = sample_points(ess, o.resolution);
    for (auto& mu : squared) mu *= mu;
    const double lift_err = hausdorff_distance(squared, sample_curve(big, o.resolution));
    r.residuals["twin_lift_consistency"] = lift_err;
    if (!(lift_err < o.curve_tolerance)) fail(r, "squared lift points leave the Phi_lambda curve");
    const double circ = check_circularity(sample_points(ess, o.resolution), -1.0);
    r.residuals["twin_circularity"] = circ;
    if (!(circ < 1e-9)) fail(r, "lifted set not symmetric under -1");
    const auto probe = resolvent_probe(twin, std::sqrt(3.0), o.probe_sizes);
    const auto& v = probe.min_singular_values;
    r.residuals["twin_probe_last"] = v.back();
    if (!(v.back() < o.probe_ceiling) || v.back() > v.front()) fail(r, "probe at sqrt(3) does not decay");
  });
  r.budget["resolution"] = static_cast<double>(o.resolution);
  r.budget["largest_probe_window"] = static_cast<double>(o.probe_sizes.back());
  return r;
}

CheckReport check_rotation_index_oracle(const GroupSpec& spec, std::int64_t bound, std::int64_t oracle_bound) {
  CheckReport r{"rotation_index", true, {}, {}, {}};
  const auto chars = ExponentBox::cube(spec.dimension(), bound).positive_elements(spec);
  double finite = 0, absent = 0, mismatches = 0;
  std::string first_mismatch;
  for (const auto& chi : chars) {
    const auto formula = rotation_index(chi, spec);
    const BoundedCount oracle = rotation_index_bruteforce(chi, spec, oracle_bound);
    const bool agree = formula ? (oracle.count && *oracle.count == *formula) : oracle.exceeds_bound();
    if (!agree) {
      ++mismatches;
      if (first_mismatch.empty()) first_mismatch = chi.to_string(spec.dimension());
    } else if (formula) {
      ++finite;
    } else {
      ++absent;
    }
  }
  r.residuals["mismatches"] = mismatches;
  r.residuals["finite_agreements"] = finite;
  r.residuals["absent_agreements"] = absent;
  r.budget["dimension"] = static_cast<double>(spec.dimension());
  r.budget["bound"] = static_cast<double>(bound);
  r.budget["oracle_bound"] = static_cast<double>(oracle_bound);
  if (mismatches > 0) fail(r, "formula and enumeration disagree, first at " + first_mismatch);
  return r;
}

CheckReport check_spectral_radius(const std::vector<RadiusCase>& cases) {
  CheckReport r{"spectral_radius", true, {}, {}, {}};
  for (const auto& rc : cases) {
    guarded(r, rc.name, [&] {
      const double radius = spectral_radius(rc.op);
      const double err = std::abs(radius - rc.expected);
      r.residuals[rc.name + ".radius_error"] = err;
      if (!(err <= rc.tolerance)) fail(r, rc.name + ": quadrature radius off by " + std::to_string(err));
      if (rc.gelfand_window == 0) return;
      const auto window = TruncationWindow::leading(rc.op.group(), rc.gelfand_window);
      for (unsigned k : rc.gelfand_powers) {
        const double g = spectral_radius_gelfand(rc.op, window, k);
        const double rel = (g - radius) / radius;
        r.residuals[rc.name + ".gelfand[" + std::to_string(k) + "].relative"] = rel;
        if (!(std::abs(rel) <= rc.gelfand_relative_tolerance)) {
          fail(r, rc.name + ": Gelfand estimate at k = " + std::to_string(k) + " is off by " + std::to_string(rel));
        }
      }
    });
  }
  r.budget["cases"] = static_cast<double>(cases.size());
  return r;
}

}  // namespace ltoeplitz

// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ltoeplitz/error.hpp"

namespace ltoeplitz {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;
constexpr double kPi = std::numbers::pi;

std::complex<double> unit_phase(long double turns) {
  const long double a = kTwoPiL * (turns - std::floor(turns));
  return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

std::vector<std::complex<double>> twiddles(std::size_t m) {
  std::vector<std::complex<double>> tw(m);
  for (std::size_t k = 0; k < m; ++k) {
    tw[k] = unit_phase(static_cast<long double>(k) / static_cast<long double>(m));
  }
  return tw;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

struct DenseTerm {
  std::vector<std::int64_t> exponents;
  std::complex<double> coeff;
};

std::vector<DenseTerm> dense_terms(const Symbol& phi) {
  std::vector<DenseTerm> terms;
  const std::size_t d = phi.group().dimension();
  for (const auto& [chi, c] : phi.coefficients()) terms.push_back({chi.dense(d), c});
  return terms;
}

// Visits phi at every point of the grid {k/m}^d, first coordinate fastest.
template <class F>
void for_each_grid_value(const Symbol& phi, std::size_t m, F&& visit) {
  const std::size_t d = phi.group().dimension();
  const auto terms = dense_terms(phi);
  const auto tw = twiddles(m);
  const auto mm = static_cast<std::int64_t>(m);
  auto reduce = [mm](std::int64_t x) {
    x %= mm;
    return x < 0 ? x + mm : x;
  };
  std::vector<std::int64_t> step(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) step[t] = reduce(terms[t].exponents[0]);

  std::vector<std::size_t> outer(d, 0);  // coordinates 1..d-1
  std::vector<std::int64_t> idx(terms.size());
  while (true) {
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::int64_t base = 0;
      for (std::size_t j = 1; j < d; ++j) {
        base = reduce(base + reduce(terms[t].exponents[j]) * static_cast<std::int64_t>(outer[j]));
      }
      idx[t] = base;
    }
    for (std::size_t k0 = 0; k0 < m; ++k0) {
      std::complex<double> v = 0.0;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        v += terms[t].coeff * tw[static_cast<std::size_t>(idx[t])];
        idx[t] += step[t];
        if (idx[t] >= mm) idx[t] -= mm;
      }
      visit(v);
    }
    std::size_t j = 1;
    while (j < d && outer[j] + 1 == m) {
      outer[j] = 0;
      ++j;
    }
    if (j >= d) break;
    ++outer[j];
  }
}

// Golden-section search for the maximum of f on [a, b].
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

// Global extremum of sign*|phi|^2 via a grid scan and coordinatewise refinement.
double extremum_modulus(const Symbol& phi, bool maximize) {
  if (phi.is_zero()) return 0.0;
  if (phi.size() == 1) return std::abs(phi.coefficients().begin()->second);
  const std::size_t d = phi.group().dimension();
  const double sgn = maximize ? 1.0 : -1.0;

  std::size_t m = static_cast<std::size_t>(std::max<std::int64_t>(64, 16 * (phi.max_degree() + 1)));
  while (d > 1 && ipow(m, d) > (std::size_t{1} << 20) && m > 8) m /= 2;

  std::vector<double> grid;
  grid.reserve(ipow(m, d));
  for_each_grid_value(phi, m, [&](std::complex<double> v) { grid.push_back(sgn * std::norm(v)); });

  // Local extrema on the periodic grid.
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t j = 1; j < d; ++j) stride[j] = stride[j - 1] * m;
  std::vector<std::pair<double, std::size_t>> candidates;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool local = true;
    for (std::size_t j = 0; j < d && local; ++j) {
      const std::size_t kj = (i / stride[j]) % m;
      const std::size_t up = i - kj * stride[j] + ((kj + 1) % m) * stride[j];
      const std::size_t dn = i - kj * stride[j] + ((kj + m - 1) % m) * stride[j];
      if (grid[up] > grid[i] || grid[dn] > grid[i]) local = false;
    }
    if (local) candidates.emplace_back(grid[i], i);
  }
  if (candidates.empty()) {
    const auto it = std::max_element(grid.begin(), grid.end());
    candidates.emplace_back(*it, static_cast<std::size_t>(it - grid.begin()));
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  if (candidates.size() > 16) candidates.resize(16);

  const double h = 1.0 / static_cast<double>(m);
  double best = candidates.front().first;
  std::vector<double> theta(d);
  for (const auto& [value, index] : candidates) {
    for (std::size_t j = 0; j < d; ++j) {
      theta[j] = static_cast<double>((index / stride[j]) % m) * h;
    }
    double current = value;
    for (int sweep = 0; sweep < (d == 1 ? 1 : 60); ++sweep) {
      const double before = current;
      for (std::size_t j = 0; j < d; ++j) {
        const double centre = theta[j];
        auto f = [&](double x) {
          theta[j] = x;
          return sgn * std::norm(phi(theta));
        };
        const auto [x, fx] = golden_max(f, centre - h, centre + h, 1e-13);
        if (fx >= current) {
          theta[j] = x;
          current = fx;
        } else {
          theta[j] = centre;
        }
      }
      if (current - before <= 1e-15 * std::max(1.0, std::fabs(current))) break;
    }
    best = std::max(best, current);
  }
  return std::sqrt(std::max(0.0, sgn * best));
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

// Winding of t -> phi(theta with coordinate j = t) over one loop.
std::int64_t loop_winding(const Symbol& phi, std::size_t j, std::vector<double> theta,
                          std::size_t max_samples) {
  std::size_t m = 64;
  const auto want = static_cast<std::size_t>(8 * (phi.degree(j) + 1));
  while (m < want) m *= 2;
  for (;; m *= 2) {
    if (m > max_samples) {
      throw GridTooCoarse("argument tracking did not resolve within " + std::to_string(max_samples) +
                          " samples per loop");
    }
    std::vector<std::complex<double>> v(m);
    for (std::size_t k = 0; k < m; ++k) {
      theta[j] = static_cast<double>(k) / static_cast<double>(m);
      v[k] = phi(theta);
      if (std::abs(v[k]) < kVanishingThreshold) {
        throw SymbolVanishes("symbol vanishes on the winding grid");
      }
    }
    double total = 0.0;
    double largest = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double inc = std::arg(v[(k + 1) % m] / v[k]);
      total += inc;
      largest = std::max(largest, std::fabs(inc));
    }
    if (largest > kPi / 2) continue;
    const double turns = total / (2.0 * kPi);
    const auto w = static_cast<std::int64_t>(std::llround(turns));
    if (std::fabs(turns - static_cast<double>(w)) > 1e-6) {
      throw NumericalInconsistency("argument increments do not close to an integer winding");
    }
    return w;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Symbol

Symbol::Symbol(GroupSpec spec) : spec_(std::move(spec)) {}

Symbol::Symbol(GroupSpec spec, const Coefficients& coeffs) : spec_(std::move(spec)) {
  for (const auto& [chi, c] : coeffs) add(chi, c);
}

Symbol Symbol::constant(GroupSpec spec, std::complex<double> c) {
  Symbol s(std::move(spec));
  s.set(Character{}, c);
  return s;
}

Symbol Symbol::monomial(GroupSpec spec, const Character& chi, std::complex<double> c) {
  Symbol s(std::move(spec));
  s.set(chi, c);
  return s;
}

std::complex<double> Symbol::coefficient(const Character& chi) const {
  const auto it = coeffs_.find(chi);
  return it == coeffs_.end() ? std::complex<double>{} : it->second;
}

void Symbol::add(const Character& chi, std::complex<double> c) {
  spec_.check_compatible(chi);
  set(chi, coefficient(chi) + c);
}

void Symbol::set(const Character& chi, std::complex<double> c) {
  spec_.check_compatible(chi);
  if (std::abs(c) < kPruneTolerance) {
    coeffs_.erase(chi);
  } else {
    coeffs_[chi] = c;
  }
}

bool Symbol::is_analytic() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const auto& kv) { return spec_.is_positive(kv.first); });
}

Symbol Symbol::analytic_part() const {
  Symbol s(spec_);
  for (const auto& [chi, c] : coeffs_) {
    if (spec_.is_positive(chi)) s.coeffs_.emplace(chi, c);
  }
  return s;
}

Symbol Symbol::coanalytic_part() const {
  Symbol s(spec_);
  for (const auto& [chi, c] : coeffs_) {
    if (!spec_.is_positive(chi)) s.coeffs_.emplace(chi, c);
  }
  return s;
}

std::int64_t Symbol::degree(std::size_t coordinate) const {
  std::int64_t m = 0;
  for (const auto& [chi, c] : coeffs_) {
    const std::int64_t e = chi.exponent(coordinate);
    m = std::max(m, e < 0 ? -e : e);
  }
  return m;
}

std::int64_t Symbol::max_degree() const {
  std::int64_t m = 0;
  for (const auto& [chi, c] : coeffs_) m = std::max(m, chi.max_abs_exponent());
  return m;
}

std::complex<double> Symbol::operator()(std::span<const double> theta) const {
  if (theta.size() != spec_.dimension()) throw DimensionMismatch("evaluation point has wrong dimension");
  std::complex<double> v = 0.0;
  for (const auto& [chi, c] : coeffs_) {
    long double turns = 0.0L;
    for (const auto& [coord, e] : chi.entries()) {
      turns += static_cast<long double>(e) * static_cast<long double>(theta[coord]);
    }
    v += c * unit_phase(turns);
  }
  return v;
}

std::complex<double> Symbol::at(double theta) const {
  return (*this)(std::span<const double>(&theta, 1));
}

Symbol Symbol::conjugate() const {
  Symbol s(spec_);
  for (const auto& [chi, c] : coeffs_) s.coeffs_.emplace(chi.inverse(), std::conj(c));
  return s;
}

void Symbol::check_same_group(const Symbol& other) const {
  if (!(spec_ == other.spec_)) throw VariantMismatch("symbols live on different groups");
}

Symbol& Symbol::operator+=(const Symbol& other) {
  check_same_group(other);
  for (const auto& [chi, c] : other.coeffs_) add(chi, c);
  return *this;
}

Symbol& Symbol::operator-=(const Symbol& other) {
  check_same_group(other);
  for (const auto& [chi, c] : other.coeffs_) add(chi, -c);
  return *this;
}

Symbol& Symbol::operator*=(std::complex<double> scalar) {
  Coefficients old;
  old.swap(coeffs_);
  for (const auto& [chi, c] : old) set(chi, c * scalar);
  return *this;
}

double coefficient_distance(const Symbol& a, const Symbol& b) {
  const Symbol diff = a - b;
  double m = 0.0;
  for (const auto& [chi, c] : diff.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

// ---------------------------------------------------------------------------
// Symbol algebra

Symbol modified_symbol(const Symbol& phi, const GroupPoint& lambda) {
  lambda.check_compatible(phi.group());
  Symbol out(phi.group());
  for (const auto& [chi, c] : phi.coefficients()) {
    out.set(chi, phi.group().is_positive(chi) ? std::conj(evaluate(lambda, chi)) * c : c);
  }
  return out;
}

Symbol rotate_symbol(const Symbol& phi, const GroupPoint& lambda, std::int64_t j) {
  if (j < 0) throw InvalidArgument("rotation power must be nonnegative");
  lambda.check_compatible(phi.group());
  Symbol out(phi.group());
  for (const auto& [chi, c] : phi.coefficients()) out.set(chi, evaluate(lambda, chi.pow(-j)) * c);
  return out;
}

Symbol multiply(const Symbol& phi, const Symbol& psi) {
  if (!(phi.group() == psi.group())) throw VariantMismatch("cannot multiply symbols on different groups");
  Symbol out(phi.group());
  for (const auto& [a, ca] : phi.coefficients()) {
    for (const auto& [b, cb] : psi.coefficients()) out.add(a * b, ca * cb);
  }
  return out;
}

Symbol big_phi(const Symbol& phi, const GroupPoint& lambda, std::int64_t q) {
  if (q < 1) throw InvalidArgument("q must be a positive integer");
  const Symbol base = modified_symbol(phi, lambda);
  Symbol out = base;
  for (std::int64_t j = 1; j < q; ++j) out = multiply(out, rotate_symbol(base, lambda, j));
  return out;
}

// ---------------------------------------------------------------------------
// Sampling and functionals

SampledFunction SampledFunction::sample(const Symbol& phi, std::size_t resolution) {
  const std::size_t d = phi.group().dimension();
  const auto need = static_cast<std::size_t>(2 * phi.max_degree() + 1);
  if (resolution < need) {
    throw InvalidArgument("grid resolution " + std::to_string(resolution) +
                          " cannot represent a symbol of degree " + std::to_string(phi.max_degree()));
  }
  if (static_cast<double>(resolution) > std::pow(double(std::size_t{1} << 26), 1.0 / double(d))) {
    throw InvalidArgument("sampling grid too large");
  }
  SampledFunction f;
  f.resolution_ = resolution;
  f.dimension_ = d;
  f.values_.reserve(ipow(resolution, d));
  for_each_grid_value(phi, resolution, [&](std::complex<double> v) { f.values_.push_back(v); });
  return f;
}

std::complex<double> SampledFunction::at(std::span<const std::size_t> index) const {
  if (index.size() != dimension_) throw DimensionMismatch("grid index has wrong dimension");
  std::size_t flat = 0;
  for (std::size_t j = dimension_; j-- > 0;) flat = flat * resolution_ + index[j];
  return values_.at(flat);
}

double sup_norm(const Symbol& phi) { return extremum_modulus(phi, true); }

double min_modulus(const Symbol& phi) { return extremum_modulus(phi, false); }

double log_mean(const Symbol& phi, std::size_t resolution) {
  const std::size_t d = phi.group().dimension();
  if (phi.is_zero()) throw SymbolVanishes("symbol vanishes on grid");
  if (resolution == 0) {
    resolution = kDefaultLogMeanResolution;
    while (d >= 3 && ipow(resolution, d) > (std::size_t{1} << 24)) resolution /= 2;
  }
  // Neumaier summation keeps the result independent of accumulated rounding.
  double sum = 0.0;
  double comp = 0.0;
  bool vanished = false;
  for_each_grid_value(phi, resolution, [&](std::complex<double> v) {
    const double a = std::abs(v);
    if (a < kVanishingThreshold) vanished = true;
    const double x = std::log(a);
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  });
  if (vanished) throw SymbolVanishes("symbol vanishes on grid");
  return (sum + comp) / static_cast<double>(ipow(resolution, d));
}

Character winding_character(const Symbol& phi, const WindingOptions& options) {
  if (phi.is_zero()) throw SymbolVanishes("zero symbol has no winding");
  const std::size_t d = phi.group().dimension();
  std::vector<std::int64_t> w(d, 0);
  std::uint64_t state = options.seed;
  const int slices = d == 1 ? 1 : 3;
  std::vector<std::vector<double>> slice_points;
  for (int s = 0; s < slices; ++s) {
    std::vector<double> theta(d);
    for (double& t : theta) t = unit_uniform(state);
    slice_points.push_back(std::move(theta));
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::optional<std::int64_t> agreed;
    for (const auto& theta : slice_points) {
      const std::int64_t wj = loop_winding(phi, j, theta, options.max_samples);
      if (agreed && *agreed != wj) {
        throw NumericalInconsistency("winding along coordinate " + std::to_string(j) +
                                     " differs between slices");
      }
      agreed = wj;
    }
    w[j] = *agreed;
  }
  return Character::from_exponents(w);
}

std::optional<std::int64_t> winding_index(const Symbol& phi, const WindingOptions& options) {
  return rotation_index(winding_character(phi, options), phi.group());
}

InvertibilityReport invertibility_report(const Symbol& phi) {
  InvertibilityReport r;
  r.in_c_inv = !phi.is_zero() && min_modulus(phi) > 1e-10;
  if (!r.in_c_inv) return r;
  if (phi.group().dimension() == 1 && phi.is_analytic()) {
    r.in_a_inv = winding_character(phi).is_identity();
  }
  return r;
}

}  // namespace ltoeplitz

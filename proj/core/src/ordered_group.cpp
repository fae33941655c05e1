// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/ordered_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ltoeplitz/error.hpp"

namespace ltoeplitz {

namespace {

__extension__ using Int128 = __int128;

constexpr Int128 kMaxExactDenominator = Int128{1} << 62;

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int128 mod_positive(Int128 a, Int128 m) {
  Int128 r = a % m;
  return r < 0 ? r + m : r;
}

long double frac(long double x) { return x - std::floor(x); }

// Number of dense vectors in [-radius, radius]^d, saturating.
std::uint64_t box_volume(std::int64_t radius, std::size_t d) {
  const auto side = static_cast<std::uint64_t>(2 * radius + 1);
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / side) return std::numeric_limits<std::uint64_t>::max();
    v *= side;
  }
  return v;
}

// Calls f(v) for every nonzero integer vector in [-radius, radius]^d.
template <class F>
void for_each_nonzero_in_box(std::size_t d, std::int64_t radius, F&& f) {
  std::vector<std::int64_t> v(d, -radius);
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) {
      if (!f(std::span<const std::int64_t>(v))) return;
    }
    std::size_t i = 0;
    while (i < d && v[i] == radius) {
      v[i] = -radius;
      ++i;
    }
    if (i == d) return;
    ++v[i];
  }
}

// Largest radius r with (2r+1)^d <= budget, at least 1.
std::int64_t relation_search_radius(std::size_t d, std::uint64_t budget) {
  std::int64_t r = 1;
  while (box_volume(r + 1, d) <= budget) ++r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Character

Character Character::from_exponents(std::span<const std::int64_t> exponents) {
  Character c;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) c.entries_.emplace_back(i, exponents[i]);
  }
  return c;
}

Character Character::from_exponents(std::initializer_list<std::int64_t> exponents) {
  return from_exponents(std::span<const std::int64_t>(exponents.begin(), exponents.size()));
}

Character Character::unit(std::size_t coordinate, std::int64_t exponent) {
  Character c;
  if (exponent != 0) c.entries_.emplace_back(coordinate, exponent);
  return c;
}

std::int64_t Character::exponent(std::size_t coordinate) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), coordinate,
                                   [](const Entry& e, std::size_t c) { return e.first < c; });
  return (it != entries_.end() && it->first == coordinate) ? it->second : 0;
}

std::size_t Character::support_end() const {
  return entries_.empty() ? 0 : entries_.back().first + 1;
}

std::vector<std::int64_t> Character::dense(std::size_t dimension) const {
  if (support_end() > dimension) {
    throw DimensionMismatch("character " + to_string(support_end()) + " does not fit dimension " +
                            std::to_string(dimension));
  }
  std::vector<std::int64_t> v(dimension, 0);
  for (const auto& [coord, e] : entries_) v[coord] = e;
  return v;
}

std::int64_t Character::max_abs_exponent() const {
  std::int64_t m = 0;
  for (const auto& [coord, e] : entries_) m = std::max(m, e < 0 ? -e : e);
  return m;
}

Character Character::inverse() const {
  Character c = *this;
  for (auto& [coord, e] : c.entries_) e = -e;
  return c;
}

Character Character::pow(std::int64_t n) const {
  if (n == 0) return {};
  Character c = *this;
  for (auto& [coord, e] : c.entries_) e *= n;
  return c;
}

std::string Character::to_string(std::size_t dimension) const {
  std::ostringstream os;
  os << '(';
  const std::size_t d = std::max(dimension, support_end());
  for (std::size_t i = 0; i < d; ++i) {
    if (i) os << ',';
    os << exponent(i);
  }
  os << ')';
  return os.str();
}

Character operator*(const Character& a, const Character& b) {
  Character c;
  c.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      c.entries_.push_back(*ia++);
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      c.entries_.push_back(*ib++);
    } else {
      const std::int64_t e = ia->second + ib->second;
      if (e != 0) c.entries_.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  return c;
}

Character& Character::operator*=(const Character& other) {
  *this = *this * other;
  return *this;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::lattice_lex(std::size_t dimension) {
  if (dimension == 0) throw InvalidArgument("lattice dimension must be at least 1");
  GroupSpec s;
  s.kind_ = Kind::LatticeLex;
  s.dimension_ = dimension;
  return s;
}

GroupSpec GroupSpec::real_embedded(std::vector<long double> basis, long double guard) {
  if (basis.empty()) throw InvalidArgument("real-embedded basis must be nonempty");
  if (basis.front() != 1.0L) throw InvalidArgument("real-embedded basis must start with 1");
  if (!(guard > 0.0L)) throw InvalidArgument("guard tolerance must be positive");
  for (long double b : basis) {
    if (!std::isfinite(b) || b == 0.0L) throw InvalidArgument("real-embedded basis entries must be finite and nonzero");
  }
  GroupSpec s;
  s.kind_ = Kind::RealEmbedded;
  s.dimension_ = basis.size();
  s.basis_ = std::move(basis);
  s.guard_ = guard;

  // Only a necessary condition for rational independence: no small integer
  // relation maps a nonzero character onto 0.
  const std::int64_t radius = relation_search_radius(s.dimension_, 200000);
  for_each_nonzero_in_box(s.dimension_, radius, [&](std::span<const std::int64_t> n) {
    long double image = 0.0L;
    long double scale = 0.0L;
    for (std::size_t j = 0; j < n.size(); ++j) {
      image += static_cast<long double>(n[j]) * s.basis_[j];
      scale += std::fabs(static_cast<long double>(n[j]) * s.basis_[j]);
    }
    if (std::fabs(image) <= s.guard_ * std::max(1.0L, scale)) {
      throw InvalidArgument("real-embedded basis admits an integer relation; not rationally independent");
    }
    return true;
  });
  return s;
}

void GroupSpec::check_compatible(const Character& chi) const {
  if (chi.support_end() > dimension_) {
    throw DimensionMismatch("character " + chi.to_string(chi.support_end()) +
                            " uses coordinates beyond group dimension " + std::to_string(dimension_));
  }
}

int GroupSpec::sign(const Character& chi) const {
  check_compatible(chi);
  if (chi.is_identity()) return 0;
  if (kind_ == Kind::LatticeLex) return chi.entries().front().second > 0 ? 1 : -1;
  long double image = 0.0L;
  long double scale = 0.0L;
  for (const auto& [coord, e] : chi.entries()) {
    const long double term = static_cast<long double>(e) * basis_[coord];
    image += term;
    scale += std::fabs(term);
  }
  if (std::fabs(image) <= guard_ * std::max(1.0L, scale)) {
    throw OrderTie("real image of " + chi.to_string(dimension_) + " is within the guard band of 0");
  }
  return image > 0 ? 1 : -1;
}

int GroupSpec::sign_dense(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != dimension_) throw DimensionMismatch("dense exponent vector has wrong length");
  if (kind_ == Kind::LatticeLex) {
    for (std::int64_t e : exponents) {
      if (e != 0) return e > 0 ? 1 : -1;
    }
    return 0;
  }
  long double image = 0.0L;
  long double scale = 0.0L;
  bool zero = true;
  for (std::size_t j = 0; j < dimension_; ++j) {
    if (exponents[j] == 0) continue;
    zero = false;
    const long double term = static_cast<long double>(exponents[j]) * basis_[j];
    image += term;
    scale += std::fabs(term);
  }
  if (zero) return 0;
  if (std::fabs(image) <= guard_ * std::max(1.0L, scale)) {
    throw OrderTie("real image of a nonzero character is within the guard band of 0");
  }
  return image > 0 ? 1 : -1;
}

std::strong_ordering GroupSpec::compare(const Character& a, const Character& b) const {
  check_compatible(a);
  check_compatible(b);
  const int s = sign(a.inverse() * b);
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long double GroupSpec::real_image(const Character& chi) const {
  if (kind_ != Kind::RealEmbedded) throw VariantMismatch("real_image requires a real-embedded group");
  check_compatible(chi);
  long double image = 0.0L;
  for (const auto& [coord, e] : chi.entries()) image += static_cast<long double>(e) * basis_[coord];
  return image;
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::LatticeLex) {
    os << "Z^" << dimension_ << " lex";
  } else {
    os.precision(17);
    os << "real-embedded(";
    for (std::size_t i = 0; i < basis_.size(); ++i) os << (i ? "," : "") << static_cast<double>(basis_[i]);
    os << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Indices

std::optional<Character> smallest_positive(const GroupSpec& spec) {
  if (spec.kind() == GroupSpec::Kind::LatticeLex) return Character::unit(spec.dimension() - 1);
  if (spec.dimension() == 1) return Character::unit(0);
  return std::nullopt;
}

std::optional<std::int64_t> rotation_index(const Character& chi, const GroupSpec& spec) {
  spec.check_compatible(chi);
  if (chi.is_identity()) return 0;
  const auto zeta = smallest_positive(spec);
  if (!zeta) return std::nullopt;
  const std::size_t coord = zeta->entries().front().first;
  if (chi.entries().size() == 1 && chi.entries().front().first == coord) {
    return chi.entries().front().second;
  }
  return std::nullopt;
}

BoundedCount rotation_index_bruteforce(const Character& chi, const GroupSpec& spec,
                                       std::int64_t bound) {
  spec.check_compatible(chi);
  if (bound < 1) throw InvalidArgument("bound must be positive");
  if (!spec.is_positive(chi)) throw InvalidArgument("rotation_index_bruteforce requires chi in X_+");
  const std::size_t d = spec.dimension();
  if (box_volume(bound, d) > 50'000'000ULL) throw InvalidArgument("enumeration box too large");

  const std::vector<std::int64_t> target = chi.dense(d);
  const std::int64_t half = bound / 2;
  std::vector<std::int64_t> xi(d, -bound);
  std::vector<std::int64_t> diff(d);
  std::int64_t count = 0;
  std::int64_t count_half = 0;
  bool touches_boundary = false;
  while (true) {
    if (spec.sign_dense(xi) >= 0) {
      for (std::size_t j = 0; j < d; ++j) diff[j] = target[j] - xi[j];
      if (spec.sign_dense(diff) > 0) {
        ++count;
        bool in_half = true;
        for (std::int64_t x : xi) {
          const std::int64_t a = x < 0 ? -x : x;
          if (a == bound) touches_boundary = true;
          if (a > half) in_half = false;
        }
        if (in_half) ++count_half;
      }
    }
    std::size_t i = 0;
    while (i < d && xi[i] == bound) {
      xi[i] = -bound;
      ++i;
    }
    if (i == d) break;
    ++xi[i];
  }
  if (touches_boundary || count != count_half) return {};
  return {count};
}

// ---------------------------------------------------------------------------
// Angle / GroupPoint

Angle Angle::rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw InvalidArgument("angle denominator must be positive");
  Int128 p = mod_positive(numerator, denominator);
  Int128 q = denominator;
  const Int128 g = gcd128(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (p == 0) q = 1;
  Angle a;
  a.rational_ = true;
  a.num_ = static_cast<std::int64_t>(p);
  a.den_ = static_cast<std::int64_t>(q);
  return a;
}

Angle Angle::real(long double value) {
  if (!std::isfinite(value)) throw InvalidArgument("angle must be finite");
  Angle a;
  a.rational_ = false;
  a.real_ = frac(value);
  return a;
}

long double Angle::value() const {
  return rational_ ? static_cast<long double>(num_) / static_cast<long double>(den_) : real_;
}

Angle Angle::negated() const {
  if (rational_) return rational(-num_, den_);
  return real(-real_);
}

GroupPoint GroupPoint::torus(std::vector<Angle> angles) {
  if (angles.empty()) throw InvalidArgument("torus point needs at least one angle");
  GroupPoint p;
  p.kind_ = Kind::TorusAngles;
  p.angles_ = std::move(angles);
  return p;
}

GroupPoint GroupPoint::real_parameter(long double t, const GroupSpec& spec) {
  if (spec.kind() != GroupSpec::Kind::RealEmbedded) {
    throw VariantMismatch("a real parameter point pairs only with a real-embedded group");
  }
  if (!std::isfinite(t)) throw InvalidArgument("real parameter must be finite");
  GroupPoint p;
  p.kind_ = Kind::RealParameter;
  p.t_ = t;
  p.basis_.assign(spec.basis().begin(), spec.basis().end());
  return p;
}

GroupPoint GroupPoint::identity(const GroupSpec& spec) {
  if (spec.kind() == GroupSpec::Kind::LatticeLex) {
    return torus(std::vector<Angle>(spec.dimension(), Angle::rational(0, 1)));
  }
  return real_parameter(0.0L, spec);
}

std::size_t GroupPoint::dimension() const {
  return kind_ == Kind::TorusAngles ? angles_.size() : basis_.size();
}

GroupPoint GroupPoint::inverse() const {
  GroupPoint p = *this;
  if (kind_ == Kind::TorusAngles) {
    for (auto& a : p.angles_) a = a.negated();
  } else {
    p.t_ = -t_;
  }
  return p;
}

void GroupPoint::check_compatible(const GroupSpec& spec) const {
  if (kind_ == Kind::TorusAngles) {
    if (spec.kind() != GroupSpec::Kind::LatticeLex) {
      throw VariantMismatch("torus angles pair only with a lexicographic lattice");
    }
    if (spec.dimension() != angles_.size()) {
      throw VariantMismatch("torus point has " + std::to_string(angles_.size()) +
                            " angles but the group has dimension " + std::to_string(spec.dimension()));
    }
    return;
  }
  if (spec.kind() != GroupSpec::Kind::RealEmbedded) {
    throw VariantMismatch("a real parameter point pairs only with a real-embedded group");
  }
  if (!std::equal(basis_.begin(), basis_.end(), spec.basis().begin(), spec.basis().end())) {
    throw VariantMismatch("real parameter point was built for a different basis");
  }
}

std::optional<std::pair<std::int64_t, std::int64_t>> GroupPoint::rational_phase(
    const Character& chi) const {
  if (chi.support_end() > dimension()) {
    throw DimensionMismatch("character " + chi.to_string(chi.support_end()) +
                            " does not fit a point of dimension " + std::to_string(dimension()));
  }
  if (chi.is_identity()) return std::pair<std::int64_t, std::int64_t>{0, 1};
  if (kind_ == Kind::RealParameter) {
    if (t_ == 0.0L) return std::pair<std::int64_t, std::int64_t>{0, 1};
    return std::nullopt;
  }
  Int128 num = 0;
  Int128 den = 1;
  for (const auto& [coord, e] : chi.entries()) {
    const Angle& a = angles_[coord];
    if (!a.is_rational()) return std::nullopt;
    const Int128 q = a.denominator();
    const Int128 t = mod_positive(mod_positive(e, q) * a.numerator(), q);
    num = num * q + t * den;
    den = den * q;
    const Int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num = mod_positive(num, den);
    if (den > kMaxExactDenominator) return std::nullopt;
  }
  if (num == 0) den = 1;
  return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(num),
                                               static_cast<std::int64_t>(den)};
}

long double GroupPoint::phase(const Character& chi) const {
  if (auto r = rational_phase(chi)) {
    return static_cast<long double>(r->first) / static_cast<long double>(r->second);
  }
  if (kind_ == Kind::RealParameter) {
    long double image = 0.0L;
    for (const auto& [coord, e] : chi.entries()) image += static_cast<long double>(e) * basis_[coord];
    return frac(t_ * image);
  }
  // Mixed rational and real coordinates: exact part plus floating part.
  Int128 num = 0;
  Int128 den = 1;
  long double real_part = 0.0L;
  for (const auto& [coord, e] : chi.entries()) {
    const Angle& a = angles_[coord];
    if (a.is_rational()) {
      const Int128 q = a.denominator();
      const Int128 t = mod_positive(mod_positive(e, q) * a.numerator(), q);
      num = num * q + t * den;
      den = den * q;
      const Int128 g = gcd128(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
      num = mod_positive(num, den);
    } else {
      real_part = frac(real_part + frac(static_cast<long double>(e) * a.value()));
    }
  }
  return frac(static_cast<long double>(num) / static_cast<long double>(den) + real_part);
}

std::string GroupPoint::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::TorusAngles) {
    os << "theta=(";
    for (std::size_t i = 0; i < angles_.size(); ++i) {
      if (i) os << ',';
      if (angles_[i].is_rational()) {
        os << angles_[i].numerator() << '/' << angles_[i].denominator();
      } else {
        os << static_cast<double>(angles_[i].value());
      }
    }
    os << ')';
  } else {
    os << "t=" << static_cast<double>(t_);
  }
  return os.str();
}

std::complex<double> evaluate(const GroupPoint& lambda, const Character& chi) {
  constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
  if (auto r = lambda.rational_phase(chi)) {
    const auto [p, q] = *r;
    if ((Int128{4} * p) % q == 0) {
      switch (static_cast<int>((Int128{4} * p) / q)) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    const long double angle = kTwoPi * static_cast<long double>(p) / static_cast<long double>(q);
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  const long double angle = kTwoPi * lambda.phase(chi);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::optional<std::int64_t> order_of_point(const GroupPoint& lambda) {
  if (lambda.kind() == GroupPoint::Kind::RealParameter) {
    if (lambda.parameter() == 0.0L) return 1;
    return std::nullopt;
  }
  Int128 l = 1;
  for (const Angle& a : lambda.angles()) {
    if (!a.is_rational()) return std::nullopt;
    const Int128 q = a.denominator();
    l = l / gcd128(l, q) * q;
    if (l > kMaxExactDenominator) throw InvalidArgument("order of point overflows");
  }
  return static_cast<std::int64_t>(l);
}

bool is_primitive_root_at(const GroupPoint& lambda, const Character& chi0, std::int64_t q) {
  if (q < 1) throw InvalidArgument("order q must be a positive integer");
  if (auto r = lambda.rational_phase(chi0)) return r->second == q;
  constexpr double kTol = 1e-9;
  for (std::int64_t k = 1; k <= q; ++k) {
    const double gap = std::abs(evaluate(lambda, chi0.pow(k)) - 1.0);
    if (k < q && gap <= kTol) return false;
    if (k == q && gap > kTol) return false;
  }
  return true;
}

bool is_probable_generator(const GroupPoint& lambda) {
  constexpr long double kTol = 1e-9L;
  const std::size_t d = lambda.dimension();
  std::vector<long double> coords;
  if (lambda.kind() == GroupPoint::Kind::TorusAngles) {
    for (const Angle& a : lambda.angles()) {
      if (a.is_rational()) return false;
      coords.push_back(a.value());
    }
  } else {
    if (lambda.parameter() == 0.0L) return false;
    for (long double b : lambda.basis()) coords.push_back(lambda.parameter() * b);
  }
  const std::int64_t radius = d == 1 ? 10000 : relation_search_radius(d, 200000);
  bool generic = true;
  for_each_nonzero_in_box(d, radius, [&](std::span<const std::int64_t> n) {
    long double s = 0.0L;
    for (std::size_t j = 0; j < d; ++j) s += static_cast<long double>(n[j]) * coords[j];
    if (std::fabs(s - std::round(s)) <= kTol) {
      generic = false;
      return false;
    }
    return true;
  });
  return generic;
}

}  // namespace ltoeplitz

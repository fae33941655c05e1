// SPDX-License-Identifier: Apache-2.0
//
// Totally ordered, torsion-free discrete abelian groups X (the duals of the
// compact groups G we work over), their positive cones, rotation indices and
// the evaluation of characters at points of G.

#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ltoeplitz {

/// An element of X, stored as a finitely supported integer exponent vector.
///
/// The group law is written multiplicatively: `a * b` adds exponents,
/// `inverse()` negates them and the default-constructed value is the identity.
/// Zero exponents are never stored.
class Character {
 public:
  using Entry = std::pair<std::size_t, std::int64_t>;

  Character() = default;

  static Character from_exponents(std::span<const std::int64_t> exponents);
  static Character from_exponents(std::initializer_list<std::int64_t> exponents);
  /// The character with a single nonzero exponent.
  static Character unit(std::size_t coordinate, std::int64_t exponent = 1);

  [[nodiscard]] std::int64_t exponent(std::size_t coordinate) const;
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] bool is_identity() const { return entries_.empty(); }
  /// One past the largest coordinate carrying a nonzero exponent.
  [[nodiscard]] std::size_t support_end() const;
  [[nodiscard]] std::vector<std::int64_t> dense(std::size_t dimension) const;
  [[nodiscard]] std::int64_t max_abs_exponent() const;

  [[nodiscard]] Character inverse() const;
  [[nodiscard]] Character pow(std::int64_t n) const;

  /// "(e1,e2,...,ed)" padded to `dimension` coordinates.
  [[nodiscard]] std::string to_string(std::size_t dimension) const;

  friend Character operator*(const Character& a, const Character& b);
  Character& operator*=(const Character& other);

  friend bool operator==(const Character&, const Character&) = default;
  // Structural order for use as a container key. The group order lives in
  // GroupSpec::compare.
  friend auto operator<=>(const Character&, const Character&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Describes X together with its total order.
///
/// LatticeLex(d): X = Z^d with the lexicographic order, earlier coordinates
/// dominating. RealEmbedded(b_1..b_d): X = Z^d ordered through the injective
/// map n -> sum n_j b_j into the real line. Rational independence of the basis
/// is the caller's responsibility; construction only rejects integer
/// relations found on a small box.
class GroupSpec {
 public:
  enum class Kind { LatticeLex, RealEmbedded };

  static constexpr long double kDefaultGuard = 1e-15L;

  static GroupSpec lattice_lex(std::size_t dimension);
  static GroupSpec real_embedded(std::vector<long double> basis,
                                 long double guard = kDefaultGuard);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::span<const long double> basis() const { return basis_; }
  [[nodiscard]] long double guard() const { return guard_; }

  /// Throws DimensionMismatch when `chi` uses a coordinate >= dimension().
  void check_compatible(const Character& chi) const;

  /// Group order. Throws OrderTie when a RealEmbedded comparison falls inside
  /// the guard band.
  [[nodiscard]] std::strong_ordering compare(const Character& a, const Character& b) const;
  /// Sign of `chi` relative to the identity: -1, 0 or +1.
  [[nodiscard]] int sign(const Character& chi) const;
  /// Same as sign() on a dense exponent vector of length dimension().
  [[nodiscard]] int sign_dense(std::span<const std::int64_t> exponents) const;
  /// Membership in the positive cone X_+ (which contains the identity).
  [[nodiscard]] bool is_positive(const Character& chi) const { return sign(chi) >= 0; }
  /// sum n_j b_j for RealEmbedded groups.
  [[nodiscard]] long double real_image(const Character& chi) const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec() = default;

  Kind kind_ = Kind::LatticeLex;
  std::size_t dimension_ = 0;
  std::vector<long double> basis_;
  long double guard_ = kDefaultGuard;
};

/// Minimum of X_+ \ {1} when it exists: e_d for LatticeLex, the generator 1
/// for a one-dimensional RealEmbedded group, absent otherwise.
[[nodiscard]] std::optional<Character> smallest_positive(const GroupSpec& spec);

/// ind(chi), defined on the cyclic subgroup X^i generated by the smallest
/// positive element. Absent when chi has no index.
[[nodiscard]] std::optional<std::int64_t> rotation_index(const Character& chi,
                                                         const GroupSpec& spec);

/// Result of counting X_+ \ chi X_+ inside an exponent box.
struct BoundedCount {
  std::optional<std::int64_t> count;  // empty means ExceedsBound
  [[nodiscard]] bool exceeds_bound() const { return !count.has_value(); }
};

/// Brute-force oracle for rotation_index on chi in X_+.
///
/// Enumerates {xi in box : 1 <= xi < chi} over the box [-bound, bound]^d.
/// The count is reported only when no element of the set touches the box
/// boundary and the count already stabilised on the half-size box; otherwise
/// ExceedsBound. Throws InvalidArgument when chi is not in X_+.
[[nodiscard]] BoundedCount rotation_index_bruteforce(const Character& chi, const GroupSpec& spec,
                                                     std::int64_t bound);

/// A coordinate of a torus point: an exact rational p/q in [0,1), or a real
/// number that is treated as irrational.
class Angle {
 public:
  static Angle rational(std::int64_t numerator, std::int64_t denominator);
  static Angle real(long double value);

  [[nodiscard]] bool is_rational() const { return rational_; }
  [[nodiscard]] std::int64_t numerator() const { return num_; }
  [[nodiscard]] std::int64_t denominator() const { return den_; }
  [[nodiscard]] long double value() const;
  [[nodiscard]] Angle negated() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  bool rational_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  long double real_ = 0.0L;
};

/// A point lambda of G, stored through the data needed to evaluate
/// lambda(chi) = chi(lambda).
///
/// TorusAngles pairs with LatticeLex of the same dimension; RealParameter(t)
/// pairs with RealEmbedded and carries that group's basis.
class GroupPoint {
 public:
  enum class Kind { TorusAngles, RealParameter };

  static GroupPoint torus(std::vector<Angle> angles);
  static GroupPoint real_parameter(long double t, const GroupSpec& spec);
  static GroupPoint identity(const GroupSpec& spec);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] std::span<const Angle> angles() const { return angles_; }
  [[nodiscard]] long double parameter() const { return t_; }
  [[nodiscard]] std::span<const long double> basis() const { return basis_; }

  /// lambda^{-1}.
  [[nodiscard]] GroupPoint inverse() const;
  /// Throws VariantMismatch unless this point lives on the group `spec` is dual to.
  void check_compatible(const GroupSpec& spec) const;

  /// The exact phase of lambda(chi) as a reduced fraction, when available.
  [[nodiscard]] std::optional<std::pair<std::int64_t, std::int64_t>> rational_phase(
      const Character& chi) const;
  /// Phase s in [0,1) with lambda(chi) = exp(2 pi i s).
  [[nodiscard]] long double phase(const Character& chi) const;

  [[nodiscard]] std::string describe() const;

 private:
  GroupPoint() = default;

  Kind kind_ = Kind::TorusAngles;
  std::vector<Angle> angles_;
  long double t_ = 0.0L;
  std::vector<long double> basis_;
};

/// lambda(chi); modulus one. TorusAngles: exp(2 pi i sum n_j theta_j);
/// RealParameter: exp(2 pi i t sum n_j b_j). Quarter turns are exact.
[[nodiscard]] std::complex<double> evaluate(const GroupPoint& lambda, const Character& chi);

/// Smallest q with lambda^q = 1, absent when lambda has infinite order.
[[nodiscard]] std::optional<std::int64_t> order_of_point(const GroupPoint& lambda);

/// True iff lambda(chi0) is a primitive q-th root of unity.
[[nodiscard]] bool is_primitive_root_at(const GroupPoint& lambda, const Character& chi0,
                                        std::int64_t q);

/// Heuristic test that lambda generates a dense cyclic subgroup of G: every
/// coordinate is irrational and no integer relation with small coefficients
/// holds to within 1e-9. Monotheticity cannot be decided from floating data.
[[nodiscard]] bool is_probable_generator(const GroupPoint& lambda);

}  // namespace ltoeplitz

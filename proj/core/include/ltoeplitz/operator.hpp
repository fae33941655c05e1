// SPDX-License-Identifier: Apache-2.0
//
// lambda-Toeplitz operators as (lambda, phi) data and as finite sections over
// windows of the positive cone X_+.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ltoeplitz/linalg.hpp"
#include "ltoeplitz/ordered_group.hpp"
#include "ltoeplitz/symbol.hpp"

namespace ltoeplitz {

/// The operator T_{lambda,phi} = U_lambda T_{phi_lambda} on H^2(G).
///
/// The symbol is a trigonometric polynomial, so the modified symbol is
/// automatically bounded.
class LambdaToeplitz {
 public:
  LambdaToeplitz(GroupPoint lambda, Symbol symbol);

  [[nodiscard]] const GroupPoint& lambda() const { return lambda_; }
  [[nodiscard]] const Symbol& symbol() const { return symbol_; }
  [[nodiscard]] const GroupSpec& group() const { return symbol_.group(); }
  [[nodiscard]] Symbol modified_symbol() const { return ltoeplitz::modified_symbol(symbol_, lambda_); }

 private:
  GroupPoint lambda_;
  Symbol symbol_;
};

/// Per-coordinate inclusive exponent ranges.
class ExponentBox {
 public:
  using Range = std::pair<std::int64_t, std::int64_t>;

  explicit ExponentBox(std::vector<Range> ranges);
  static ExponentBox cube(std::size_t dimension, std::int64_t bound);

  [[nodiscard]] std::size_t dimension() const { return ranges_.size(); }
  [[nodiscard]] const std::vector<Range>& ranges() const { return ranges_; }
  [[nodiscard]] bool contains(const Character& chi) const;
  [[nodiscard]] std::uint64_t volume() const;

  /// X_+ intersected with the box, ascending in the group order.
  [[nodiscard]] std::vector<Character> positive_elements(const GroupSpec& spec) const;

  friend bool operator==(const ExponentBox&, const ExponentBox&) = default;

 private:
  std::vector<Range> ranges_;
};

/// A finite lower set of X_+ inside a declared exponent box, listed in
/// ascending order and starting at the identity.
class TruncationWindow {
 public:
  static constexpr std::size_t kMaxSize = 4096;

  /// The cone part of the box, optionally cut to its `limit` smallest elements.
  static TruncationWindow from_box(const GroupSpec& spec, const ExponentBox& box,
                                   std::optional<std::size_t> limit = std::nullopt);
  /// The n smallest cone elements of the smallest cube [-B,B]^d holding at
  /// least n of them. For d = 1 this is {0, ..., n-1}.
  static TruncationWindow leading(const GroupSpec& spec, std::size_t n);
  /// Validates an explicit character list against the lower-set invariant.
  static TruncationWindow from_characters(const GroupSpec& spec, const ExponentBox& box,
                                          std::vector<Character> chars);

  [[nodiscard]] std::size_t size() const { return chars_.size(); }
  [[nodiscard]] const Character& operator[](std::size_t i) const { return chars_[i]; }
  [[nodiscard]] const std::vector<Character>& characters() const { return chars_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Character& chi) const;
  [[nodiscard]] const GroupSpec& group() const { return spec_; }
  [[nodiscard]] const ExponentBox& box() const { return box_; }

 private:
  TruncationWindow(GroupSpec spec, ExponentBox box, std::vector<Character> chars);

  GroupSpec spec_;
  ExponentBox box_;
  std::vector<Character> chars_;
  std::map<Character, std::size_t> index_;
};

/// Compression of an operator to a window: matrix(row, col) = <T chi_col, chi_row>.
struct FiniteSection {
  TruncationWindow window;
  Matrix matrix;
};

/// <T chi1, chi2> in closed form: lambda(chi1) phi^(chi1^{-1} chi2) when the
/// difference lies in X_+, lambda(chi2) phi^(chi1^{-1} chi2) otherwise.
[[nodiscard]] std::complex<double> matrix_entry(const LambdaToeplitz& op, const Character& chi1,
                                                const Character& chi2);

[[nodiscard]] FiniteSection build_finite_section(const LambdaToeplitz& op,
                                                 const TruncationWindow& window);

/// Reads phi back from the first column (cone coefficients) and first row
/// (coefficients on X_-) of a section.
[[nodiscard]] Symbol extract_symbol(const FiniteSection& section);
/// Builds the section on `probe` and extracts; throws InvalidArgument when the
/// probe cannot see the whole support of the symbol.
[[nodiscard]] Symbol extract_symbol(const LambdaToeplitz& op, const TruncationWindow& probe);

/// Coefficients of T f for analytic phi and f supported in X_+, using
/// T f(x) = phi(x) f(lambda x).
[[nodiscard]] Symbol apply_weighted_shift(const LambdaToeplitz& op, const Symbol& f);

[[nodiscard]] FiniteSection adjoint_section(const FiniteSection& section);

}  // namespace ltoeplitz

// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/operator.hpp"

#include <algorithm>

#include "ltoeplitz/error.hpp"

namespace ltoeplitz {

LambdaToeplitz::LambdaToeplitz(GroupPoint lambda, Symbol symbol)
    : lambda_(std::move(lambda)), symbol_(std::move(symbol)) {
  lambda_.check_compatible(symbol_.group());
}

// ---------------------------------------------------------------------------
// ExponentBox

ExponentBox::ExponentBox(std::vector<Range> ranges) : ranges_(std::move(ranges)) {
  if (ranges_.empty()) throw InvalidArgument("exponent box needs at least one coordinate");
  for (const auto& [lo, hi] : ranges_) {
    if (lo > hi) throw InvalidArgument("exponent box range is empty");
  }
}

ExponentBox ExponentBox::cube(std::size_t dimension, std::int64_t bound) {
  if (bound < 0) throw InvalidArgument("cube bound must be nonnegative");
  return ExponentBox(std::vector<Range>(dimension, Range{-bound, bound}));
}

bool ExponentBox::contains(const Character& chi) const {
  if (chi.support_end() > ranges_.size()) return false;
  for (std::size_t j = 0; j < ranges_.size(); ++j) {
    const std::int64_t e = chi.exponent(j);
    if (e < ranges_[j].first || e > ranges_[j].second) return false;
  }
  return true;
}

std::uint64_t ExponentBox::volume() const {
  std::uint64_t v = 1;
  for (const auto& [lo, hi] : ranges_) {
    const auto side = static_cast<std::uint64_t>(hi - lo + 1);
    if (v > (std::uint64_t{1} << 40) / side) return std::uint64_t{1} << 40;
    v *= side;
  }
  return v;
}

std::vector<Character> ExponentBox::positive_elements(const GroupSpec& spec) const {
  if (spec.dimension() != ranges_.size()) throw DimensionMismatch("box and group differ in dimension");
  if (volume() > 4'000'000ULL) throw InvalidArgument("exponent box too large to enumerate");
  const std::size_t d = ranges_.size();
  std::vector<std::int64_t> v(d);
  for (std::size_t j = 0; j < d; ++j) v[j] = ranges_[j].first;
  std::vector<Character> out;
  while (true) {
    if (spec.sign_dense(v) >= 0) out.push_back(Character::from_exponents(v));
    std::size_t j = 0;
    while (j < d && v[j] == ranges_[j].second) {
      v[j] = ranges_[j].first;
      ++j;
    }
    if (j == d) break;
    ++v[j];
  }
  std::sort(out.begin(), out.end(), [&](const Character& a, const Character& b) {
    return spec.compare(a, b) == std::strong_ordering::less;
  });
  return out;
}

// ---------------------------------------------------------------------------
// TruncationWindow

TruncationWindow::TruncationWindow(GroupSpec spec, ExponentBox box, std::vector<Character> chars)
    : spec_(std::move(spec)), box_(std::move(box)), chars_(std::move(chars)) {
  if (chars_.empty()) throw InvalidArgument("window must not be empty");
  if (chars_.size() > kMaxSize) {
    throw InvalidArgument("window of " + std::to_string(chars_.size()) + " characters exceeds the cap of " +
                          std::to_string(kMaxSize));
  }
  for (std::size_t i = 0; i < chars_.size(); ++i) index_.emplace(chars_[i], i);
}

TruncationWindow TruncationWindow::from_box(const GroupSpec& spec, const ExponentBox& box,
                                            std::optional<std::size_t> limit) {
  auto chars = box.positive_elements(spec);
  if (limit) {
    if (*limit == 0) throw InvalidArgument("window size must be positive");
    if (*limit > chars.size()) throw InvalidArgument("box holds fewer cone elements than requested");
    chars.resize(*limit);
  }
  return TruncationWindow(spec, box, std::move(chars));
}

TruncationWindow TruncationWindow::leading(const GroupSpec& spec, std::size_t n) {
  if (n == 0) throw InvalidArgument("window size must be positive");
  if (n > kMaxSize) throw InvalidArgument("window size exceeds the cap of " + std::to_string(kMaxSize));
  const std::size_t d = spec.dimension();
  // Exactly one of chi, chi^{-1} is positive, so a cube of volume V holds (V+1)/2 cone elements.
  std::int64_t bound = 0;
  while (true) {
    std::uint64_t volume = 1;
    for (std::size_t j = 0; j < d; ++j) volume *= static_cast<std::uint64_t>(2 * bound + 1);
    if ((volume + 1) / 2 >= n) break;
    ++bound;
  }
  return from_box(spec, ExponentBox::cube(d, bound), n);
}

TruncationWindow TruncationWindow::from_characters(const GroupSpec& spec, const ExponentBox& box,
                                                   std::vector<Character> chars) {
  if (chars.empty()) throw InvalidArgument("window must not be empty");
  if (!chars.front().is_identity()) throw InvalidArgument("window must start at the identity character");
  for (std::size_t i = 0; i < chars.size(); ++i) {
    spec.check_compatible(chars[i]);
    if (!box.contains(chars[i])) throw InvalidArgument("window character lies outside the declared box");
    if (!spec.is_positive(chars[i])) throw InvalidArgument("window character is not in the positive cone");
    if (i && spec.compare(chars[i - 1], chars[i]) != std::strong_ordering::less) {
      throw InvalidArgument("window characters must be strictly ascending");
    }
  }
  // Lower set within the box: every cone element of the box up to the maximum is present.
  const auto cone = box.positive_elements(spec);
  std::size_t below = 0;
  for (const auto& chi : cone) {
    if (spec.compare(chi, chars.back()) != std::strong_ordering::greater) ++below;
  }
  if (below != chars.size()) throw InvalidArgument("window violates the lower-set invariant");
  return TruncationWindow(spec, box, std::move(chars));
}

std::optional<std::size_t> TruncationWindow::index_of(const Character& chi) const {
  const auto it = index_.find(chi);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Sections

std::complex<double> matrix_entry(const LambdaToeplitz& op, const Character& chi1,
                                  const Character& chi2) {
  const GroupSpec& spec = op.group();
  if (!spec.is_positive(chi1) || !spec.is_positive(chi2)) {
    throw InvalidArgument("matrix entries are indexed by characters of the positive cone");
  }
  const Character diff = chi1.inverse() * chi2;
  const std::complex<double> c = op.symbol().coefficient(diff);
  if (c == 0.0) return 0.0;
  return spec.is_positive(diff) ? evaluate(op.lambda(), chi1) * c : evaluate(op.lambda(), chi2) * c;
}

FiniteSection build_finite_section(const LambdaToeplitz& op, const TruncationWindow& window) {
  if (!(window.group() == op.group())) throw VariantMismatch("window and operator live on different groups");
  const std::size_t n = window.size();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  // matrix_entry vanishes unless chi1^{-1} chi2 is in the support.
  for (std::size_t col = 0; col < n; ++col) {
    const Character& chi1 = window[col];
    for (const auto& [s, c] : op.symbol().coefficients()) {
      const Character chi2 = chi1 * s;
      if (auto row = window.index_of(chi2)) {
        m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = matrix_entry(op, chi1, chi2);
      }
    }
  }
  return {window, std::move(m)};
}

Symbol extract_symbol(const FiniteSection& section) {
  const TruncationWindow& w = section.window;
  Symbol phi(w.group());
  for (std::size_t i = 0; i < w.size(); ++i) {
    phi.set(w[i], section.matrix(static_cast<Eigen::Index>(i), 0));
  }
  for (std::size_t j = 1; j < w.size(); ++j) {
    phi.set(w[j].inverse(), section.matrix(0, static_cast<Eigen::Index>(j)));
  }
  return phi;
}

Symbol extract_symbol(const LambdaToeplitz& op, const TruncationWindow& probe) {
  for (const auto& [s, c] : op.symbol().coefficients()) {
    const Character& needed = op.group().is_positive(s) ? s : s.inverse();
    if (!probe.index_of(needed)) {
      throw InvalidArgument("probe window does not cover symbol coefficient at " +
                            s.to_string(op.group().dimension()));
    }
  }
  return extract_symbol(build_finite_section(op, probe));
}

Symbol apply_weighted_shift(const LambdaToeplitz& op, const Symbol& f) {
  if (!op.symbol().is_analytic()) throw InvalidArgument("weighted-shift form requires an analytic symbol");
  if (!(f.group() == op.group())) throw VariantMismatch("function and operator live on different groups");
  if (!f.is_analytic()) throw InvalidArgument("argument must be supported in the positive cone");
  Symbol out(op.group());
  for (const auto& [xi, fc] : f.coefficients()) {
    const std::complex<double> shifted = evaluate(op.lambda(), xi) * fc;
    for (const auto& [s, c] : op.symbol().coefficients()) out.add(s * xi, c * shifted);
  }
  return out;
}

FiniteSection adjoint_section(const FiniteSection& section) {
  return {section.window, section.matrix.adjoint()};
}

}  // namespace ltoeplitz

// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double dense_sup(const ltoeplitz::Symbol& phi, std::size_t m) {
  const std::size_t d = phi.group().dimension();
  double best = 0.0;
  std::vector<double> theta(d, 0.0);
  if (d == 1) {
    for (std::size_t i = 0; i < m; ++i) best = std::max(best, std::abs(phi.at(double(i) / double(m))));
    return best;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      theta[0] = double(i) / double(m);
      theta[1] = double(j) / double(m);
      best = std::max(best, std::abs(phi(theta)));
    }
  }
  return best;
}

std::vector<cd> polynomial_roots(const std::vector<cd>& coeffs) {
  std::vector<cd> a = coeffs;
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  const std::size_t n = a.size() - 1;
  std::vector<cd> roots(n);
  const cd seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) roots[i] = std::pow(seed, double(i)) * 1.3;
  auto eval = [&](cd z) {
    cd v = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) v = v * z + a[k];
    return v / a.back();
  };
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const cd step = eval(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return roots;
}

double jensen_log_mean(const std::vector<cd>& coeffs) {
  std::vector<cd> a = coeffs;
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  double s = std::log(std::abs(a.back()));
  for (const auto& r : polynomial_roots(a)) s += std::log(std::max(1.0, std::abs(r)));
  return s;
}

double argument_principle(const ltoeplitz::Symbol& phi, std::size_t m) {
  // z phi'(z) / phi(z) averaged over the circle.
  cd total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const cd z = std::polar(1.0, kTwoPi * double(i) / double(m));
    cd value = 0.0, zderiv = 0.0;
    for (const auto& [chi, c] : phi.coefficients()) {
      const auto e = chi.exponent(0);
      const cd term = c * std::pow(z, double(e));
      value += term;
      zderiv += double(e) * term;
    }
    total += zderiv / value;
  }
  return (total / double(m)).real();
}

std::optional<ltoeplitz::Character> smallest_positive_in_box(const ltoeplitz::GroupSpec& spec,
                                                            std::int64_t bound) {
  const std::size_t d = spec.dimension();
  std::vector<std::int64_t> v(d, -bound);
  std::optional<ltoeplitz::Character> best;
  while (true) {
    const auto chi = ltoeplitz::Character::from_exponents(v);
    if (!chi.is_identity() && spec.is_positive(chi)) {
      if (!best || spec.compare(chi, *best) == std::strong_ordering::less) best = chi;
    }
    std::size_t j = 0;
    while (j < d && v[j] == bound) v[j++] = -bound;
    if (j == d) break;
    ++v[j];
  }
  return best;
}

ltoeplitz::Matrix composition_section(const ltoeplitz::LambdaToeplitz& op,
                                      const ltoeplitz::TruncationWindow& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  const ltoeplitz::Symbol psi = op.modified_symbol();
  ltoeplitz::Matrix toeplitz = ltoeplitz::Matrix::Zero(n, n);
  ltoeplitz::Matrix u = ltoeplitz::Matrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    u(c, c) = ltoeplitz::evaluate(op.lambda(), window[std::size_t(c)]);
    for (Eigen::Index r = 0; r < n; ++r) {
      toeplitz(r, c) = psi.coefficient(window[std::size_t(c)].inverse() * window[std::size_t(r)]);
    }
  }
  return u * toeplitz;
}

double naive_hausdorff(const std::vector<cd>& a, const std::vector<cd>& b) {
  auto directed = [](const std::vector<cd>& x, const std::vector<cd>& y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = INFINITY;
      for (const auto& q : y) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<cd> dense_coefficients(const ltoeplitz::Symbol& phi, std::int64_t lo, std::int64_t hi) {
  std::vector<cd> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(phi.coefficient(ltoeplitz::Character::unit(0, k)));
  return out;
}

}  // namespace oracle

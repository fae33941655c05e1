// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace ltoeplitz;
using build::cd;

namespace {

// z^3 times the degree-15 Taylor polynomial of exp(0.3 z).
Symbol z3_exp() {
  Symbol s(build::circle());
  double c = 1.0;
  for (int k = 0; k <= 15; ++k) {
    s.add(Character::unit(0, 3 + k), c);
    c *= 0.3 / double(k + 1);
  }
  return s;
}

}  // namespace

TEST(Symbol, ConstructionAndPruning) {
  Symbol s(build::circle());
  s.add(Character::unit(0, 2), 1e-16);
  EXPECT_TRUE(s.is_zero());
  s.add(Character::unit(0, 2), 1.0);
  s.add(Character::unit(0, 2), -1.0);
  EXPECT_TRUE(s.is_zero());
  EXPECT_THROW(s.add(Character::unit(1), 1.0), DimensionMismatch);
  const auto c = Symbol::constant(build::circle(), 3.0);
  EXPECT_EQ(c.coefficient(Character{}), cd(3.0));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_THROW((void)(Symbol(build::circle()) + Symbol(build::lex(2))), VariantMismatch);
}

TEST(Symbol, AnalyticParts) {
  const auto s = build::laurent({{-2, 1.0}, {0, 2.0}, {3, cd(0, 1)}});
  EXPECT_FALSE(s.is_analytic());
  EXPECT_TRUE(s.analytic_part().is_analytic());
  EXPECT_EQ(s.analytic_part() + s.coanalytic_part(), s);
  EXPECT_EQ(s.coanalytic_part().size(), 1u);
  EXPECT_EQ(s.max_degree(), 3);
}

TEST(Symbol, EvaluationMatchesDirectSum) {
  const auto s = build::laurent({{-1, cd(0.5, 1)}, {2, 3.0}});
  for (double t : {0.0, 0.1, 0.37, 0.9}) {
    const cd z = std::polar(1.0, 2 * std::numbers::pi * t);
    EXPECT_LT(std::abs(s.at(t) - (cd(0.5, 1) / z + 3.0 * z * z)), 1e-13);
  }
  EXPECT_LT(std::abs(s.conjugate().at(0.37) - std::conj(s.at(0.37))), 1e-13);
}

TEST(ModifiedSymbol, Examples) {
  const auto phi = build::laurent({{-1, 1.0}, {0, 2.0}, {1, 1.0}});
  EXPECT_EQ(modified_symbol(phi, GroupPoint::identity(build::circle())), phi);
  const auto twisted = modified_symbol(build::z_plus_2(), build::turn(1, 2));
  EXPECT_EQ(twisted, build::laurent({{0, 2.0}, {1, -1.0}}));
  const auto minus = build::laurent({{-3, 1.0}, {-1, cd(0, 2)}});
  EXPECT_EQ(modified_symbol(minus, build::golden()), minus);
}

TEST(RotateSymbol, Examples) {
  const auto z = build::laurent({{1, 1.0}});
  EXPECT_EQ(rotate_symbol(z, build::golden(), 0), z);
  EXPECT_EQ(rotate_symbol(z, build::turn(1, 4), 1), build::laurent({{1, cd(0, -1)}}));
  const auto c = Symbol::constant(build::circle(), 2.5);
  EXPECT_EQ(rotate_symbol(c, build::golden(), 7), c);
}

TEST(RotateSymbol, IsAnAction) {
  std::mt19937_64 rng(5);
  const auto g = build::lex(2);
  const auto l = build::turns({Angle::rational(1, 6), Angle::rational(2, 5)});
  // Two unit-phase products against one: equal up to rounding in general, and
  // exactly for quarter turns where every phase is a signed unit.
  const auto quarter = build::turns({Angle::rational(1, 4), Angle::rational(3, 4)});
  for (int i = 0; i < 20; ++i) {
    const auto phi = build::random_symbol(rng, g, 6, 3);
    for (std::int64_t j : {0, 1, 4}) {
      for (std::int64_t k : {0, 2, 5}) {
        EXPECT_LT(coefficient_distance(rotate_symbol(rotate_symbol(phi, l, j), l, k), rotate_symbol(phi, l, j + k)),
                  4e-16);
        EXPECT_EQ(rotate_symbol(rotate_symbol(phi, quarter, j), quarter, k), rotate_symbol(phi, quarter, j + k));
      }
    }
  }
}

TEST(Multiply, Examples) {
  const auto phi = build::z_plus_2();
  EXPECT_EQ(multiply(phi, Symbol::constant(build::circle(), 1.0)), phi);
  EXPECT_EQ(multiply(phi, phi), build::laurent({{0, 4.0}, {1, 4.0}, {2, 1.0}}));
  const auto g = build::lex(2);
  const auto a = Character::from_exponents({1, -2});
  const auto b = Character::from_exponents({3, 5});
  EXPECT_EQ(multiply(Symbol::monomial(g, a), Symbol::monomial(g, b)), Symbol::monomial(g, a * b));
}

TEST(Multiply, AgreesWithPointwiseProductOnGrid) {
  std::mt19937_64 rng(9);
  for (const auto& g : {build::circle(), build::lex(2)}) {
    const auto phi = build::random_symbol(rng, g, 5, 3);
    const auto psi = build::random_symbol(rng, g, 5, 3);
    const auto prod = multiply(phi, psi);
    double worst = 0.0;
    std::vector<double> theta(g.dimension());
    for (int i = 0; i < 13; ++i) {
      for (int j = 0; j < 13; ++j) {
        theta[0] = i / 13.0;
        if (g.dimension() == 2) theta[1] = j / 13.0;
        worst = std::max(worst, std::abs(prod(theta) - phi(theta) * psi(theta)));
      }
    }
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(BigPhi, Examples) {
  const auto phi = build::z_plus_2();
  EXPECT_EQ(big_phi(phi, build::turn(1, 2), 1), modified_symbol(phi, build::turn(1, 2)));
  EXPECT_EQ(big_phi(phi, GroupPoint::identity(build::circle()), 2), multiply(phi, phi));
  EXPECT_EQ(big_phi(phi, GroupPoint::identity(build::circle()), 2),
            build::laurent({{0, 4.0}, {1, 4.0}, {2, 1.0}}));
  EXPECT_EQ(big_phi(build::laurent({{1, 1.0}}), build::turn(1, 2), 2), build::laurent({{2, -1.0}}));
  // (2 - z)(2 + z) = 4 - z^2.
  EXPECT_EQ(big_phi(phi, build::turn(1, 2), 2), build::laurent({{0, 4.0}, {2, -1.0}}));
}

TEST(BigPhi, TrivialLambdaIsPower) {
  std::mt19937_64 rng(13);
  const auto one = GroupPoint::identity(build::lex(2));
  for (int i = 0; i < 10; ++i) {
    const auto phi = build::random_symbol(rng, build::lex(2), 4, 2);
    Symbol power = phi;
    for (int q = 2; q <= 3; ++q) {
      power = multiply(power, phi);
      EXPECT_EQ(big_phi(phi, one, q), power);
    }
  }
}

TEST(SupNorm, Examples) {
  EXPECT_NEAR(sup_norm(Symbol::constant(build::circle(), cd(3, 4))), 5.0, 1e-12);
  EXPECT_NEAR(sup_norm(build::z_plus_2()), 3.0, 1e-9);
  EXPECT_NEAR(sup_norm(build::z_minus_half()), 1.5, 1e-9);
  EXPECT_NEAR(oracle::dense_sup(build::z_minus_half(), 1 << 16), 1.5, 1e-8);
}

TEST(SupNorm, AgreesWithDenseSampling) {
  std::mt19937_64 rng(17);
  for (const auto& g : {build::circle(), build::lex(2)}) {
    for (int i = 0; i < 5; ++i) {
      const auto phi = build::random_symbol(rng, g, 5, 3);
      const double dense = oracle::dense_sup(phi, g.dimension() == 1 ? 1 << 16 : 1024);
      const double s = sup_norm(phi);
      EXPECT_GE(s, dense - 1e-12);
      EXPECT_LT(s - dense, 1e-4 * std::max(1.0, dense));
    }
  }
  EXPECT_NEAR(min_modulus(build::z_plus_2()), 1.0, 1e-9);
}

TEST(LogMean, Examples) {
  EXPECT_NEAR(log_mean(Symbol::constant(build::circle(), -3.0)), std::log(3.0), 1e-14);
  EXPECT_NEAR(log_mean(build::z_plus_2()), std::log(2.0), 1e-8);
  EXPECT_NEAR(log_mean(build::z_minus_half()), 0.0, 1e-8);
  EXPECT_NEAR(oracle::jensen_log_mean({2.0, 1.0}), std::log(2.0), 1e-14);
  EXPECT_NEAR(oracle::jensen_log_mean({-0.5, 1.0}), 0.0, 1e-14);
  EXPECT_THROW((void)log_mean(build::laurent({{0, -1.0}, {1, 1.0}})), SymbolVanishes);
}

TEST(LogMean, AgreesWithJensen) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    std::vector<cd> a;
    for (int k = 0; k < 5; ++k) a.push_back(build::random_coefficient(rng));
    Symbol phi(build::circle());
    for (std::size_t k = 0; k < a.size(); ++k) phi.add(Character::unit(0, std::int64_t(k)), a[k]);
    if (min_modulus(phi) < 0.05) continue;
    EXPECT_NEAR(log_mean(phi), oracle::jensen_log_mean(a), 1e-8) << i;
  }
}

TEST(LogMean, AdditiveUnderProducts) {
  const auto phi = build::z_plus_2();
  const auto psi = build::laurent({{-1, 0.3}, {0, 1.0}});
  EXPECT_NEAR(log_mean(multiply(phi, psi)), log_mean(phi) + log_mean(psi), 2e-8);
  const auto g = build::lex(2);
  const auto a = build::terms(g, {{{0, 0}, 3.0}, {{1, 0}, 1.0}, {{0, 1}, 0.5}});
  const auto b = build::terms(g, {{{0, 0}, 1.0}, {{1, -1}, 0.25}});
  EXPECT_NEAR(log_mean(multiply(a, b), 256), log_mean(a, 256) + log_mean(b, 256), 2e-8);
}

TEST(Winding, Examples) {
  const auto f = z3_exp();
  EXPECT_NEAR(oracle::argument_principle(f, 4096), 3.0, 1e-9);
  EXPECT_EQ(winding_index(f), 3);
  EXPECT_EQ(winding_index(build::z_plus_2()), 0);
  EXPECT_FALSE(winding_index(Symbol::monomial(build::lex(2), Character::unit(0))).has_value());
  EXPECT_EQ(winding_character(Symbol::monomial(build::lex(2), Character::unit(0))), Character::unit(0));
  EXPECT_THROW((void)winding_character(Symbol(build::circle())), SymbolVanishes);
  EXPECT_THROW((void)winding_character(build::laurent({{0, 1.0}, {1, 1.0}})), SymbolVanishes);
}

TEST(Winding, AgreesWithArgumentPrinciple) {
  std::mt19937_64 rng(23);
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    const auto phi = build::random_symbol(rng, build::circle(), 4, 4);
    if (min_modulus(phi) < 0.05) continue;
    const double ap = oracle::argument_principle(phi, 1 << 14);
    EXPECT_NEAR(ap, std::round(ap), 1e-6);
    EXPECT_EQ(winding_character(phi).exponent(0), std::llround(ap));
    ++compared;
  }
  EXPECT_GT(compared, 10);
}

TEST(Winding, AdditiveUnderProducts) {
  const auto g = build::lex(2);
  const auto a = build::terms(g, {{{0, 1}, 1.0}, {{0, 0}, 0.3}});
  const auto b = build::terms(g, {{{0, 2}, 1.0}, {{1, 0}, 0.2}});
  const auto ia = winding_index(a), ib = winding_index(b), iab = winding_index(multiply(a, b));
  ASSERT_TRUE(ia && ib && iab);
  EXPECT_EQ(*iab, *ia + *ib);
  EXPECT_EQ(*ia, 1);
  EXPECT_EQ(*ib, 2);
  const auto c = build::laurent({{-2, 1.0}, {0, 0.1}});
  EXPECT_EQ(*winding_index(multiply(build::z_minus_half(), c)), 1 - 2);
}

TEST(Invertibility, Examples) {
  const auto a = invertibility_report(build::z_plus_2());
  EXPECT_TRUE(a.in_c_inv);
  EXPECT_EQ(a.in_a_inv, std::optional<bool>(true));
  const auto b = invertibility_report(build::z_minus_half());
  EXPECT_TRUE(b.in_c_inv);
  EXPECT_EQ(b.in_a_inv, std::optional<bool>(false));
  const auto c = invertibility_report(build::laurent({{0, -1.0}, {1, 1.0}}));
  EXPECT_FALSE(c.in_c_inv);
  EXPECT_FALSE(c.in_a_inv.has_value());
}

TEST(SampledFunction, GridLayout) {
  const auto g = build::lex(2);
  const auto phi = build::terms(g, {{{1, 0}, 1.0}, {{0, 2}, cd(0, 1)}});
  const auto s = SampledFunction::sample(phi, 8);
  EXPECT_EQ(s.values().size(), 64u);
  const std::size_t idx[2] = {3, 5};
  const double theta[2] = {3 / 8.0, 5 / 8.0};
  EXPECT_LT(std::abs(s.at(idx) - phi(theta)), 1e-14);
  EXPECT_THROW((void)SampledFunction::sample(phi, 4), InvalidArgument);
}

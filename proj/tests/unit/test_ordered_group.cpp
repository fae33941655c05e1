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

std::strong_ordering cmp(const GroupSpec& g, std::initializer_list<std::int64_t> a,
                         std::initializer_list<std::int64_t> b) {
  return g.compare(Character::from_exponents(a), Character::from_exponents(b));
}

}  // namespace

TEST(Character, GroupLaw) {
  const auto a = Character::from_exponents({1, -2, 0});
  const auto b = Character::from_exponents({-1, 2, 5});
  EXPECT_EQ((a * b), Character::unit(2, 5));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(a.pow(0), Character{});
  EXPECT_EQ(a.to_string(3), "(1,-2,0)");
  EXPECT_EQ(a.support_end(), 2u);
  EXPECT_THROW((void)a.dense(1), DimensionMismatch);
}

TEST(Compare, ExamplesFromDefinitions) {
  EXPECT_EQ(cmp(build::lex(2), {0, 5}, {1, -100}), std::strong_ordering::less);
  EXPECT_EQ(cmp(build::circle(), {3}, {3}), std::strong_ordering::equal);
  // Oracle: the real images 1 and sqrt 2 computed directly.
  const auto g = build::sqrt2_line();
  const long double img_a = 1.0L, img_b = std::sqrt(2.0L);
  ASSERT_LT(img_a, img_b);
  EXPECT_EQ(cmp(g, {1, 0}, {0, 1}), std::strong_ordering::less);
  EXPECT_NEAR(double(g.real_image(Character::from_exponents({3, -2}))), 3.0 - 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(Compare, RealEmbeddedMatchesDirectImages) {
  const auto g = build::sqrt2_line();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = build::random_character(rng, 2, 40);
    const auto b = build::random_character(rng, 2, 40);
    const double ia = double(a.exponent(0)) + double(a.exponent(1)) * std::numbers::sqrt2;
    const double ib = double(b.exponent(0)) + double(b.exponent(1)) * std::numbers::sqrt2;
    if (a == b) {
      EXPECT_EQ(g.compare(a, b), std::strong_ordering::equal);
    } else {
      EXPECT_EQ(g.compare(a, b) == std::strong_ordering::less, ia < ib);
    }
  }
}

TEST(Compare, TieWithinGuardThrows) {
  // 665857 - 470832 sqrt 2 is about 7.5e-7, relative size 6e-13.
  const auto g = GroupSpec::real_embedded({1.0L, std::sqrt(2.0L)}, 1e-12L);
  EXPECT_THROW((void)g.sign(Character::from_exponents({665857, -470832})), OrderTie);
  EXPECT_EQ(g.sign(Character::from_exponents({99, -70})), 1);
}

TEST(GroupSpec, Validation) {
  EXPECT_THROW((void)GroupSpec::lattice_lex(0), InvalidArgument);
  EXPECT_THROW((void)GroupSpec::real_embedded({}), InvalidArgument);
  EXPECT_THROW((void)GroupSpec::real_embedded({2.0L, 3.0L}), InvalidArgument);
  EXPECT_THROW((void)GroupSpec::real_embedded({1.0L, 1.5L}), InvalidArgument);
  EXPECT_THROW((void)build::circle().sign(Character::unit(1)), DimensionMismatch);
}

TEST(OrderProperties, TotalityAndTranslationInvariance) {
  std::mt19937_64 rng(11);
  for (const auto& g : {build::circle(), build::lex(2), build::lex(3), build::sqrt2_line()}) {
    for (int i = 0; i < 300; ++i) {
      const auto chi = build::random_character(rng, g.dimension(), 20);
      const auto xi = build::random_character(rng, g.dimension(), 20);
      const auto eta = build::random_character(rng, g.dimension(), 20);
      const auto o = g.compare(xi, eta);
      const int outcomes = (o == std::strong_ordering::less) + (o == std::strong_ordering::equal) +
                           (o == std::strong_ordering::greater);
      EXPECT_EQ(outcomes, 1);
      EXPECT_EQ(o == std::strong_ordering::equal, xi == eta);
      EXPECT_EQ(g.compare(chi * xi, chi * eta), o);
      EXPECT_EQ(g.compare(eta, xi), 0 <=> o);
    }
  }
}

TEST(OrderProperties, ConeAxiomsOnBox) {
  for (const auto& g : {build::circle(), build::lex(2), build::lex(3), build::sqrt2_line()}) {
    std::vector<std::int64_t> v(g.dimension(), -4);
    while (true) {
      const auto chi = Character::from_exponents(v);
      const bool pos = g.is_positive(chi), neg = g.is_positive(chi.inverse());
      EXPECT_TRUE(pos || neg);
      EXPECT_EQ(pos && neg, chi.is_identity());
      std::size_t j = 0;
      while (j < v.size() && v[j] == 4) v[j++] = -4;
      if (j == v.size()) break;
      ++v[j];
    }
  }
}

TEST(SmallestPositive, Examples) {
  EXPECT_EQ(smallest_positive(build::circle()), Character::unit(0));
  EXPECT_EQ(smallest_positive(build::lex(2)), Character::unit(1));
  EXPECT_EQ(smallest_positive(build::lex(3)), Character::unit(2));
  EXPECT_FALSE(smallest_positive(build::sqrt2_line()).has_value());
}

TEST(SmallestPositive, AgreesWithEnumeration) {
  for (std::size_t d : {1u, 2u, 3u}) {
    const auto g = build::lex(d);
    EXPECT_EQ(oracle::smallest_positive_in_box(g, 5), smallest_positive(g)) << d;
  }
}

TEST(SmallestPositive, RealEmbeddedHasEverSmallerPositives) {
  // Growing boxes keep producing smaller positive elements, so no minimum exists.
  const auto g = build::sqrt2_line();
  long double previous = INFINITY;
  for (std::int64_t bound : {2, 8, 32, 128}) {
    const auto m = oracle::smallest_positive_in_box(g, bound);
    ASSERT_TRUE(m.has_value());
    const long double img = g.real_image(*m);
    EXPECT_GT(img, 0.0L);
    EXPECT_LT(img, previous);
    previous = img;
  }
}

TEST(RotationIndex, Examples) {
  for (std::int64_t n : {0, 1, 4, 17}) EXPECT_EQ(rotation_index(Character::unit(0, n), build::circle()), n);
  EXPECT_EQ(rotation_index(Character::from_exponents({0, 3}), build::lex(2)), 3);
  EXPECT_FALSE(rotation_index(Character::from_exponents({1, 0}), build::lex(2)).has_value());
  EXPECT_FALSE(rotation_index(Character::from_exponents({1, 1}), build::sqrt2_line()).has_value());
  EXPECT_EQ(rotation_index(Character{}, build::sqrt2_line()), 0);
}

TEST(RotationIndexBruteforce, Examples) {
  EXPECT_EQ(rotation_index_bruteforce(Character::unit(0, 5), build::circle(), 100).count, 5);
  EXPECT_EQ(rotation_index_bruteforce(Character::from_exponents({0, 3}), build::lex(2), 10).count, 3);
  EXPECT_TRUE(rotation_index_bruteforce(Character::from_exponents({1, 0}), build::lex(2), 10).exceeds_bound());
  EXPECT_THROW((void)rotation_index_bruteforce(Character::unit(0, -1), build::circle(), 10), InvalidArgument);
  EXPECT_THROW((void)rotation_index_bruteforce(Character::unit(0, 1), build::circle(), 0), InvalidArgument);
}

TEST(RotationIndexBruteforce, HandEnumeratedSet) {
  // X_+ minus (0,3) X_+ on Z^2 lex is {(0,0), (0,1), (0,2)}.
  const auto g = build::lex(2);
  const auto chi = Character::from_exponents({0, 3});
  int count = 0;
  for (std::int64_t a = -6; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      const auto xi = Character::from_exponents({a, b});
      if (g.is_positive(xi) && !g.is_positive(chi.inverse() * xi)) {
        EXPECT_EQ(a, 0);
        EXPECT_TRUE(b >= 0 && b < 3);
        ++count;
      }
    }
  }
  EXPECT_EQ(count, 3);
}

TEST(RotationIndex, AgreesWithBruteforceOnBoxes) {
  for (std::size_t d : {1u, 2u, 3u}) {
    const auto g = build::lex(d);
    for (const auto& chi : ExponentBox::cube(d, d == 3 ? 3 : 8).positive_elements(g)) {
      const auto brute = rotation_index_bruteforce(chi, g, d == 3 ? 10 : 18);
      const auto formula = rotation_index(chi, g);
      if (!brute.exceeds_bound()) {
        EXPECT_EQ(formula, brute.count) << chi.to_string(d);
      } else {
        EXPECT_FALSE(formula.has_value()) << chi.to_string(d);
      }
    }
  }
}

TEST(RotationIndex, HomomorphismOnCyclicPart) {
  const auto g = build::lex(2);
  for (std::int64_t a = -5; a <= 5; ++a) {
    for (std::int64_t b = -5; b <= 5; ++b) {
      const auto x = Character::from_exponents({0, a});
      const auto y = Character::from_exponents({0, b});
      EXPECT_EQ(*rotation_index(x * y, g), *rotation_index(x, g) + *rotation_index(y, g));
    }
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(build::turn(1, 2), Character::unit(0, 3)), cd(-1.0, 0.0));
  const auto l = build::turns({Angle::rational(0, 1), Angle::rational(1, 3)});
  const cd expected = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  EXPECT_LT(std::abs(evaluate(l, Character::from_exponents({2, 1})) - expected), 1e-15);

  const auto g = build::sqrt2_line();
  const auto t1 = GroupPoint::real_parameter(1.0L, g);
  const cd direct = std::polar(1.0, 2.0 * std::numbers::pi * (1.0 + std::numbers::sqrt2));
  EXPECT_LT(std::abs(evaluate(t1, Character::from_exponents({1, 1})) - direct), 1e-14);
  EXPECT_EQ(evaluate(build::turn(1, 4), Character::unit(0)), cd(0.0, 1.0));
}

TEST(Evaluate, Multiplicative) {
  std::mt19937_64 rng(3);
  const auto g2 = build::lex(2);
  const std::vector<std::pair<GroupSpec, GroupPoint>> points = {
      {build::circle(), build::golden()},
      {build::circle(), build::turn(3, 7)},
      {g2, build::turns({Angle::rational(1, 2), Angle::real(0.123456789L)})},
      {build::sqrt2_line(), GroupPoint::real_parameter(0.3L, build::sqrt2_line())}};
  for (const auto& [g, l] : points) {
    for (int i = 0; i < 200; ++i) {
      const auto a = build::random_character(rng, g.dimension(), 50);
      const auto b = build::random_character(rng, g.dimension(), 50);
      EXPECT_LT(std::abs(evaluate(l, a * b) - evaluate(l, a) * evaluate(l, b)), 1e-12);
      EXPECT_NEAR(std::abs(evaluate(l, a)), 1.0, 1e-15);
    }
  }
}

TEST(GroupPoint, Compatibility) {
  EXPECT_THROW(build::golden().check_compatible(build::lex(2)), VariantMismatch);
  EXPECT_THROW(build::golden().check_compatible(build::sqrt2_line()), VariantMismatch);
  EXPECT_THROW((void)GroupPoint::real_parameter(0.1L, build::circle()), VariantMismatch);
  EXPECT_THROW((void)Angle::rational(1, 0), InvalidArgument);
  EXPECT_EQ(Angle::rational(3, 2), Angle::rational(1, 2));
  EXPECT_EQ(build::turn(1, 3).inverse().angles()[0], Angle::rational(2, 3));
}

TEST(OrderOfPoint, Examples) {
  EXPECT_EQ(order_of_point(build::turn(1, 2)), 2);
  EXPECT_EQ(order_of_point(build::turns({Angle::rational(1, 2), Angle::rational(1, 3)})), 6);
  EXPECT_FALSE(order_of_point(build::golden()).has_value());
  EXPECT_EQ(order_of_point(build::turn(0, 1)), 1);
}

TEST(IsPrimitiveRootAt, Examples) {
  EXPECT_TRUE(is_primitive_root_at(build::turn(1, 2), Character::unit(0), 2));
  EXPECT_FALSE(is_primitive_root_at(build::turn(1, 2), Character::unit(0, 2), 2));
  const auto l = build::turns({Angle::rational(0, 1), Angle::rational(1, 3)});
  EXPECT_TRUE(is_primitive_root_at(l, Character::from_exponents({0, 1}), 3));
  EXPECT_FALSE(is_primitive_root_at(l, Character::from_exponents({0, 1}), 6));
  EXPECT_THROW((void)is_primitive_root_at(l, Character{}, 0), InvalidArgument);
}

TEST(IsProbableGenerator, Heuristic) {
  EXPECT_TRUE(is_probable_generator(build::golden()));
  EXPECT_FALSE(is_probable_generator(build::turn(1, 3)));
  EXPECT_TRUE(is_probable_generator(build::turns({Angle::real(build::kGolden), Angle::real(std::sqrt(2.0L) - 1)})));
  // Coordinates satisfying theta_1 = theta_2 obey an integer relation.
  EXPECT_FALSE(is_probable_generator(build::turns({Angle::real(build::kGolden), Angle::real(build::kGolden)})));
}

// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace ltoeplitz;
using build::cd;

namespace {

std::vector<TruncationWindow> leading_windows(const GroupSpec& g, std::initializer_list<std::size_t> sizes) {
  std::vector<TruncationWindow> out;
  for (auto n : sizes) out.push_back(TruncationWindow::leading(g, n));
  return out;
}

}  // namespace

TEST(DefiningRelation, Examples) {
  std::mt19937_64 rng(53);
  const auto phi = build::random_symbol(rng, build::circle(), 6, 3);
  const auto w = TruncationWindow::leading(build::circle(), 24);
  const auto classical = check_defining_relation(LambdaToeplitz(GroupPoint::identity(build::circle()), phi), w);
  EXPECT_TRUE(classical.passed);
  EXPECT_EQ(classical.residuals.at("max_residual"), 0.0);

  const auto r = check_defining_relation(LambdaToeplitz(build::turn(1, 4), build::z_plus_2()),
                                         TruncationWindow::leading(build::circle(), 64));
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.residuals.at("max_residual"), 1e-13);
}

TEST(DefiningRelation, InjectedFaultIsDetected) {
  const LambdaToeplitz op(build::turn(1, 4), build::z_plus_2());
  auto s = build_finite_section(op, TruncationWindow::leading(build::circle(), 32));
  EXPECT_TRUE(check_defining_relation(s, op.lambda()).passed);
  s.matrix(3, 1) += 1e-3;
  const auto r = check_defining_relation(s, op.lambda());
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.residuals.at("max_residual"), 1e-3, 1e-9);
}

TEST(DefiningRelation, RandomOperatorsOnAllGroups) {
  for (const auto& op : random_operators(99, 6)) {
    const auto r = check_defining_relation(op, TruncationWindow::leading(op.group(), 40));
    EXPECT_TRUE(r.passed) << r.detail;
  }
}

TEST(NormIdentity, Examples) {
  const auto c = LambdaToeplitz(build::golden(), Symbol::constant(build::circle(), cd(0.6, 0.8)));
  const auto rc = check_norm_identity(c, leading_windows(build::circle(), {1}), 1e-12);
  EXPECT_TRUE(rc.passed) << rc.detail;

  const auto zp2 = LambdaToeplitz(GroupPoint::identity(build::circle()), build::z_plus_2());
  const auto r = check_norm_identity(zp2, leading_windows(build::circle(), {16, 64, 256}), 1e-3);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_GE(r.residuals.at("sigma_max[256]"), 2.99);

  const auto z = LambdaToeplitz(build::golden(), build::laurent({{1, 1.0}}));
  const auto rz = check_norm_identity(z, leading_windows(build::circle(), {2, 3, 10, 50}), 1e-12);
  EXPECT_TRUE(rz.passed);
  for (auto n : {2, 3, 10, 50}) EXPECT_NEAR(rz.residuals.at("sigma_max[" + std::to_string(n) + "]"), 1.0, 1e-14);
}

TEST(NormIdentity, RejectsUnnestedWindowsAndTightGaps) {
  const auto op = LambdaToeplitz(GroupPoint::identity(build::circle()), build::z_plus_2());
  EXPECT_THROW((void)check_norm_identity(op, leading_windows(build::circle(), {8, 4}), 1.0), InvalidArgument);
  EXPECT_FALSE(check_norm_identity(op, leading_windows(build::circle(), {4, 8}), 1e-6).passed);
}

TEST(PowerFactorization, Examples) {
  const auto w = TruncationWindow::leading(build::circle(), 48);
  const auto k1 = check_power_factorization(LambdaToeplitz(build::golden(), build::laurent({{-1, 0.3}, {0, 1.0}})), w, 1);
  EXPECT_TRUE(k1.passed);
  EXPECT_EQ(k1.residuals.at("factorization"), 0.0);

  const LambdaToeplitz half(build::turn(1, 2), build::z_plus_2());
  const auto k2 = check_power_factorization(half, w, 2);
  EXPECT_TRUE(k2.passed) << k2.detail;
  EXPECT_LT(k2.residuals.at("factorization"), 1e-12);

  const LambdaToeplitz analytic(build::golden(), build::laurent({{0, 0.5}, {1, 1.0}, {2, cd(0, 0.25)}}));
  const auto k3 = check_power_factorization(analytic, w, 3);
  EXPECT_TRUE(k3.passed) << k3.detail;
  EXPECT_LT(k3.residuals.at("weighted_shift"), 1e-14);
}

TEST(PowerFactorization, LaurentSymbolsOnTwoTorus) {
  std::mt19937_64 rng(59);
  const auto g = build::lex(2);
  const auto w = TruncationWindow::from_box(g, ExponentBox::cube(2, 6));
  const auto l = build::turns({Angle::rational(1, 5), Angle::real(0.3L)});
  const auto phi = build::random_symbol(rng, g, 5, 1);
  for (unsigned k : {1u, 2u, 3u}) {
    const auto r = check_power_factorization(LambdaToeplitz(l, phi), w, k);
    EXPECT_TRUE(r.passed) << r.detail;
  }
}

TEST(RootCount, AgreesWithArgumentPrinciple) {
  std::mt19937_64 rng(61);
  int compared = 0;
  for (int i = 0; i < 30; ++i) {
    const auto phi = build::random_symbol(rng, build::circle(), 5, 4);
    if (min_modulus(phi) < 0.05) continue;
    EXPECT_EQ(winding_by_root_count(phi), std::llround(oracle::argument_principle(phi, 1 << 14)));
    ++compared;
  }
  EXPECT_GT(compared, 10);
  EXPECT_EQ(winding_by_root_count(build::laurent({{-2, 1.0}, {0, 0.1}})), -2);
  EXPECT_THROW((void)winding_by_root_count(build::laurent({{0, -1.0}, {1, 1.0}})), Error);
}

TEST(IndexSuite, Examples) {
  const auto chi = Character::unit(0);
  const auto shift = check_index_suite(LambdaToeplitz(GroupPoint::identity(build::circle()), build::laurent({{1, 1.0}})),
                                       {{0.0, -1}}, 1, chi);
  EXPECT_TRUE(shift.passed) << shift.detail;

  const LambdaToeplitz z_half(build::turn(1, 2), build::laurent({{1, 1.0}}));
  const auto r = check_index_suite(z_half, {{0.5, -1}, {-0.5, -1}}, 2, chi);
  EXPECT_TRUE(r.passed) << r.detail;

  const auto zp2 = check_index_suite(LambdaToeplitz(build::turn(1, 2), build::z_plus_2()), {{0.0, 0}}, 2, chi);
  EXPECT_TRUE(zp2.passed) << zp2.detail;

  const auto wrong = check_index_suite(z_half, {{0.5, 0}}, 2, chi);
  EXPECT_FALSE(wrong.passed);
  EXPECT_EQ(wrong.residuals.at("expectation_failures"), 1.0);
}

TEST(IndexSuite, TwoTorus) {
  const auto g = build::lex(2);
  const auto l = build::turns({Angle::rational(0, 1), Angle::rational(1, 3)});
  const auto phi = build::terms(g, {{{0, 1}, 1.0}, {{0, 0}, 0.5}});
  const auto r = check_index_suite(LambdaToeplitz(l, phi), {{0.0, -1}, {cd(0.3, 0.1), -1}}, 3, Character::unit(1));
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(SpectrumShapes, Examples) {
  std::vector<ShapeCase> cases;
  cases.push_back({"zp2", LambdaToeplitz(build::golden(), build::z_plus_2()), "Circle", 2.0, 1e-6, {64, 128, 256},
                   {{1.0, ProbeExpectation::OffSpectrum, 0.5}, {cd(0, 2), ProbeExpectation::OnSpectrum, 0.05},
                    {3.0, ProbeExpectation::OffSpectrum, 0.5}}});
  cases.push_back({"zmhalf", LambdaToeplitz(build::golden(), build::z_minus_half()), "Disk", 1.0, 1e-6, {64, 128},
                   {{0.5, ProbeExpectation::OnSpectrum, 1e-6}, {1.5, ProbeExpectation::OffSpectrum, 0.4}}});
  cases.push_back({"constant", LambdaToeplitz(build::golden(), Symbol::constant(build::circle(), 1.5)), "Circle", 1.5,
                   1e-12, {64, 128},
                   {{0.5, ProbeExpectation::OffSpectrum, 0.9}, {3.0, ProbeExpectation::OffSpectrum, 1.4}}});
  const auto r = check_spectrum_shapes(cases);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.residuals.at("constant.radius"), 1.5);

  cases[0].expected_variant = "Disk";
  EXPECT_FALSE(check_spectrum_shapes({cases[0]}).passed);
}

TEST(Noncompactness, Examples) {
  const auto w = TruncationWindow::leading(build::circle(), 32);
  EXPECT_TRUE(check_noncompactness(LambdaToeplitz(build::golden(), Symbol(build::circle())), w).passed);
  const auto r = check_noncompactness(LambdaToeplitz(build::turn(1, 4), build::z_plus_2()), w);
  EXPECT_TRUE(r.passed) << r.detail;
  // The moduli along each diagonal are the coefficient moduli 2 and 1.
  const auto s = build_finite_section(LambdaToeplitz(build::turn(1, 4), build::z_plus_2()), w);
  for (Eigen::Index i = 0; i < 32; ++i) EXPECT_NEAR(std::abs(s.matrix(i, i)), 2.0, 1e-15);
  for (Eigen::Index i = 1; i < 32; ++i) EXPECT_NEAR(std::abs(s.matrix(i, i - 1)), 1.0, 1e-15);
  for (const auto& op : random_operators(5, 6)) {
    EXPECT_TRUE(check_noncompactness(op, TruncationWindow::leading(op.group(), 32)).passed);
  }
}

TEST(NegativeControl, CounterexampleDetected) {
  const auto r = check_negative_control();
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_LT(r.residuals.at("essential_curve_error"), 1e-3);
  EXPECT_EQ(r.residuals.at("big_phi_coefficient_error"), 0.0);
  EXPECT_GT(r.residuals.at("lifted_curve_mismatch"), 0.1);
  EXPECT_GT(r.residuals.at("lifted_disk_mismatch"), 0.1);
  EXPECT_LT(r.residuals.at("twin_lift_consistency"), 1e-3);
}

TEST(RotationIndexOracle, SmallBoxes) {
  for (std::size_t d : {1u, 2u}) {
    const auto r = check_rotation_index_oracle(build::lex(d), 4, 12);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.residuals.at("mismatches"), 0.0);
    EXPECT_GT(r.residuals.at("finite_agreements"), 0.0);
  }
}

TEST(SpectralRadiusCheck, JensenCases) {
  std::vector<RadiusCase> cases = {
      {"zp2", LambdaToeplitz(build::golden(), build::z_plus_2()), 2.0, 1e-6, 128, {16}, 0.1},
      {"zmhalf", LambdaToeplitz(build::golden(), build::z_minus_half()), 1.0, 1e-6, 0, {}, 0.1}};
  const auto r = check_spectral_radius(cases);
  EXPECT_TRUE(r.passed) << r.detail;
  cases[1].expected = 1.1;
  EXPECT_FALSE(check_spectral_radius(cases).passed);
}

TEST(Reports, Deterministic) {
  const LambdaToeplitz op(build::turn(2, 5), build::laurent({{-1, 0.3}, {0, 1.0}, {1, cd(0, 0.4)}}));
  const auto w = TruncationWindow::leading(build::circle(), 32);
  const auto a = check_power_factorization(op, w, 3);
  const auto b = check_power_factorization(op, w, 3);
  EXPECT_EQ(a.residuals, b.residuals);
  EXPECT_EQ(a.detail, b.detail);
}

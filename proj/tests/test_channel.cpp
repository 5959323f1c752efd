#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gaussrd/test_channel.hpp"
#include "gaussrd/verify.hpp"

using namespace gaussrd;

namespace {

const GaussianSource kUnit(1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST(Assemble, IndependentUnitNoises) {
  TestChannel ch;
  ch.sigma1_sq = ch.sigma2_sq = ch.sigma3_sq = ch.sigma4_sq = 1.0;
  const auto c = assemble_msr_covariance(kUnit, ch);
  EXPECT_DOUBLE_EQ(c(kXPrime, kXPrime), 0.5);
  EXPECT_DOUBLE_EQ(c(kU2, kU3), 0.5);
  EXPECT_DOUBLE_EQ(c(kU1, kU1), 2.0);
  EXPECT_DOUBLE_EQ(c(kX, kXPrime), 0.5);
  EXPECT_DOUBLE_EQ(c(kXPrime, kU1), 0.0);
  EXPECT_DOUBLE_EQ(c(kU2, kU2), 1.5);
}

TEST(Assemble, InnovationIsOrthogonalToFirstLayer) {
  TestChannel ch;
  ch.sigma1_sq = 0.3;
  ch.sigma2_sq = 0.4;
  ch.sigma3_sq = 0.6;
  ch.rho = -0.4;
  const GaussianSource src(2.0);
  const auto c = assemble_msr_covariance(src, ch);
  const double vxp = 0.3 * 2.0 / 2.3;
  EXPECT_NEAR(c(kXPrime, kXPrime), vxp, 1e-15);
  // X' is the estimation error of X from U1.
  EXPECT_NEAR(conditional_mmse(c, kX, {kU1}).error_variance, vxp, 1e-14);
  EXPECT_NEAR(c(kU2, kU3), vxp - 0.4 * std::sqrt(0.4 * 0.6), 1e-15);
  EXPECT_TRUE(std::isinf(ch.sigma4_sq));
  EXPECT_DOUBLE_EQ(c(kU4, kU4), 1.0);
}

TEST(Assemble, RejectsBadChannels) {
  TestChannel ch;
  ch.sigma2_sq = -1.0;
  EXPECT_THROW(assemble_msr_covariance(kUnit, ch), Error);
  TestChannel c2;
  c2.sigma2_sq = c2.sigma3_sq = 1.0;
  c2.rho = -1.2;
  try {
    assemble_msr_covariance(kUnit, c2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidChannel);
  }
}

TEST(Construct, SymmetricGolden) {
  const RateTuple r{0.0, 0.5, 0.5, 0.0};
  const auto ch = construct_channel(kUnit, r, 0.45, 0.45);
  EXPECT_NEAR(ch.rho, -std::sqrt(1.0 - std::exp(-2.0) / 0.2025), 1e-14);
  EXPECT_NEAR(ch.rho, -0.5759, 1e-4);
  EXPECT_TRUE(std::isinf(ch.sigma1_sq));
  EXPECT_TRUE(std::isinf(ch.sigma4_sq));
  const auto ach = achieved_distortions(kUnit, ch);
  const double bound = dr_bound(kUnit, r, kUnconstrained, 0.45, 0.45).d4_bound;
  EXPECT_NEAR(ach.d4, bound, 1e-12 * bound);
  EXPECT_NEAR(ach.d4, 0.14785, 5e-5);
  EXPECT_NEAR(closed_form_d4(ch), bound, 1e-12 * bound);
  EXPECT_NEAR(ach.d2, 0.45, 1e-14);
}

TEST(Construct, FullyUsedSideRatesGiveIndependentNoise) {
  const RateTuple r{0.3, 0.4, 0.7, 0.2};
  const double d1 = std::exp(-0.6);
  const double d2 = d1 * std::exp(-0.8), d3 = d1 * std::exp(-1.4);
  const auto b = dr_bound(kUnit, r, kUnconstrained, d2, d3);
  EXPECT_NEAR(b.delta, 0.0, 1e-15);
  const auto ch = construct_channel(kUnit, r, d2, d3);
  EXPECT_NEAR(ch.rho, 0.0, 1e-6);
}

TEST(Construct, ZeroRefinementRate) {
  const auto ch = construct_channel(kUnit, {0.2, 0.5, 0.5, 0.0}, 0.3, 0.3);
  EXPECT_TRUE(std::isinf(ch.sigma4_sq));
  EXPECT_DOUBLE_EQ(closed_form_d4(ch), ch.d4_star);
}

TEST(Construct, DegenerateNeedsAdjustment) {
  try {
    construct_channel(kUnit, {0, 0.5, 0.5, 0}, 1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRegime);
  }
}

TEST(Degenerate, SymmetricAdjustment) {
  const RateTuple r{0, 0.5, 0.5, 0};
  const auto adj = degenerate_adjust(kUnit, r, 1.0, 1.0);
  EXPECT_NEAR(adj.d2_prime, 0.5 * (1.0 + std::exp(-2.0)), 1e-15);
  EXPECT_NEAR(adj.d2_prime, 0.56767, 1e-5);
  EXPECT_NEAR(adj.d3_prime, adj.d2_prime, 1e-15);
  const auto ch = construct_channel(kUnit, r, adj.d2_prime, adj.d3_prime);
  EXPECT_NEAR(achieved_distortions(kUnit, ch).d4, std::exp(-2.0), 1e-12);
}

TEST(Degenerate, InvariantsOnRandomInstances) {
  InstanceSampler sampler(71);
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 100; ++i) {
    const auto inst = sampler.next();
    const auto b = dr_bound(kUnit, inst.rates, kUnconstrained, inst.d2, inst.d3);
    if (!(b.pi < b.delta)) continue;
    ++seen;
    const auto adj = degenerate_adjust(kUnit, inst.rates, inst.d2, inst.d3);
    const double s = std::exp(-2.0 * (inst.rates.r2 + inst.rates.r3));
    EXPECT_NEAR(adj.d2_prime + adj.d3_prime, b.d1_star * (1 + s), 1e-12 * b.d1_star);
    EXPECT_LE(adj.d2_prime, b.d2_hat * (1 + 1e-12));
    EXPECT_LE(adj.d3_prime, b.d3_hat * (1 + 1e-12));
    EXPECT_GE(adj.d2_prime, b.d1_star * std::exp(-2.0 * inst.rates.r2) * (1 - 1e-12));
  }
  EXPECT_GT(seen, 20);
}

TEST(Degenerate, BoundaryRejected) {
  // d2 = d3 = d1* at zero side rates: Π = Δ = 0.
  try {
    degenerate_adjust(kUnit, {0, 0, 0, 0}, 1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRegime);
  }
}

TEST(Certify, ZeroRates) {
  const auto c = certify_achievability(kUnit, {0, 0, 0, 0}, 1.0, 1.0);
  EXPECT_TRUE(c.matches_bound);
  EXPECT_DOUBLE_EQ(*c.achieved.d1, 1.0);
  EXPECT_DOUBLE_EQ(c.achieved.d2, 1.0);
  EXPECT_DOUBLE_EQ(c.achieved.d3, 1.0);
  EXPECT_DOUBLE_EQ(c.achieved.d4, 1.0);
}

TEST(Certify, DegenerateGolden) {
  const auto c = certify_achievability(kUnit, {0, 0.5, 0.5, 0}, 1.0, 1.0);
  EXPECT_TRUE(c.matches_bound);
  ASSERT_TRUE(c.adjustment.has_value());
  EXPECT_NEAR(c.achieved.d4, std::exp(-2.0), 1e-12);
}

TEST(Certify, SideDistortionsAboveFirstLayerAreClipped) {
  const auto c = certify_achievability(kUnit, {0.5, 0.3, 0.2, 0.4}, 0.9, 0.8);
  EXPECT_TRUE(c.matches_bound);
  EXPECT_LE(c.achieved.d2, std::exp(-1.0) * (1 + 1e-9));
}

TEST(Certify, RandomInstancesAreTight) {
  const auto r = check_tightness(5, 300);
  EXPECT_TRUE(r.passed()) << r.worst_residual;
}

TEST(Certify, ClosedFormD4MatchesMmse) {
  InstanceSampler sampler(8);
  for (int i = 0; i < 200; ++i) {
    const auto inst = sampler.next();
    const auto c = certify_achievability(kUnit, inst.rates, inst.d2, inst.d3);
    EXPECT_NEAR(c.closed_form_d4, c.achieved.d4, 1e-9 * c.achieved.d4) << i;
  }
}

TEST(MonteCarlo, FullChannelAtHalfNatRates) {
  const RateTuple r{0.5, 0.5, 0.5, 0.5};
  const double d1 = std::exp(-1.0);
  const auto cert = certify_achievability(kUnit, r, 0.8 * d1, 0.7 * d1);
  const auto cov = assemble_msr_covariance(kUnit, cert.channel);
  const int central[] = {kU2, kU3, kU4};
  const auto mc = mc_estimate_mse(cov, kXPrime, central, 1000000, 2024);
  EXPECT_LT(std::abs(mc.estimate - conditional_mmse(cov, kXPrime, {kU2, kU3, kU4}).error_variance),
            3 * mc.std_error);
}

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "jumpemm/error.hpp"
#include "jumpemm/esscher.hpp"
#include "jumpemm/normal.hpp"
#include "jumpemm/rng.hpp"
#include "jumpemm/stats.hpp"
#include "support/fixtures.hpp"

namespace jumpemm {
namespace {

TEST(Cgf, ZeroTiltIsZero) {
  EXPECT_EQ(cgf({0.05, 0.1}, 0.0), 0.0);
  EXPECT_EQ(cgf({-0.3, 2.0}, 0.0), 0.0);
}

TEST(Cgf, DirectEvaluation) {
  EXPECT_NEAR(cgf({0.05, 0.1}, 1.0), 0.055, 1e-15);
  EXPECT_NEAR(cgf({0.05, 0.1}, 2.0), 0.12, 1e-15);
}

TEST(Cgf, MatchesMonteCarloLogMgf) {
  // ln(mean of e^{eta J}) over J ~ N(0.05, 0.01) converges to the CGF.
  const JumpLaw law{0.05, 0.1};
  const CounterStream stream(2024);
  for (double eta : {-2.0, 1.0, 2.0}) {
    std::vector<double> samples(400'000);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double j = law.nu + law.delta * normal_quantile(stream.uniforms(i, 0, 0)[0]);
      samples[i] = std::exp(eta * j);
    }
    const MeanEstimate est = estimate_mean(samples);
    // Delta method: SE of the log-mean is SE/mean.
    EXPECT_LT(std::abs(std::log(est.mean) - cgf(law, eta)), 4.0 * est.std_error / est.mean)
        << "eta=" << eta;
  }
}

TEST(Cgf, RejectsNonFinite) {
  EXPECT_THROW(cgf({0.0, 0.1}, std::numeric_limits<double>::infinity()), InputError);
  EXPECT_THROW(cgf({std::numeric_limits<double>::quiet_NaN(), 0.1}, 1.0), InputError);
}

TEST(Normalizer, ZeroTiltSumsProbabilities) {
  const RegionJumpSpec spec{0.2, 0.3, 0.5, {0.1, 0.2}, {-0.1, 0.3}};
  EXPECT_NEAR(normalizer(spec, 0.0, 0.0), 1.0, 1e-15);
}

TEST(Normalizer, DirectEvaluation) {
  const RegionJumpSpec spec{0.5, 0.3, 0.2, {0.04, 0.1}, {-0.05, 0.12}};
  EXPECT_NEAR(normalizer(spec, 1.0, -1.0), 1.0406741987739905, 1e-14);
}

TEST(Normalizer, NoJumpMassIgnoresTilt) {
  const RegionJumpSpec spec{0.0, 0.0, 1.0, {0.04, 0.1}, {-0.05, 0.12}};
  EXPECT_EQ(normalizer(spec, 3.0, -7.0), 1.0);
}

TEST(RiskNeutralize, ZeroTiltIsIdentity) {
  const ModelParams p = testing::generic_params();
  RiskPremia premia;
  premia.gamma_d = 1.7;
  const RiskNeutralSpec rn = risk_neutralize(p, premia);
  EXPECT_NEAR(rn.region1.q_up, p.region1.p_up, 1e-15);
  EXPECT_NEAR(rn.region1.q_down, p.region1.p_down, 1e-15);
  EXPECT_NEAR(rn.region2.q_none, p.region2.p_none, 1e-15);
  EXPECT_EQ(rn.region1.law_up.nu, p.region1.law_up.nu);
  EXPECT_EQ(rn.region2.law_down.nu, p.region2.law_down.nu);
}

TEST(RiskNeutralize, MeanShift) {
  ModelParams p = testing::generic_params();
  p.region1.law_up = {0.04, 0.1};
  RiskPremia premia;
  premia.eta_1u = 1.0;
  const RiskNeutralSpec rn = risk_neutralize(p, premia);
  EXPECT_NEAR(rn.region1.law_up.nu, 0.05, 1e-15);
  EXPECT_EQ(rn.region1.law_up.delta, 0.1);
}

TEST(RiskNeutralize, SingleOutcomeRegion) {
  ModelParams p = testing::generic_params();
  p.region2 = {1.0, 0.0, 0.0, {0.05, 0.1}, {-0.05, 0.1}};
  RiskPremia premia;
  premia.eta_2u = 2.5;
  const RiskNeutralSpec rn = risk_neutralize(p, premia);
  EXPECT_DOUBLE_EQ(rn.region2.q_up, 1.0);
  EXPECT_EQ(rn.region2.q_none, 0.0);
}

TEST(RiskNeutralize, NormalRegionIsDegenerate) {
  const RiskNeutralSpec rn =
      risk_neutralize(testing::generic_params(), testing::generic_premia());
  const RiskNeutralRegion r0 = rn.region(Region::Normal);
  EXPECT_EQ(r0.z, 1.0);
  EXPECT_EQ(r0.q_none, 1.0);
}

TEST(RiskNeutralize, RejectsInvalidParams) {
  ModelParams p = testing::generic_params();
  p.sigma = -1.0;
  EXPECT_THROW(risk_neutralize(p, RiskPremia{}), InputError);
}

TEST(RiskNeutralize, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = testing::random_params(rng);
    const RiskPremia premia = testing::random_premia(rng);
    const RiskNeutralSpec rn = risk_neutralize(p, premia);
    for (const auto& r : {rn.region1, rn.region2}) {
      EXPECT_NEAR(r.q_up + r.q_down + r.q_none, 1.0, 1e-12);
      EXPECT_GT(r.z, 0.0);
      EXPECT_GE(r.q_up, 0.0);
      EXPECT_GE(r.q_down, 0.0);
      EXPECT_GE(r.q_none, 0.0);
    }
  }
}

TEST(RiskNeutralize, UpProbabilityFollowsItsCgf) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const ModelParams p = testing::random_params(rng);
    RiskPremia premia = testing::random_premia(rng);
    const double before = risk_neutralize(p, premia).region1.q_up;
    const double k_before = cgf(p.region1.law_up, premia.eta_1u);
    premia.eta_1u += 1e-3;
    const double after = risk_neutralize(p, premia).region1.q_up;
    const double k_after = cgf(p.region1.law_up, premia.eta_1u);
    if (p.region1.p_up > 0.0 && p.region1.p_up < 1.0 && k_after != k_before) {
      EXPECT_EQ(after > before, k_after > k_before);
    }
  }
}

TEST(RiskNeutralize, TiltedLawMomentsBySampling) {
  // Draws from N(nu + eta delta^2, delta^2) must have that mean and variance.
  const JumpLaw base{-0.04, 0.09};
  const double eta = -2.3;
  const JumpLaw q = tilt(base, eta);
  const CounterStream stream(99);
  const std::size_t n = 1'000'000;
  std::vector<double> draws(n);
  for (std::size_t i = 0; i < n; ++i) {
    draws[i] = q.nu + q.delta * normal_quantile(stream.uniforms(i, 3, 0)[0]);
  }
  const MeanEstimate est = estimate_mean(draws);
  EXPECT_NEAR(est.mean, base.nu + eta * base.delta * base.delta, 4.0 * base.delta / 1000.0);
  const double var = est.std_error * est.std_error * static_cast<double>(n);
  EXPECT_NEAR(var, base.delta * base.delta, 0.01 * base.delta * base.delta);
}

}  // namespace
}  // namespace jumpemm

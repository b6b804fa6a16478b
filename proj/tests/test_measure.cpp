#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "jumpemm/error.hpp"
#include "jumpemm/measure.hpp"
#include "jumpemm/reweighting.hpp"
#include "support/fixtures.hpp"

namespace jumpemm {
namespace {

class MeasureTest : public ::testing::Test {
 protected:
  ModelParams params = testing::generic_params();
  RiskPremia premia = testing::generic_premia();
  RiskNeutralSpec rn = risk_neutralize(params, premia);

  double down_dw() const { return (params.b_down - 0.5) * std::sqrt(params.tau); }
  double up_dw() const { return (params.b_up + 0.5) * std::sqrt(params.tau); }
};

TEST_F(MeasureTest, DiffusionKernelWithoutPremiumIsOne) {
  premia.gamma_d = 0.0;
  for (double dw : {-0.3, 0.0, 0.17}) EXPECT_EQ(diffusion_kernel(dw, params, premia), 1.0);
}

TEST_F(MeasureTest, DiffusionKernelDirectEvaluation) {
  params.sigma = 0.2;
  params.tau = 0.01;
  premia.gamma_d = 0.5;
  EXPECT_NEAR(diffusion_kernel(0.0, params, premia), 0.9999500012499791, 1e-16);
}

TEST_F(MeasureTest, DiffusionKernelHasUnitMeanByQuadrature) {
  // Five-node Gauss-Hermite is accurate to ~1e-14 for this mild exponential.
  params.tau = 0.04;
  premia.gamma_d = 1.3;
  const double nodes[] = {-2.0201828704560856, -0.9585724646138185, 0.0, 0.9585724646138185,
                          2.0201828704560856};
  const double weights[] = {0.019953242059045917, 0.3936193231522411, 0.9453087204829418,
                            0.3936193231522411, 0.019953242059045917};
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) {
    acc += weights[i] * diffusion_kernel(std::sqrt(2.0 * params.tau) * nodes[i], params, premia);
  }
  EXPECT_NEAR(acc / std::sqrt(M_PI), 1.0, 1e-10);
}

TEST_F(MeasureTest, JumpKernelNormalRegion) {
  const StepOutcome o{0.0, Region::Normal, JumpKind::None, 0.0};
  EXPECT_EQ(jump_kernel(o, rn, params, premia), 1.0);
}

TEST_F(MeasureTest, JumpKernelNoJumpInTriggerRegion) {
  const StepOutcome o{down_dw(), Region::Down, JumpKind::None, 0.0};
  EXPECT_DOUBLE_EQ(jump_kernel(o, rn, params, premia), 1.0 / rn.region1.z);
}

TEST_F(MeasureTest, JumpKernelWithJump) {
  const double j = 0.037;
  const StepOutcome o{down_dw(), Region::Down, JumpKind::Up, j};
  EXPECT_DOUBLE_EQ(jump_kernel(o, rn, params, premia),
                   std::exp(premia.eta_1u * j) / rn.region1.z);
  const StepOutcome o2{up_dw(), Region::Up, JumpKind::Down, -j};
  EXPECT_DOUBLE_EQ(jump_kernel(o2, rn, params, premia),
                   std::exp(premia.eta_2d * -j) / rn.region2.z);
}

TEST_F(MeasureTest, InconsistentOutcomesAreContractErrors) {
  EXPECT_THROW(jump_kernel({0.0, Region::Normal, JumpKind::Up, 0.1}, rn, params, premia),
               ContractError);
  EXPECT_THROW(jump_kernel({0.0, Region::Down, JumpKind::None, 0.0}, rn, params, premia),
               ContractError);
  EXPECT_THROW(jump_kernel({down_dw(), Region::Down, JumpKind::None, 0.2}, rn, params, premia),
               ContractError);
}

TEST_F(MeasureTest, StepKernelFactorizes) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double dw = 1.8 * z(rng) * std::sqrt(params.tau);
    StepOutcome o{dw, classify_region(dw, params), JumpKind::None, 0.0};
    if (o.region != Region::Normal && i % 3 != 0) {
      o.jump_kind = i % 3 == 1 ? JumpKind::Up : JumpKind::Down;
      o.jump_size = 0.1 * z(rng);
    }
    EXPECT_EQ(step_kernel(o, rn, params, premia),
              diffusion_kernel(dw, params, premia) * jump_kernel(o, rn, params, premia));
    EXPECT_GT(step_kernel(o, rn, params, premia), 0.0);
    EXPECT_NEAR(std::log(step_kernel(o, rn, params, premia)),
                log_step_kernel(o, rn, params, premia), 1e-13);
  }
}

TEST_F(MeasureTest, StepKernelTrivialMeasureChange) {
  const RiskPremia none{};
  const RiskNeutralSpec rn0 = risk_neutralize(params, none);
  EXPECT_EQ(step_kernel({0.01, Region::Normal, JumpKind::None, 0.0}, rn0, params, none), 1.0);
}

TEST_F(MeasureTest, PathKernel) {
  EXPECT_EQ(path_kernel({}, rn, params, premia), 1.0);
  const std::vector<StepOutcome> one{{down_dw(), Region::Down, JumpKind::Down, -0.05}};
  EXPECT_DOUBLE_EQ(path_kernel(one, rn, params, premia), step_kernel(one[0], rn, params, premia));
  const std::vector<StepOutcome> two{one[0], {0.02, Region::Normal, JumpKind::None, 0.0}};
  EXPECT_DOUBLE_EQ(path_kernel(two, rn, params, premia),
                   step_kernel(two[0], rn, params, premia) *
                       step_kernel(two[1], rn, params, premia));
}

TEST_F(MeasureTest, PathKernelDoesNotUnderflow) {
  // 20000 steps whose kernels multiply to exp(-~5e4) in total are fine in log space.
  std::vector<StepOutcome> path(20'000, StepOutcome{down_dw(), Region::Down, JumpKind::None, 0.0});
  premia.gamma_d = -30.0;
  const double log_l = log_path_kernel(path, rn, params, premia);
  EXPECT_TRUE(std::isfinite(log_l));
  EXPECT_LT(log_l, -700.0);
}

TEST_F(MeasureTest, ConditionalJumpKernelMeanIsOne) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p = testing::random_params(rng);
    const RiskPremia pr = testing::random_premia(rng);
    for (Region r : {Region::Down, Region::Normal, Region::Up}) {
      EXPECT_NEAR(conditional_jump_kernel_mean(r, p, pr), 1.0, 1e-14);
    }
  }
}

TEST(ExpectedStepKernel, UnitMeanOnRandomSets) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p = testing::random_params(rng);
    const RiskPremia pr = testing::random_premia(rng);
    const StepKernelExpectation e = expected_step_kernel(p, pr);
    EXPECT_NEAR(e.total, 1.0, 1e-10);
    EXPECT_NEAR(e.tilted_mass[0] + e.tilted_mass[1] + e.tilted_mass[2], 1.0, 1e-14);
  }
}

TEST(Reweighting, PathKernelMeanTwoSteps) {
  const MeanEstimate est = path_kernel_mean(testing::generic_params(), testing::generic_premia(),
                                            1'000'000, 2, {42});
  EXPECT_LT(std::abs(est.z_score(1.0)), 3.0) << est.mean << " +- " << est.std_error;
}

TEST(Reweighting, GirsanovShiftAndVariance) {
  const ModelParams p = testing::generic_params();
  RiskPremia pr = testing::generic_premia();
  pr.gamma_d = 1.5;
  const GirsanovMoments g = girsanov_moments(p, pr, 1'000'000, {8});
  EXPECT_DOUBLE_EQ(g.expected_mean, -1.5 * p.sigma * p.tau);
  EXPECT_LT(std::abs(g.mean.z_score(g.expected_mean)), 3.0);
  EXPECT_LT(std::abs(g.variance.z_score(p.tau)), 3.0);
}

}  // namespace
}  // namespace jumpemm

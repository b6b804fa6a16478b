#include <cmath>
#include <random>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <gtest/gtest.h>

#include "jumpemm/normal.hpp"
#include "jumpemm/rng.hpp"
#include "jumpemm/stats.hpp"

namespace jumpemm {
namespace {

TEST(Philox, KnownAnswerZero) {
  const auto out = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Philox4x32::Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
  const auto out = Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                        {0xffffffff, 0xffffffff});
  EXPECT_EQ(out, (Philox4x32::Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  const auto out = Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                        {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out, (Philox4x32::Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(OpenUnit, Endpoints) {
  EXPECT_GT(to_open_unit(0), 0.0);
  EXPECT_LT(to_open_unit(~std::uint64_t{0}), 1.0);
  EXPECT_EQ(to_open_unit(0), 0x1.0p-53);
  EXPECT_EQ(to_open_unit(~std::uint64_t{0}), 1.0 - 0x1.0p-53);
}

TEST(CounterStream, AddressesAreIndependent) {
  const CounterStream s(42);
  const auto a = s.uniforms(7, 3, 0);
  EXPECT_EQ(a, s.uniforms(7, 3, 0));
  EXPECT_NE(a, s.uniforms(7, 3, 1));
  EXPECT_NE(a, s.uniforms(8, 3, 0));
  EXPECT_NE(a, s.uniforms(7, 4, 0));
  EXPECT_NE(a, CounterStream(43).uniforms(7, 3, 0));
  EXPECT_NE(a, CounterStream(42 + (std::uint64_t{1} << 32)).uniforms(7, 3, 0));
}

TEST(CounterStream, UniformMoments) {
  const CounterStream s(1);
  std::vector<double> x;
  std::vector<double> xy;
  const std::size_t n = 200'000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = s.uniforms(i, 0, 0);
    x.push_back(u[0]);
    xy.push_back((u[0] - 0.5) * (u[1] - 0.5));
  }
  const MeanEstimate m = estimate_mean(x);
  EXPECT_LT(std::abs(m.z_score(0.5)), 4.0);
  EXPECT_NEAR(m.std_error * std::sqrt(double(n)), std::sqrt(1.0 / 12.0), 1e-3);
  EXPECT_LT(std::abs(estimate_mean(xy).z_score(0.0)), 4.0);
}

TEST(NormalQuantile, MatchesBoost) {
  const boost::math::normal_distribution<double> nd;
  for (double p : {1e-300, 1e-20, 1e-10, 1e-5, 0.001, 0.02425, 0.1, 0.3, 0.5, 0.7, 0.9,
                   0.97575, 0.999, 1.0 - 1e-10}) {
    const double expected = boost::math::quantile(nd, p);
    EXPECT_NEAR(normal_quantile(p), expected, 1e-14 * std::max(1.0, std::abs(expected))) << p;
  }
}

TEST(NormalQuantile, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-12, 1.0 - 1e-12);
  for (int i = 0; i < 10'000; ++i) {
    const double p = u(rng);
    EXPECT_NEAR(normal_cdf(normal_quantile(p)), p, 1e-14 * std::max(1.0, p / (1 - p)));
  }
}

TEST(NormalQuantile, RejectsClosedEndpoints) {
  EXPECT_THROW(normal_quantile(0.0), std::exception);
  EXPECT_THROW(normal_quantile(1.0), std::exception);
  EXPECT_THROW(normal_quantile(std::nan("")), std::exception);
}

TEST(NormalCdf, Symmetry) {
  for (double x : {0.1, 1.0, 3.0, 7.5}) {
    EXPECT_NEAR(normal_cdf(x) + normal_cdf(-x), 1.0, 1e-15);
  }
  EXPECT_NEAR(normal_pdf(0.0), kInvSqrt2Pi, 1e-17);
}

TEST(PairwiseSum, ExactOnIntegers) {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = double(i + 1);
  EXPECT_EQ(pairwise_sum(v), 500500.0);
  EXPECT_EQ(pairwise_sum(std::span<const double>{}), 0.0);
}

TEST(PairwiseSum, BeatsNaiveOnSmallIncrements) {
  std::vector<double> v(1'000'000, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 100000.0, 1e-8);
}

TEST(RunningStats, MergeMatchesBatch) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(3.0, 2.0);
  std::vector<double> all;
  RunningStats a;
  RunningStats b;
  for (int i = 0; i < 5000; ++i) {
    const double x = g(rng);
    all.push_back(x);
    (i < 1700 ? a : b).push(x);
  }
  a.merge(b);
  const MeanEstimate batch = estimate_mean(all);
  EXPECT_EQ(a.count(), 5000u);
  EXPECT_NEAR(a.mean(), batch.mean, 1e-12);
  EXPECT_NEAR(a.estimate().std_error, batch.std_error, 1e-12);
}

TEST(MeanEstimate, ZScoreDegenerate) {
  MeanEstimate m{1.0, 0.0, 10};
  EXPECT_EQ(m.z_score(1.0), 0.0);
  EXPECT_TRUE(std::isinf(m.z_score(2.0)));
}

}  // namespace
}  // namespace jumpemm

#pragma once

#include <random>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"

namespace jumpemm::testing {

/// A typical parameter set with jumps active in both trigger regions.
inline ModelParams generic_params() {
  ModelParams p;
  p.mu = 0.08;
  p.sigma = 0.25;
  p.r = 0.03;
  p.tau = 0.01;
  p.b_down = -1.5;
  p.b_up = 1.5;
  p.region1 = {0.15, 0.35, 0.50, {0.03, 0.05}, {-0.06, 0.08}};
  p.region2 = {0.30, 0.10, 0.60, {0.05, 0.06}, {-0.02, 0.04}};
  return p;
}

inline RiskPremia generic_premia() { return {0.4, -1.5, 2.0, 1.0, -0.5}; }

/// Jumps switched off in both regions: the model reduces to a lognormal
/// diffusion.
inline ModelParams pure_diffusion(double sigma = 0.2, double r = 0.05, double tau = 0.01) {
  ModelParams p = generic_params();
  p.sigma = sigma;
  p.r = r;
  p.tau = tau;
  p.region1.p_up = p.region1.p_down = 0.0;
  p.region1.p_none = 1.0;
  p.region2.p_up = p.region2.p_down = 0.0;
  p.region2.p_none = 1.0;
  return p;
}

inline RegionJumpSpec random_region(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> nu(-0.1, 0.1);
  std::uniform_real_distribution<double> delta(0.02, 0.2);
  const double a = e(rng);
  const double b = e(rng);
  const double c = e(rng);
  const double s = a + b + c;
  RegionJumpSpec spec;
  spec.p_up = a / s;
  spec.p_down = b / s;
  spec.p_none = c / s;
  spec.law_up = {std::abs(nu(rng)), delta(rng)};
  spec.law_down = {-std::abs(nu(rng)), delta(rng)};
  return spec;
}

/// Valid random parameters over economically plausible ranges.
inline ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ModelParams p;
  p.sigma = 0.1 + 0.4 * u(rng);
  p.r = 0.08 * u(rng);
  p.tau = 1.0 / 252.0 + (0.1 - 1.0 / 252.0) * u(rng);
  p.b_down = -2.5 + 2.0 * u(rng);
  p.b_up = 0.5 + 2.0 * u(rng);
  p.region1 = random_region(rng);
  p.region2 = random_region(rng);
  p.mu = -0.1 + 0.3 * u(rng);
  return normalize_probabilities(p);
}

inline RiskPremia random_premia(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gamma(-2.0, 2.0);
  std::uniform_real_distribution<double> eta(-3.0, 3.0);
  return {gamma(rng), eta(rng), eta(rng), eta(rng), eta(rng)};
}

}  // namespace jumpemm::testing

#pragma once

#include <cstddef>
#include <vector>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"

namespace jumpemm::oracle {

/// How jump expectations E[exp(c J)] inside the integrands are evaluated.
enum class JumpAveraging {
  ExactMgf,      // closed-form Normal MGF
  GaussHermite,  // redundant quadrature, validates the MGF identities
};

/// Grid for the brute-force integrals over the diffusion increment.
///
/// The window spans half_width standard deviations on either side of the
/// integrating Gaussian's centre and is split at the trigger thresholds so
/// every trapezoid panel integrates a smooth function.
struct GridSpec {
  double half_width = 10.0;
  std::size_t n_points = 200'001;
  JumpAveraging jump_averaging = JumpAveraging::ExactMgf;
  int gauss_hermite_order = 64;
};

void require_valid(const GridSpec& grid);

inline constexpr double kRichardsonTarget = 1e-9;

/// Integral value with its Richardson error estimate (the trapezoid error on
/// the finest grid) and an analytic bound on the mass cut off by truncation.
struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double tail_bound = 0.0;
};

/// Gauss-Hermite nodes and weights for the weight exp(-x^2).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite_rule(int order);

/// E[exp(c J)] for J ~ law, by the closed form or by Gauss-Hermite.
double jump_mgf(const JumpLaw& law, double c, const GridSpec& grid);

/// E_P[L_tau], integrating L_D(x) E_P[Psi | x] against the N(0, tau) density.
OracleResult expect_step_kernel(const ModelParams& params, const RiskPremia& premia,
                                const GridSpec& grid = {});

/// E[M_Q(X)] for X ~ N(sigma (1 - gamma_d) tau, tau), by quadrature.
OracleResult expect_mq(const ModelParams& params, const RiskPremia& premia,
                       const RiskNeutralSpec& rn, const GridSpec& grid = {});

/// E_P[L_tau S_{t+tau}/S_t] with the drift taken from params.mu.
OracleResult expect_q_return(const ModelParams& params, const RiskPremia& premia,
                             const RiskNeutralSpec& rn, const GridSpec& grid = {});

}  // namespace jumpemm::oracle

#pragma once

#include <vector>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"

namespace jumpemm {

/// The no-arbitrage drift and its three-term decomposition.
struct DriftReport {
  double mu = 0.0;
  double risk_free = 0.0;
  double diffusion_premium = 0.0;   // gamma_d * sigma^2
  double jump_adjustment = 0.0;     // -(1/tau) ln expectation_value
  double expectation_value = 1.0;   // E[M_Q(X)], X ~ N(shift_mean, tau)
  double m1 = 1.0;                  // M_Q plateau in the down region
  double m2 = 1.0;                  // M_Q plateau in the up region
  double shift_mean = 0.0;          // sigma (1 - gamma_d) tau
};

/// Value of the risk-neutral conditional jump MGF E_Q[e^J | region] on the
/// plateau of a trigger region; 1 on the normal region.
double mgf_plateau(const RiskNeutralRegion& region);

/// M_Q(x): the three-level step function E_Q[e^J | dw = x].
double conditional_mgf(double x, const RiskNeutralSpec& rn, const ModelParams& params);

/// E[M_Q(X)] for X ~ N(sigma (1 - gamma_d) tau, tau), in closed form:
/// 1 + (m1 - 1) Phi(a_d) + (m2 - 1) Phi(-a_u) with a = b - sigma (1 - gamma_d) sqrt(tau).
double gaussian_expectation(const RiskNeutralSpec& rn, const ModelParams& params,
                            const RiskPremia& premia);

/// Physical drift under which the constructed Q is a martingale measure.
/// Ignores params.mu.
DriftReport no_arbitrage_drift(const ModelParams& params, const RiskPremia& premia);

struct GammaCalibration {
  double gamma_d = 0.0;
  /// Every root located in the bracket, ascending.
  std::vector<double> roots;
  bool unique = true;
};

inline constexpr double kGammaBracketLo = -50.0;
inline constexpr double kGammaBracketHi = 50.0;
inline constexpr int kGammaScanPoints = 256;

/// Solves no_arbitrage_drift(params, premia with gamma_d).mu == target_mu for
/// gamma_d over [-50, 50]. The bracket is scanned at 256 points and each sign
/// change refined; with several roots the one nearest 0 is returned and
/// `unique` is cleared. Throws NoRootInBracket when no sign change exists.
GammaCalibration calibrate_gamma(const ModelParams& params, const RiskPremia& premia,
                                 double target_mu);

}  // namespace jumpemm

#include "jumpemm/drift.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "jumpemm/error.hpp"
#include "jumpemm/normal.hpp"

namespace jumpemm {

double mgf_plateau(const RiskNeutralRegion& region) {
  auto factor = [](const JumpLaw& law) {
    return std::exp(law.nu + 0.5 * law.delta * law.delta);
  };
  return region.q_up * factor(region.law_up) + region.q_down * factor(region.law_down) +
         region.q_none;
}

double conditional_mgf(double x, const RiskNeutralSpec& rn, const ModelParams& params) {
  const Region region = classify_region(x, params);
  if (region == Region::Normal) return 1.0;
  return mgf_plateau(rn.region(region));
}

namespace {

struct ExpectationTerms {
  double excess = 0.0;  // E[M_Q(X)] - 1
  double m1 = 1.0;
  double m2 = 1.0;
  double shift_mean = 0.0;
};

ExpectationTerms expectation_terms(const RiskNeutralSpec& rn, const ModelParams& params,
                                   const RiskPremia& premia) {
  ExpectationTerms t;
  const double g = params.sigma * (1.0 - premia.gamma_d);
  t.shift_mean = g * params.tau;
  const double root_tau = std::sqrt(params.tau);
  const double a_down = params.b_down - g * root_tau;
  const double a_up = params.b_up - g * root_tau;
  t.m1 = mgf_plateau(rn.region1);
  t.m2 = mgf_plateau(rn.region2);
  t.excess = (t.m1 - 1.0) * normal_cdf(a_down) + (t.m2 - 1.0) * normal_cdf(-a_up);
  return t;
}

}  // namespace

double gaussian_expectation(const RiskNeutralSpec& rn, const ModelParams& params,
                            const RiskPremia& premia) {
  return 1.0 + expectation_terms(rn, params, premia).excess;
}

DriftReport no_arbitrage_drift(const ModelParams& params, const RiskPremia& premia) {
  const RiskNeutralSpec rn = risk_neutralize(params, premia);
  const ExpectationTerms t = expectation_terms(rn, params, premia);
  DriftReport out;
  out.risk_free = params.r;
  out.diffusion_premium = premia.gamma_d * params.sigma * params.sigma;
  out.expectation_value = 1.0 + t.excess;
  out.jump_adjustment = -std::log1p(t.excess) / params.tau;
  out.m1 = t.m1;
  out.m2 = t.m2;
  out.shift_mean = t.shift_mean;
  out.mu = out.risk_free + out.diffusion_premium + out.jump_adjustment;
  return out;
}

namespace {

double refine_root(const auto& f, double lo, double hi, double f_lo, double f_hi) {
  namespace tools = boost::math::tools;
  std::uintmax_t max_iter = 200;
  try {
    auto [a, b] = tools::toms748_solve(f, lo, hi, f_lo, f_hi, tools::eps_tolerance<double>(52),
                                       max_iter);
    return 0.5 * (a + b);
  } catch (const std::exception&) {
    // Plain bisection when TOMS 748 fails to converge.
    for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() *
                                             std::max(1.0, std::abs(lo));
         ++i) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = f(mid);
      if (f_mid == 0.0) return mid;
      if ((f_mid < 0) == (f_lo < 0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
}

}  // namespace

GammaCalibration calibrate_gamma(const ModelParams& params, const RiskPremia& premia,
                                 double target_mu) {
  require_valid(params);
  require_valid(premia);
  if (!std::isfinite(target_mu)) throw InputError("calibrate_gamma: non-finite target drift");

  auto residual = [&](double gamma) {
    RiskPremia trial = premia;
    trial.gamma_d = gamma;
    return no_arbitrage_drift(params, trial).mu - target_mu;
  };

  GammaCalibration out;
  const int n = kGammaScanPoints;
  const double step = (kGammaBracketHi - kGammaBracketLo) / (n - 1);
  double x_prev = kGammaBracketLo;
  double f_prev = residual(x_prev);
  if (f_prev == 0.0) out.roots.push_back(x_prev);
  for (int i = 1; i < n; ++i) {
    const double x = i == n - 1 ? kGammaBracketHi : kGammaBracketLo + i * step;
    const double fx = residual(x);
    if (fx == 0.0) {
      out.roots.push_back(x);
    } else if (f_prev != 0.0 && (fx < 0) != (f_prev < 0)) {
      out.roots.push_back(refine_root(residual, x_prev, x, f_prev, fx));
    }
    x_prev = x;
    f_prev = fx;
  }
  if (out.roots.empty()) {
    throw NoRootInBracket("calibrate_gamma: drift minus target has no sign change on [-50, 50]");
  }
  out.unique = out.roots.size() == 1;
  out.gamma_d = *std::min_element(out.roots.begin(), out.roots.end(),
                                  [](double a, double b) { return std::abs(a) < std::abs(b); });
  return out;
}

}  // namespace jumpemm

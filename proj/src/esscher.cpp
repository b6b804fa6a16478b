#include "jumpemm/esscher.hpp"

#include <cmath>

#include "jumpemm/error.hpp"

namespace jumpemm {

double RiskPremia::eta(Region region, JumpKind kind) const {
  if (region == Region::Down) {
    if (kind == JumpKind::Up) return eta_1u;
    if (kind == JumpKind::Down) return eta_1d;
  } else if (region == Region::Up) {
    if (kind == JumpKind::Up) return eta_2u;
    if (kind == JumpKind::Down) return eta_2d;
  }
  return 0.0;
}

void require_valid(const RiskPremia& premia) {
  for (double v : {premia.gamma_d, premia.eta_1u, premia.eta_1d, premia.eta_2u, premia.eta_2d}) {
    if (!std::isfinite(v)) throw InputError("risk premia must be finite");
  }
}

RiskNeutralRegion RiskNeutralSpec::region(Region region) const {
  switch (region) {
    case Region::Down:
      return region1;
    case Region::Up:
      return region2;
    case Region::Normal:
      break;
  }
  return RiskNeutralRegion{};
}

double cgf(const JumpLaw& law, double eta) {
  if (!std::isfinite(law.nu) || !std::isfinite(law.delta) || !std::isfinite(eta)) {
    throw InputError("cgf: non-finite input");
  }
  return eta * law.nu + 0.5 * eta * eta * law.delta * law.delta;
}

double normalizer(const RegionJumpSpec& spec, double eta_up, double eta_down) {
  return spec.p_up * std::exp(cgf(spec.law_up, eta_up)) +
         spec.p_down * std::exp(cgf(spec.law_down, eta_down)) + spec.p_none;
}

JumpLaw tilt(const JumpLaw& law, double eta) {
  return {law.nu + eta * law.delta * law.delta, law.delta};
}

RiskNeutralRegion risk_neutralize(const RegionJumpSpec& spec, double eta_up, double eta_down) {
  const double w_up = spec.p_up * std::exp(cgf(spec.law_up, eta_up));
  const double w_down = spec.p_down * std::exp(cgf(spec.law_down, eta_down));
  RiskNeutralRegion out;
  out.z = w_up + w_down + spec.p_none;
  out.q_up = w_up / out.z;
  out.q_down = w_down / out.z;
  out.q_none = spec.p_none / out.z;
  out.law_up = tilt(spec.law_up, eta_up);
  out.law_down = tilt(spec.law_down, eta_down);
  return out;
}

RiskNeutralSpec risk_neutralize(const ModelParams& params, const RiskPremia& premia) {
  require_valid(params);
  require_valid(premia);
  return {risk_neutralize(params.region1, premia.eta_1u, premia.eta_1d),
          risk_neutralize(params.region2, premia.eta_2u, premia.eta_2d)};
}

}  // namespace jumpemm

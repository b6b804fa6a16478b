#pragma once

#include "jumpemm/model.hpp"

namespace jumpemm {

/// Market prices of risk: gamma_d for the diffusion, eta_jk per jump type.
struct RiskPremia {
  double gamma_d = 0.0;
  double eta_1u = 0.0;
  double eta_1d = 0.0;
  double eta_2u = 0.0;
  double eta_2d = 0.0;

  /// Tilt applied to jumps of `kind` in `region`; zero for no-jump outcomes.
  double eta(Region region, JumpKind kind) const;
};

void require_valid(const RiskPremia& premia);

/// Risk-neutral jump structure inside one trigger region.
///
/// `law_up` / `law_down` are the tilted laws: means shifted by eta*delta^2,
/// standard deviations unchanged.
struct RiskNeutralRegion {
  double z = 1.0;
  double q_up = 0.0;
  double q_down = 0.0;
  double q_none = 1.0;
  JumpLaw law_up;
  JumpLaw law_down;
};

/// Q-measure quantities derived once per (params, premia) pair.
struct RiskNeutralSpec {
  RiskNeutralRegion region1;
  RiskNeutralRegion region2;

  /// Region 0 maps to the degenerate {z=1, q_none=1} region.
  RiskNeutralRegion region(Region region) const;
};

/// ln E[exp(eta*J)] for J ~ N(nu, delta^2).
double cgf(const JumpLaw& law, double eta);

/// Expected unnormalized Esscher kernel in a region: the normalizer Z_j.
double normalizer(const RegionJumpSpec& spec, double eta_up, double eta_down);

/// Esscher-tilted law: N(nu + eta*delta^2, delta^2).
JumpLaw tilt(const JumpLaw& law, double eta);

RiskNeutralRegion risk_neutralize(const RegionJumpSpec& spec, double eta_up, double eta_down);

RiskNeutralSpec risk_neutralize(const ModelParams& params, const RiskPremia& premia);

}  // namespace jumpemm

#pragma once

#include <string>
#include <vector>

namespace jumpemm {

/// Normal law N(nu, delta^2) of a log-jump size.
struct JumpLaw {
  double nu = 0.0;
  double delta = 0.1;
};

/// Jump probabilities and size laws inside one trigger region.
struct RegionJumpSpec {
  double p_up = 0.0;
  double p_down = 0.0;
  double p_none = 1.0;
  JumpLaw law_up;
  JumpLaw law_down;
};

/// Physical-measure parameters of the diffusion-triggered jump model.
///
/// Thresholds are in standardized units: a diffusion increment dw triggers the
/// down region when dw < b_down * sqrt(tau) and the up region when
/// dw > b_up * sqrt(tau).
struct ModelParams {
  double mu = 0.0;
  double sigma = 0.2;
  double r = 0.0;
  double tau = 0.01;
  double b_down = -2.0;
  double b_up = 2.0;
  RegionJumpSpec region1;  // large downward diffusion
  RegionJumpSpec region2;  // large upward diffusion
};

enum class Region { Normal = 0, Down = 1, Up = 2 };

enum class JumpKind { None = 0, Up = 1, Down = 2 };

const char* to_string(Region region);
const char* to_string(JumpKind kind);

struct Violation {
  std::string field;
  std::string constraint;
};

std::string to_string(const Violation& v);

/// Probability sums may deviate from 1 by this much and still be renormalized.
inline constexpr double kProbabilityIngestTolerance = 1e-9;
/// Tolerance on probability sums accepted by validate().
inline constexpr double kProbabilitySumTolerance = 1e-12;

/// Every violated invariant of `params`; empty iff the parameters are usable.
std::vector<Violation> validate(const ModelParams& params);

/// Throws InputError listing all violations when `params` is invalid.
void require_valid(const ModelParams& params);

/// Rescales each region's probabilities to sum to exactly 1 when the sum is
/// already within kProbabilityIngestTolerance. Larger deviations are left
/// untouched so validate() reports them.
ModelParams normalize_probabilities(ModelParams params);

/// Down iff dw < b_down*sqrt(tau), Up iff dw > b_up*sqrt(tau), Normal
/// otherwise. Boundary points belong to Normal.
Region classify_region(double dw, const ModelParams& params);

/// Jump specification in force for `region`; the normal region never jumps.
RegionJumpSpec region_spec(const ModelParams& params, Region region);

}  // namespace jumpemm

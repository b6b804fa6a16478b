#include "jumpemm/measure.hpp"

#include <cmath>
#include <string>

#include "jumpemm/error.hpp"
#include "jumpemm/normal.hpp"

namespace jumpemm {

void check_consistent(const StepOutcome& outcome, const ModelParams& params) {
  const Region expected = classify_region(outcome.dw, params);
  if (expected != outcome.region) {
    throw ContractError(std::string("step outcome tagged region ") + to_string(outcome.region) +
                        " but dw lies in region " + to_string(expected));
  }
  if (outcome.region == Region::Normal && outcome.jump_kind != JumpKind::None) {
    throw ContractError("jump recorded in the normal diffusion region");
  }
  if (outcome.jump_kind == JumpKind::None && outcome.jump_size != 0.0) {
    throw ContractError("non-zero jump size without a jump");
  }
  if (!std::isfinite(outcome.jump_size)) throw ContractError("non-finite jump size");
}

double log_diffusion_kernel(double dw, const ModelParams& params, const RiskPremia& premia) {
  const double a = premia.gamma_d * params.sigma;
  return -a * dw - 0.5 * a * a * params.tau;
}

double diffusion_kernel(double dw, const ModelParams& params, const RiskPremia& premia) {
  return std::exp(log_diffusion_kernel(dw, params, premia));
}

double jump_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                   const ModelParams& params, const RiskPremia& premia) {
  check_consistent(outcome, params);
  if (outcome.region == Region::Normal) return 1.0;
  const double z = rn.region(outcome.region).z;
  if (outcome.jump_kind == JumpKind::None) return 1.0 / z;
  return std::exp(premia.eta(outcome.region, outcome.jump_kind) * outcome.jump_size) / z;
}

double log_jump_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                       const ModelParams& params, const RiskPremia& premia) {
  check_consistent(outcome, params);
  if (outcome.region == Region::Normal) return 0.0;
  const double log_z = std::log(rn.region(outcome.region).z);
  return premia.eta(outcome.region, outcome.jump_kind) * outcome.jump_size - log_z;
}

double step_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                   const ModelParams& params, const RiskPremia& premia) {
  return diffusion_kernel(outcome.dw, params, premia) * jump_kernel(outcome, rn, params, premia);
}

double log_step_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                       const ModelParams& params, const RiskPremia& premia) {
  return log_diffusion_kernel(outcome.dw, params, premia) +
         log_jump_kernel(outcome, rn, params, premia);
}

double log_path_kernel(std::span<const StepOutcome> path, const RiskNeutralSpec& rn,
                       const ModelParams& params, const RiskPremia& premia) {
  double acc = 0.0;
  for (const auto& step : path) acc += log_step_kernel(step, rn, params, premia);
  return acc;
}

double path_kernel(std::span<const StepOutcome> path, const RiskNeutralSpec& rn,
                   const ModelParams& params, const RiskPremia& premia) {
  return std::exp(log_path_kernel(path, rn, params, premia));
}

double conditional_jump_kernel_mean(Region region, const ModelParams& params,
                                    const RiskPremia& premia) {
  if (region == Region::Normal) return 1.0;
  const RegionJumpSpec spec = region_spec(params, region);
  const double eta_up = premia.eta(region, JumpKind::Up);
  const double eta_down = premia.eta(region, JumpKind::Down);
  auto mgf = [](const JumpLaw& law, double s) {
    return std::exp(s * law.nu + 0.5 * s * s * law.delta * law.delta);
  };
  const double tilted_up = spec.p_up * mgf(spec.law_up, eta_up);
  const double tilted_down = spec.p_down * mgf(spec.law_down, eta_down);
  const double z = normalizer(spec, eta_up, eta_down);
  return (tilted_up + tilted_down + spec.p_none) / z;
}

StepKernelExpectation expected_step_kernel(const ModelParams& params, const RiskPremia& premia) {
  require_valid(params);
  require_valid(premia);
  // Thresholds standardized against the tilted law N(-gamma*sigma*tau, tau).
  const double shift = premia.gamma_d * params.sigma * std::sqrt(params.tau);
  const double lo = params.b_down + shift;
  const double hi = params.b_up + shift;

  StepKernelExpectation out;
  auto idx = [](Region r) { return static_cast<std::size_t>(r); };
  out.tilted_mass[idx(Region::Down)] = normal_cdf(lo);
  out.tilted_mass[idx(Region::Up)] = normal_cdf(-hi);
  out.tilted_mass[idx(Region::Normal)] = normal_cdf(hi) - normal_cdf(lo);
  for (Region r : {Region::Normal, Region::Down, Region::Up}) {
    out.conditional_mean[idx(r)] = conditional_jump_kernel_mean(r, params, premia);
  }
  for (std::size_t i = 0; i < 3; ++i) out.total += out.tilted_mass[i] * out.conditional_mean[i];
  return out;
}

}  // namespace jumpemm

#pragma once

#include <array>
#include <span>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"

namespace jumpemm {

/// One realized step: the P-Brownian increment and the jump it triggered.
struct StepOutcome {
  double dw = 0.0;
  Region region = Region::Normal;
  JumpKind jump_kind = JumpKind::None;
  double jump_size = 0.0;
};

/// Throws ContractError unless the outcome is a possible realization under
/// `params`: region agrees with dw, no jump in the normal region, and a zero
/// size exactly when no jump occurred.
void check_consistent(const StepOutcome& outcome, const ModelParams& params);

/// Girsanov kernel exp(-gamma*sigma*dw - (gamma*sigma)^2 tau / 2).
double diffusion_kernel(double dw, const ModelParams& params, const RiskPremia& premia);
double log_diffusion_kernel(double dw, const ModelParams& params, const RiskPremia& premia);

/// Normalized Esscher kernel: exp(eta_jk J)/Z_j for a jump, 1/Z_j for no jump
/// in a trigger region, 1 in the normal region.
double jump_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                   const ModelParams& params, const RiskPremia& premia);
double log_jump_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                       const ModelParams& params, const RiskPremia& premia);

/// One-step density dQ/dP = diffusion_kernel * jump_kernel.
double step_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                   const ModelParams& params, const RiskPremia& premia);
double log_step_kernel(const StepOutcome& outcome, const RiskNeutralSpec& rn,
                       const ModelParams& params, const RiskPremia& premia);

/// Product of step kernels over a path, accumulated in log space. The empty
/// path has kernel 1.
double path_kernel(std::span<const StepOutcome> path, const RiskNeutralSpec& rn,
                   const ModelParams& params, const RiskPremia& premia);
double log_path_kernel(std::span<const StepOutcome> path, const RiskNeutralSpec& rn,
                       const ModelParams& params, const RiskPremia& premia);

/// E_P[jump_kernel | dw in region], evaluated from the Normal MGF.
double conditional_jump_kernel_mean(Region region, const ModelParams& params,
                                    const RiskPremia& premia);

/// Semi-analytic E_P[step_kernel], split by trigger region.
///
/// The diffusion kernel times the N(0,tau) density is the N(-gamma*sigma*tau,
/// tau) density, so each region contributes its Gaussian mass under that law
/// times the conditional jump-kernel mean.
struct StepKernelExpectation {
  std::array<double, 3> tilted_mass{};        // indexed by Region
  std::array<double, 3> conditional_mean{};   // indexed by Region
  double total = 0.0;
};

StepKernelExpectation expected_step_kernel(const ModelParams& params, const RiskPremia& premia);

}  // namespace jumpemm

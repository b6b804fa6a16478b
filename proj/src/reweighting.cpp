#include "jumpemm/reweighting.hpp"

#include <cmath>
#include <vector>

#include "jumpemm/error.hpp"
#include "jumpemm/measure.hpp"

namespace jumpemm {

MeanEstimate path_kernel_mean(const ModelParams& params, const RiskPremia& premia,
                              std::size_t n_paths, std::size_t n_steps, SeedSpec seeds,
                              unsigned threads) {
  if (n_paths < 2) throw InputError("path_kernel_mean needs at least two paths");
  const RiskNeutralSpec rn = risk_neutralize(params, premia);
  const StepSampler sampler = StepSampler::physical(params);
  const auto kernels =
      map_paths(sampler, n_steps, n_paths, seeds, threads,
                [&](std::size_t, std::span<const SimulatedStep> steps) {
                  double log_l = 0.0;
                  for (const auto& s : steps) log_l += log_step_kernel(s.outcome, rn, params, premia);
                  return std::exp(log_l);
                });
  return estimate_mean(kernels);
}

GirsanovMoments girsanov_moments(const ModelParams& params, const RiskPremia& premia,
                                 std::size_t n_samples, SeedSpec seeds, unsigned threads) {
  if (n_samples < 2) throw InputError("girsanov_moments needs at least two samples");
  const RiskNeutralSpec rn = risk_neutralize(params, premia);
  const StepSampler sampler = StepSampler::physical(params);
  GirsanovMoments out;
  out.expected_mean = -premia.gamma_d * params.sigma * params.tau;
  out.expected_variance = params.tau;

  std::vector<double> dws(n_samples);
  const auto weights = map_paths(sampler, 1, n_samples, seeds, threads,
                                 [&](std::size_t i, std::span<const SimulatedStep> steps) {
                                   const StepOutcome& o = steps.front().outcome;
                                   dws[i] = o.dw;
                                   return step_kernel(o, rn, params, premia);
                                 });
  std::vector<double> weighted_dw(n_samples);
  std::vector<double> weighted_sq(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double d = dws[i] - out.expected_mean;
    weighted_dw[i] = weights[i] * dws[i];
    weighted_sq[i] = weights[i] * d * d;
  }
  out.mean = estimate_mean(weighted_dw);
  out.variance = estimate_mean(weighted_sq);
  return out;
}

}  // namespace jumpemm

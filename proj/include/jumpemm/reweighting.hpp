#pragma once

#include <cstddef>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"
#include "jumpemm/parallel.hpp"
#include "jumpemm/sim.hpp"
#include "jumpemm/stats.hpp"

namespace jumpemm {

/// Monte Carlo mean of the multi-step kernel over P-simulated paths; the
/// target is 1.
MeanEstimate path_kernel_mean(const ModelParams& params, const RiskPremia& premia,
                              std::size_t n_paths, std::size_t n_steps, SeedSpec seeds,
                              unsigned threads = default_thread_count());

/// Kernel-reweighted moments of the P increment dw over one-step P samples.
struct GirsanovMoments {
  MeanEstimate mean;      // samples of L * dw
  MeanEstimate variance;  // samples of L * (dw - expected_mean)^2
  double expected_mean = 0.0;      // -gamma * sigma * tau
  double expected_variance = 0.0;  // tau
};

GirsanovMoments girsanov_moments(const ModelParams& params, const RiskPremia& premia,
                                 std::size_t n_samples, SeedSpec seeds,
                                 unsigned threads = default_thread_count());

}  // namespace jumpemm

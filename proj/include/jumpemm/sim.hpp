#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jumpemm/esscher.hpp"
#include "jumpemm/measure.hpp"
#include "jumpemm/model.hpp"
#include "jumpemm/parallel.hpp"
#include "jumpemm/rng.hpp"

namespace jumpemm {

/// Master seed; path i draws from the Philox stream keyed by the seed at
/// counter (step, lane, i).
struct SeedSpec {
  std::uint64_t master_seed = 0;
};

enum class Measure { P, Q };

/// Drift used by risk-neutral simulation: the no-arbitrage value, or the
/// (possibly arbitrary) params.mu for negative controls.
enum class DriftMode { NoArbitrage, Params };

struct SimulatedStep {
  StepOutcome outcome;
  double log_return = 0.0;
};

/// A simulated price path. prices[0] == s0 and prices[i+1] ==
/// prices[i] * exp(log_returns[i]).
struct Path {
  double s0 = 1.0;
  std::vector<StepOutcome> steps;
  std::vector<double> log_returns;
  std::vector<double> prices;
};

/// Draws single steps of the model under P or Q.
///
/// Under Q the Q-Brownian increment is drawn and shifted by -gamma*sigma*tau
/// to recover the P increment that triggers jumps; jump kinds then follow
/// q_jk and sizes the tilted laws. Both measures consume uniforms in the same
/// layout, so equal seeds give common random numbers across P and Q runs.
class StepSampler {
 public:
  static StepSampler physical(const ModelParams& params);
  static StepSampler risk_neutral(const ModelParams& params, const RiskPremia& premia,
                                  const RiskNeutralSpec& rn, DriftMode mode);

  SimulatedStep draw(const CounterStream& stream, std::uint64_t path, std::uint32_t step) const;

  Measure measure() const { return measure_; }
  double drift() const { return drift_; }
  const ModelParams& params() const { return params_; }

 private:
  struct JumpTable {
    double p_up = 0.0;
    double p_down = 0.0;
    JumpLaw law_up;
    JumpLaw law_down;
  };

  StepSampler(const ModelParams& params, Measure measure, double drift, double dw_shift,
              const JumpTable& down, const JumpTable& up);

  ModelParams params_;
  Measure measure_;
  double drift_;
  double dw_shift_;
  double root_tau_;
  double drift_term_;
  JumpTable down_;
  JumpTable up_;
};

inline constexpr std::size_t kPathBlockSize = 4096;

/// Simulates path `index` from the sampler's stream.
Path simulate_path(const StepSampler& sampler, const CounterStream& stream, std::uint64_t index,
                   double s0, std::size_t n_steps);

std::vector<Path> simulate_p(const ModelParams& params, double s0, std::size_t n_steps,
                             std::size_t n_paths, SeedSpec seeds,
                             unsigned threads = default_thread_count());

std::vector<Path> simulate_q(const ModelParams& params, const RiskPremia& premia,
                             const RiskNeutralSpec& rn, DriftMode mode, double s0,
                             std::size_t n_steps, std::size_t n_paths, SeedSpec seeds,
                             unsigned threads = default_thread_count());

/// Evaluates fn(path_index, steps) -> double for every path without storing
/// paths. Output slot i belongs to path i, so the result is independent of
/// the thread count.
template <class Fn>
std::vector<double> map_paths(const StepSampler& sampler, std::size_t n_steps,
                              std::size_t n_paths, SeedSpec seeds, unsigned threads, Fn&& fn) {
  std::vector<double> out(n_paths);
  const CounterStream stream(seeds.master_seed);
  const std::size_t n_blocks = (n_paths + kPathBlockSize - 1) / kPathBlockSize;
  parallel_for_blocks(n_blocks, threads, [&](std::size_t block) {
    std::vector<SimulatedStep> steps(n_steps);
    const std::size_t begin = block * kPathBlockSize;
    const std::size_t end = std::min(n_paths, begin + kPathBlockSize);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < n_steps; ++k) {
        steps[k] = sampler.draw(stream, i, static_cast<std::uint32_t>(k));
      }
      out[i] = fn(i, std::span<const SimulatedStep>(steps));
    }
  });
  return out;
}

}  // namespace jumpemm

#include "jumpemm/sim.hpp"

#include <cmath>
#include <limits>

#include "jumpemm/drift.hpp"
#include "jumpemm/error.hpp"
#include "jumpemm/normal.hpp"

namespace jumpemm {

StepSampler::StepSampler(const ModelParams& params, Measure measure, double drift,
                         double dw_shift, const JumpTable& down, const JumpTable& up)
    : params_(params),
      measure_(measure),
      drift_(drift),
      dw_shift_(dw_shift),
      root_tau_(std::sqrt(params.tau)),
      drift_term_((drift - 0.5 * params.sigma * params.sigma) * params.tau),
      down_(down),
      up_(up) {}

StepSampler StepSampler::physical(const ModelParams& params) {
  require_valid(params);
  auto table = [](const RegionJumpSpec& s) {
    return JumpTable{s.p_up, s.p_down, s.law_up, s.law_down};
  };
  return StepSampler(params, Measure::P, params.mu, 0.0, table(params.region1),
                     table(params.region2));
}

StepSampler StepSampler::risk_neutral(const ModelParams& params, const RiskPremia& premia,
                                      const RiskNeutralSpec& rn, DriftMode mode) {
  require_valid(params);
  require_valid(premia);
  const double drift =
      mode == DriftMode::NoArbitrage ? no_arbitrage_drift(params, premia).mu : params.mu;
  auto table = [](const RiskNeutralRegion& r) {
    return JumpTable{r.q_up, r.q_down, r.law_up, r.law_down};
  };
  const double shift = -premia.gamma_d * params.sigma * params.tau;
  return StepSampler(params, Measure::Q, drift, shift, table(rn.region1), table(rn.region2));
}

SimulatedStep StepSampler::draw(const CounterStream& stream, std::uint64_t path,
                                std::uint32_t step) const {
  const auto [u_dw, u_kind] = stream.uniforms(path, step, 0);
  SimulatedStep out;
  StepOutcome& o = out.outcome;
  o.dw = root_tau_ * normal_quantile(u_dw) + dw_shift_;
  o.region = classify_region(o.dw, params_);
  if (o.region != Region::Normal) {
    const JumpTable& table = o.region == Region::Down ? down_ : up_;
    const JumpLaw* law = nullptr;
    if (u_kind < table.p_up) {
      o.jump_kind = JumpKind::Up;
      law = &table.law_up;
    } else if (u_kind < table.p_up + table.p_down) {
      o.jump_kind = JumpKind::Down;
      law = &table.law_down;
    }
    if (law != nullptr) {
      const double u_size = stream.uniforms(path, step, 1)[0];
      o.jump_size = law->nu + law->delta * normal_quantile(u_size);
    }
  }
  out.log_return = drift_term_ + params_.sigma * o.dw + o.jump_size;
  return out;
}

namespace {

void check_counts(double s0, std::size_t n_steps, std::size_t n_paths) {
  if (!(s0 > 0.0) || !std::isfinite(s0)) throw InputError("initial price must be positive");
  if (n_steps < 1) throw InputError("n_steps must be at least 1");
  if (n_paths < 1) throw InputError("n_paths must be at least 1");
  if (n_steps > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("n_steps exceeds the 32-bit step counter");
  }
}

std::vector<Path> simulate_all(const StepSampler& sampler, double s0, std::size_t n_steps,
                               std::size_t n_paths, SeedSpec seeds, unsigned threads) {
  check_counts(s0, n_steps, n_paths);
  std::vector<Path> paths(n_paths);
  const CounterStream stream(seeds.master_seed);
  const std::size_t n_blocks = (n_paths + kPathBlockSize - 1) / kPathBlockSize;
  parallel_for_blocks(n_blocks, threads, [&](std::size_t block) {
    const std::size_t begin = block * kPathBlockSize;
    const std::size_t end = std::min(n_paths, begin + kPathBlockSize);
    for (std::size_t i = begin; i < end; ++i) {
      paths[i] = simulate_path(sampler, stream, i, s0, n_steps);
    }
  });
  return paths;
}

}  // namespace

Path simulate_path(const StepSampler& sampler, const CounterStream& stream, std::uint64_t index,
                   double s0, std::size_t n_steps) {
  Path path;
  path.s0 = s0;
  path.steps.reserve(n_steps);
  path.log_returns.reserve(n_steps);
  path.prices.reserve(n_steps + 1);
  path.prices.push_back(s0);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const SimulatedStep step = sampler.draw(stream, index, static_cast<std::uint32_t>(k));
    path.steps.push_back(step.outcome);
    path.log_returns.push_back(step.log_return);
    path.prices.push_back(path.prices.back() * std::exp(step.log_return));
  }
  return path;
}

std::vector<Path> simulate_p(const ModelParams& params, double s0, std::size_t n_steps,
                             std::size_t n_paths, SeedSpec seeds, unsigned threads) {
  return simulate_all(StepSampler::physical(params), s0, n_steps, n_paths, seeds, threads);
}

std::vector<Path> simulate_q(const ModelParams& params, const RiskPremia& premia,
                             const RiskNeutralSpec& rn, DriftMode mode, double s0,
                             std::size_t n_steps, std::size_t n_paths, SeedSpec seeds,
                             unsigned threads) {
  return simulate_all(StepSampler::risk_neutral(params, premia, rn, mode), s0, n_steps, n_paths,
                      seeds, threads);
}

}  // namespace jumpemm

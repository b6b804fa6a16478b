#include "jumpemm/pricing.hpp"

#include <algorithm>
#include <cmath>

#include "jumpemm/error.hpp"
#include "jumpemm/normal.hpp"

namespace jumpemm {

const char* to_string(OptionType type) { return type == OptionType::Call ? "call" : "put"; }

double Payoff::operator()(double s) const {
  return type == OptionType::Call ? std::max(s - strike, 0.0) : std::max(strike - s, 0.0);
}

void require_valid(const Payoff& payoff) {
  if (!(payoff.strike >= 0.0) || !std::isfinite(payoff.strike)) {
    throw InputError("payoff strike must be finite and non-negative");
  }
}

namespace {

StepSampler pricing_sampler(const ModelParams& params, const RiskPremia& premia,
                            DriftMode mode) {
  return StepSampler::risk_neutral(params, premia, risk_neutralize(params, premia), mode);
}

void check_run(double s0, std::size_t steps, std::size_t n_paths) {
  if (!(s0 > 0.0) || !std::isfinite(s0)) throw InputError("initial price must be positive");
  if (steps < 1) throw InputError("maturity must be at least one step");
  if (n_paths < 2) throw InputError("pricing needs at least two paths");
}

}  // namespace

std::vector<double> terminal_prices(const ModelParams& params, const RiskPremia& premia,
                                    double s0, std::size_t maturity_steps, std::size_t n_paths,
                                    SeedSpec seeds, const PricingOptions& options) {
  check_run(s0, maturity_steps, n_paths);
  const StepSampler sampler = pricing_sampler(params, premia, options.drift_mode);
  return map_paths(sampler, maturity_steps, n_paths, seeds, options.threads,
                   [s0](std::size_t, std::span<const SimulatedStep> steps) {
                     double log_ret = 0.0;
                     for (const auto& s : steps) log_ret += s.log_return;
                     return s0 * std::exp(log_ret);
                   });
}

std::vector<PricingResult> price_european(const ModelParams& params, const RiskPremia& premia,
                                          std::span<const Payoff> payoffs, double s0,
                                          std::size_t maturity_steps, std::size_t n_paths,
                                          SeedSpec seeds, const PricingOptions& options) {
  for (const auto& p : payoffs) require_valid(p);
  const std::vector<double> terminal =
      terminal_prices(params, premia, s0, maturity_steps, n_paths, seeds, options);
  const double maturity = static_cast<double>(maturity_steps) * params.tau;
  const double discount = std::exp(-params.r * maturity);

  std::vector<PricingResult> out;
  out.reserve(payoffs.size());
  std::vector<double> discounted(n_paths);
  for (const auto& payoff : payoffs) {
    for (std::size_t i = 0; i < n_paths; ++i) discounted[i] = discount * payoff(terminal[i]);
    const MeanEstimate est = estimate_mean(discounted);
    out.push_back({est.mean, est.std_error, n_paths, discount, payoff, maturity});
  }
  return out;
}

PricingResult price_european(const ModelParams& params, const RiskPremia& premia,
                             const Payoff& payoff, double s0, std::size_t maturity_steps,
                             std::size_t n_paths, SeedSpec seeds, const PricingOptions& options) {
  return price_european(params, premia, std::span<const Payoff>(&payoff, 1), s0, maturity_steps,
                        n_paths, seeds, options)
      .front();
}

double black_scholes_reference(double s0, double strike, double r, double sigma, double maturity,
                               OptionType type) {
  if (!(s0 > 0.0) || !(strike >= 0.0) || !(sigma >= 0.0) || !(maturity >= 0.0)) {
    throw InputError("black_scholes_reference: inputs must be non-negative, s0 positive");
  }
  const double discount = std::exp(-r * maturity);
  const double forward = s0 * std::exp(r * maturity);
  const double vol = sigma * std::sqrt(maturity);
  double call;
  if (vol == 0.0 || strike == 0.0) {
    call = discount * std::max(forward - strike, 0.0);
  } else {
    const double d1 = (std::log(forward / strike) + 0.5 * vol * vol) / vol;
    const double d2 = d1 - vol;
    call = discount * (forward * normal_cdf(d1) - strike * normal_cdf(d2));
  }
  if (type == OptionType::Call) return call;
  // Put-call parity.
  return call - s0 + strike * discount;
}

MartingaleReport martingale_check(const ModelParams& params, const RiskPremia& premia,
                                  std::size_t n_paths, std::size_t horizon_steps, SeedSpec seeds,
                                  const PricingOptions& options) {
  check_run(1.0, horizon_steps, n_paths);
  const StepSampler sampler = pricing_sampler(params, premia, options.drift_mode);
  const CounterStream stream(seeds.master_seed);
  const std::size_t n_blocks = (n_paths + kPathBlockSize - 1) / kPathBlockSize;
  const double r_tau = params.r * params.tau;

  std::vector<std::vector<RunningStats>> partial(n_blocks,
                                                 std::vector<RunningStats>(horizon_steps));
  parallel_for_blocks(n_blocks, options.threads, [&](std::size_t block) {
    auto& acc = partial[block];
    const std::size_t begin = block * kPathBlockSize;
    const std::size_t end = std::min(n_paths, begin + kPathBlockSize);
    for (std::size_t i = begin; i < end; ++i) {
      double log_ret = 0.0;
      for (std::size_t k = 0; k < horizon_steps; ++k) {
        log_ret += sampler.draw(stream, i, static_cast<std::uint32_t>(k)).log_return;
        acc[k].push(std::exp(log_ret - r_tau * static_cast<double>(k + 1)));
      }
    }
  });

  // Tree reduction in block order keeps the result independent of threads.
  for (std::size_t width = 1; width < n_blocks; width *= 2) {
    for (std::size_t b = 0; b + width < n_blocks; b += 2 * width) {
      for (std::size_t k = 0; k < horizon_steps; ++k) partial[b][k].merge(partial[b + width][k]);
    }
  }

  MartingaleReport report;
  report.drift = sampler.drift();
  for (std::size_t k = 0; k < horizon_steps; ++k) {
    const MeanEstimate est = partial[0][k].estimate();
    report.per_step.push_back(est);
    report.z.push_back(est.z_score(1.0));
    report.max_abs_z = std::max(report.max_abs_z, std::abs(report.z.back()));
  }
  return report;
}

}  // namespace jumpemm

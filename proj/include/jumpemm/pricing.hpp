#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"
#include "jumpemm/parallel.hpp"
#include "jumpemm/sim.hpp"
#include "jumpemm/stats.hpp"

namespace jumpemm {

enum class OptionType { Call, Put };

const char* to_string(OptionType type);

/// European vanilla payoff. Strike 0 is allowed: the call then pays S_T.
struct Payoff {
  OptionType type = OptionType::Call;
  double strike = 0.0;

  double operator()(double terminal_price) const;
};

void require_valid(const Payoff& payoff);

struct PricingResult {
  double price = 0.0;
  double std_error = 0.0;
  std::size_t n_paths = 0;
  double discount_factor = 1.0;  // exp(-r * maturity_steps * tau)
  Payoff payoff;
  double maturity = 0.0;  // years
};

struct PricingOptions {
  /// NoArbitrage overwrites params.mu with the no-arbitrage drift. Params
  /// keeps params.mu and exists for negative tests only.
  DriftMode drift_mode = DriftMode::NoArbitrage;
  unsigned threads = default_thread_count();
};

/// Terminal prices S_T of n_paths risk-neutral paths; slot i is path i.
std::vector<double> terminal_prices(const ModelParams& params, const RiskPremia& premia,
                                    double s0, std::size_t maturity_steps, std::size_t n_paths,
                                    SeedSpec seeds, const PricingOptions& options = {});

/// Discounted Monte Carlo value of each payoff on one common set of paths.
std::vector<PricingResult> price_european(const ModelParams& params, const RiskPremia& premia,
                                          std::span<const Payoff> payoffs, double s0,
                                          std::size_t maturity_steps, std::size_t n_paths,
                                          SeedSpec seeds, const PricingOptions& options = {});

PricingResult price_european(const ModelParams& params, const RiskPremia& premia,
                             const Payoff& payoff, double s0, std::size_t maturity_steps,
                             std::size_t n_paths, SeedSpec seeds,
                             const PricingOptions& options = {});

/// Black-Scholes value, including the T -> 0 and sigma -> 0 limits.
double black_scholes_reference(double s0, double strike, double r, double sigma, double maturity,
                               OptionType type);

/// Per-step test of E_Q[exp(-r k tau) S_k / s0] = 1.
struct MartingaleReport {
  std::vector<MeanEstimate> per_step;  // index k-1 holds step k
  std::vector<double> z;
  double max_abs_z = 0.0;
  double drift = 0.0;
};

MartingaleReport martingale_check(const ModelParams& params, const RiskPremia& premia,
                                  std::size_t n_paths, std::size_t horizon_steps, SeedSpec seeds,
                                  const PricingOptions& options = {});

}  // namespace jumpemm

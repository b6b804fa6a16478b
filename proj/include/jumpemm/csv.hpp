#pragma once

#include <ostream>
#include <span>
#include <string>

#include "jumpemm/pricing.hpp"
#include "jumpemm/sim.hpp"

namespace jumpemm {

/// Shortest decimal form that round-trips the double ("%.17g").
std::string format_number(double value);

/// Path table: path, step, dw, region, jump_kind, jump_size, log_return, price.
/// Steps are numbered from 1; price is the price after the step.
void write_paths_csv(std::ostream& out, std::span<const Path> paths);

/// Price table: payoff, strike, maturity, price, std_error, n_paths.
void write_prices_csv(std::ostream& out, std::span<const PricingResult> results);

}  // namespace jumpemm

#include "jumpemm/csv.hpp"

#include <cstdio>

namespace jumpemm {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_paths_csv(std::ostream& out, std::span<const Path> paths) {
  out << "path,step,dw,region,jump_kind,jump_size,log_return,price\n";
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const Path& path = paths[p];
    for (std::size_t k = 0; k < path.steps.size(); ++k) {
      const StepOutcome& o = path.steps[k];
      out << p << ',' << k + 1 << ',' << format_number(o.dw) << ',' << to_string(o.region) << ','
          << to_string(o.jump_kind) << ',' << format_number(o.jump_size) << ','
          << format_number(path.log_returns[k]) << ',' << format_number(path.prices[k + 1])
          << '\n';
    }
  }
}

void write_prices_csv(std::ostream& out, std::span<const PricingResult> results) {
  out << "payoff,strike,maturity,price,std_error,n_paths\n";
  for (const auto& r : results) {
    out << to_string(r.payoff.type) << ',' << format_number(r.payoff.strike) << ','
        << format_number(r.maturity) << ',' << format_number(r.price) << ','
        << format_number(r.std_error) << ',' << r.n_paths << '\n';
  }
}

}  // namespace jumpemm

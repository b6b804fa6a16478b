#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "jumpemm/esscher.hpp"
#include "jumpemm/model.hpp"
#include "jumpemm/pricing.hpp"

namespace jumpemm {

/// Unreadable or ill-formed configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimConfig {
  std::size_t n_paths = 1000;
  std::size_t n_steps = 1;
  std::uint64_t master_seed = 0;
  double s0 = 100.0;
};

struct PricingConfig {
  Payoff payoff;
  std::size_t maturity_steps = 1;
};

struct RunConfig {
  ModelParams model;
  RiskPremia premia;
  SimConfig sim;
  std::optional<PricingConfig> pricing;
  std::filesystem::path output_dir = ".";
};

/// Builds a RunConfig from its JSON form. Probability triples within 1e-9 of
/// summing to one are renormalized; model invariants are not checked here.
RunConfig parse_config(const nlohmann::json& doc);

RunConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& config);

}  // namespace jumpemm

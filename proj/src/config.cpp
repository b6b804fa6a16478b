#include "jumpemm/config.hpp"

#include <fstream>

namespace jumpemm {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(where + "." + key + ": missing");
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

double number_or(const json& obj, const char* key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  return number(obj, key, where);
}

std::uint64_t count_or(const json& obj, const char* key, const std::string& where,
                       std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(where + "." + key + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

JumpLaw parse_law(const json& obj, const std::string& where) {
  return {number(obj, "nu", where), number(obj, "delta", where)};
}

RegionJumpSpec parse_region(const json& obj, const std::string& where) {
  RegionJumpSpec spec;
  spec.p_up = number(obj, "p_up", where);
  spec.p_down = number(obj, "p_down", where);
  spec.p_none = number(obj, "p_none", where);
  spec.law_up = parse_law(member(obj, "law_up", where), where + ".law_up");
  spec.law_down = parse_law(member(obj, "law_down", where), where + ".law_down");
  return spec;
}

json law_json(const JumpLaw& law) { return {{"nu", law.nu}, {"delta", law.delta}}; }

json region_json(const RegionJumpSpec& s) {
  return {{"p_up", s.p_up},
          {"p_down", s.p_down},
          {"p_none", s.p_none},
          {"law_up", law_json(s.law_up)},
          {"law_down", law_json(s.law_down)}};
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig cfg;

  const json& m = member(doc, "model", "config");
  cfg.model.mu = number_or(m, "mu", "model", 0.0);
  cfg.model.sigma = number(m, "sigma", "model");
  cfg.model.r = number(m, "r", "model");
  cfg.model.tau = number(m, "tau", "model");
  cfg.model.b_down = number(m, "b_down", "model");
  cfg.model.b_up = number(m, "b_up", "model");
  cfg.model.region1 = parse_region(member(m, "region1", "model"), "model.region1");
  cfg.model.region2 = parse_region(member(m, "region2", "model"), "model.region2");
  cfg.model = normalize_probabilities(cfg.model);

  if (doc.contains("premia")) {
    const json& p = doc.at("premia");
    if (!p.is_object()) throw ConfigError("premia: expected an object");
    cfg.premia.gamma_d = number_or(p, "gamma_d", "premia", 0.0);
    cfg.premia.eta_1u = number_or(p, "eta_1u", "premia", 0.0);
    cfg.premia.eta_1d = number_or(p, "eta_1d", "premia", 0.0);
    cfg.premia.eta_2u = number_or(p, "eta_2u", "premia", 0.0);
    cfg.premia.eta_2d = number_or(p, "eta_2d", "premia", 0.0);
  }

  if (doc.contains("sim")) {
    const json& s = doc.at("sim");
    if (!s.is_object()) throw ConfigError("sim: expected an object");
    cfg.sim.n_paths = count_or(s, "n_paths", "sim", cfg.sim.n_paths);
    cfg.sim.n_steps = count_or(s, "n_steps", "sim", cfg.sim.n_steps);
    cfg.sim.master_seed = count_or(s, "master_seed", "sim", cfg.sim.master_seed);
    cfg.sim.s0 = number_or(s, "s0", "sim", cfg.sim.s0);
  }

  if (doc.contains("pricing") && !doc.at("pricing").is_null()) {
    const json& p = doc.at("pricing");
    PricingConfig pc;
    const json& kind = member(p, "payoff", "pricing");
    if (kind == "call") {
      pc.payoff.type = OptionType::Call;
    } else if (kind == "put") {
      pc.payoff.type = OptionType::Put;
    } else {
      throw ConfigError("pricing.payoff: expected \"call\" or \"put\"");
    }
    pc.payoff.strike = number(p, "strike", "pricing");
    pc.maturity_steps = count_or(p, "maturity_steps", "pricing", 0);
    if (pc.maturity_steps == 0) throw ConfigError("pricing.maturity_steps: must be at least 1");
    cfg.pricing = pc;
  }

  if (doc.contains("output_dir")) {
    const json& o = doc.at("output_dir");
    if (!o.is_string()) throw ConfigError("output_dir: expected a string");
    cfg.output_dir = o.get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  try {
    return parse_config(doc);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

json to_json(const RunConfig& c) {
  json doc;
  doc["model"] = {{"mu", c.model.mu},
                  {"sigma", c.model.sigma},
                  {"r", c.model.r},
                  {"tau", c.model.tau},
                  {"b_down", c.model.b_down},
                  {"b_up", c.model.b_up},
                  {"region1", region_json(c.model.region1)},
                  {"region2", region_json(c.model.region2)}};
  doc["premia"] = {{"gamma_d", c.premia.gamma_d},
                   {"eta_1u", c.premia.eta_1u},
                   {"eta_1d", c.premia.eta_1d},
                   {"eta_2u", c.premia.eta_2u},
                   {"eta_2d", c.premia.eta_2d}};
  doc["sim"] = {{"n_paths", c.sim.n_paths},
                {"n_steps", c.sim.n_steps},
                {"master_seed", c.sim.master_seed},
                {"s0", c.sim.s0}};
  if (c.pricing) {
    doc["pricing"] = {{"payoff", to_string(c.pricing->payoff.type)},
                      {"strike", c.pricing->payoff.strike},
                      {"maturity_steps", c.pricing->maturity_steps}};
  }
  doc["output_dir"] = c.output_dir.string();
  return doc;
}

}  // namespace jumpemm

#include "jumpemm/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jumpemm/error.hpp"

namespace jumpemm {

const char* to_string(Region region) {
  switch (region) {
    case Region::Down:
      return "down";
    case Region::Up:
      return "up";
    case Region::Normal:
      break;
  }
  return "normal";
}

const char* to_string(JumpKind kind) {
  switch (kind) {
    case JumpKind::Up:
      return "up";
    case JumpKind::Down:
      return "down";
    case JumpKind::None:
      break;
  }
  return "none";
}

std::string to_string(const Violation& v) { return v.field + ": " + v.constraint; }

namespace {

void check_finite(std::vector<Violation>& out, const std::string& field, double value) {
  if (!std::isfinite(value)) out.push_back({field, "must be finite"});
}

void check_law(std::vector<Violation>& out, const std::string& field, const JumpLaw& law) {
  check_finite(out, field + ".nu", law.nu);
  if (!(law.delta > 0.0) || !std::isfinite(law.delta)) {
    out.push_back({field + ".delta", "delta > 0 required"});
  }
}

void check_region(std::vector<Violation>& out, const std::string& field,
                  const RegionJumpSpec& spec) {
  bool in_range = true;
  for (double p : {spec.p_up, spec.p_down, spec.p_none}) {
    if (!(p >= 0.0 && p <= 1.0)) in_range = false;
  }
  if (!in_range) {
    out.push_back({field, "probabilities in [0,1] required"});
  } else if (std::abs(spec.p_up + spec.p_down + spec.p_none - 1.0) >
             kProbabilitySumTolerance) {
    out.push_back({field, "p_up + p_down + p_none = 1 required"});
  }
  check_law(out, field + ".law_up", spec.law_up);
  check_law(out, field + ".law_down", spec.law_down);
}

}  // namespace

std::vector<Violation> validate(const ModelParams& params) {
  std::vector<Violation> out;
  check_finite(out, "mu", params.mu);
  if (!(params.sigma > 0.0) || !std::isfinite(params.sigma)) {
    out.push_back({"sigma", "sigma > 0 required"});
  }
  if (!(params.r >= 0.0) || !std::isfinite(params.r)) {
    out.push_back({"r", "r >= 0 required"});
  }
  if (!(params.tau > 0.0) || !std::isfinite(params.tau)) {
    out.push_back({"tau", "tau > 0 required"});
  }
  if (!(params.b_down < 0.0)) out.push_back({"b_down", "b_down < 0 required"});
  if (!(params.b_up > 0.0)) out.push_back({"b_up", "b_up > 0 required"});
  check_region(out, "region1", params.region1);
  check_region(out, "region2", params.region2);
  return out;
}

void require_valid(const ModelParams& params) {
  auto violations = validate(params);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid model parameters:";
  for (const auto& v : violations) msg << ' ' << to_string(v) << ';';
  throw InputError(msg.str());
}

namespace {

void renormalize(RegionJumpSpec& spec) {
  const double sum = spec.p_up + spec.p_down + spec.p_none;
  if (!std::isfinite(sum) || std::abs(sum - 1.0) > kProbabilityIngestTolerance) return;
  if (spec.p_up < 0.0 || spec.p_down < 0.0 || spec.p_none < 0.0) return;
  spec.p_up /= sum;
  spec.p_down /= sum;
  // Absorb the residual rounding into p_none so the sum is 1 to the last ulp
  // whenever that is representable.
  spec.p_none = std::max(0.0, 1.0 - spec.p_up - spec.p_down);
}

}  // namespace

ModelParams normalize_probabilities(ModelParams params) {
  renormalize(params.region1);
  renormalize(params.region2);
  return params;
}

Region classify_region(double dw, const ModelParams& params) {
  if (!std::isfinite(dw)) throw InputError("classify_region: non-finite diffusion increment");
  const double root_tau = std::sqrt(params.tau);
  if (dw < params.b_down * root_tau) return Region::Down;
  if (dw > params.b_up * root_tau) return Region::Up;
  return Region::Normal;
}

RegionJumpSpec region_spec(const ModelParams& params, Region region) {
  switch (region) {
    case Region::Down:
      return params.region1;
    case Region::Up:
      return params.region2;
    case Region::Normal:
      break;
  }
  return RegionJumpSpec{};
}

}  // namespace jumpemm

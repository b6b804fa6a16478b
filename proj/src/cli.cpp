#include "jumpemm/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumpemm/config.hpp"
#include "jumpemm/csv.hpp"
#include "jumpemm/drift.hpp"
#include "jumpemm/error.hpp"
#include "jumpemm/measure.hpp"
#include "jumpemm/oracle.hpp"
#include "jumpemm/parallel.hpp"
#include "jumpemm/pricing.hpp"
#include "jumpemm/reweighting.hpp"
#include "jumpemm/sim.hpp"

namespace jumpemm {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// |z| above which rn-check reports a failure.
constexpr double kDiagnosticZLimit = 5.0;

struct CliOptions {
  std::string config;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t paths = 0;
  unsigned threads = default_thread_count();
  bool json = false;
  bool decompose = false;
  std::string measure = "p";
  std::string drift = "params";

  CLI::App* active = nullptr;
};

class Command {
 public:
  Command(const CliOptions& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  int validate() {
    load();
    const auto violations = jumpemm::validate(cfg_.model);
    if (opt_.json) {
      json report = {{"valid", violations.empty()}, {"violations", json::array()}};
      for (const auto& v : violations) report["violations"].push_back(to_string(v));
      out_ << report.dump(2) << '\n';
    } else {
      for (const auto& v : violations) out_ << to_string(v) << '\n';
    }
    return violations.empty() ? kExitOk : kExitFailed;
  }

  int drift() {
    if (!load_valid()) return kExitFailed;
    const DriftReport r = no_arbitrage_drift(cfg_.model, cfg_.premia);
    if (opt_.json) {
      json report = {{"mu", r.mu},
                     {"risk_free", r.risk_free},
                     {"diffusion_premium", r.diffusion_premium},
                     {"jump_adjustment", r.jump_adjustment},
                     {"expectation_value", r.expectation_value},
                     {"m1", r.m1},
                     {"m2", r.m2},
                     {"shift_mean", r.shift_mean}};
      out_ << report.dump(2) << '\n';
      return kExitOk;
    }
    if (opt_.decompose) {
      line("risk-free rate", r.risk_free);
      line("diffusion risk premium", r.diffusion_premium);
      line("jump risk adjustment", r.jump_adjustment);
      line("expectation_value", r.expectation_value);
    }
    line("mu", r.mu);
    return kExitOk;
  }

  int simulate() {
    if (!load_valid()) return kExitFailed;
    const SeedSpec seeds{cfg_.sim.master_seed};
    std::vector<Path> paths;
    if (opt_.measure == "p") {
      paths = simulate_p(cfg_.model, cfg_.sim.s0, cfg_.sim.n_steps, cfg_.sim.n_paths, seeds,
                         opt_.threads);
    } else {
      const DriftMode mode =
          opt_.drift == "no-arbitrage" ? DriftMode::NoArbitrage : DriftMode::Params;
      paths = simulate_q(cfg_.model, cfg_.premia, risk_neutralize(cfg_.model, cfg_.premia), mode,
                         cfg_.sim.s0, cfg_.sim.n_steps, cfg_.sim.n_paths, seeds, opt_.threads);
    }
    const fs::path file = output_dir() / ("paths_" + opt_.measure + ".csv");
    write_file(file, [&](std::ostream& os) { write_paths_csv(os, paths); });
    if (opt_.json) {
      out_ << json{{"file", file.string()}, {"n_paths", paths.size()}}.dump(2) << '\n';
    } else {
      out_ << "wrote " << paths.size() << " paths to " << file.string() << '\n';
    }
    return kExitOk;
  }

  int price() {
    if (!load_valid()) return kExitFailed;
    if (!cfg_.pricing) throw ConfigError("config has no pricing section");
    PricingOptions options;
    options.threads = opt_.threads;
    const PricingResult r = price_european(cfg_.model, cfg_.premia, cfg_.pricing->payoff,
                                           cfg_.sim.s0, cfg_.pricing->maturity_steps,
                                           cfg_.sim.n_paths, {cfg_.sim.master_seed}, options);
    const fs::path file = output_dir() / "prices.csv";
    write_file(file, [&](std::ostream& os) {
      write_prices_csv(os, std::span<const PricingResult>(&r, 1));
    });
    if (opt_.json) {
      out_ << json{{"payoff", to_string(r.payoff.type)},
                   {"strike", r.payoff.strike},
                   {"maturity", r.maturity},
                   {"price", r.price},
                   {"std_error", r.std_error},
                   {"n_paths", r.n_paths},
                   {"file", file.string()}}
                  .dump(2)
           << '\n';
    } else {
      line("price", r.price);
      line("std_error", r.std_error);
    }
    return kExitOk;
  }

  int rn_check() {
    if (!load_valid()) return kExitFailed;
    const ModelParams& params = cfg_.model;
    const RiskPremia& premia = cfg_.premia;
    const SeedSpec seeds{cfg_.sim.master_seed};
    const std::size_t n = std::max<std::size_t>(cfg_.sim.n_paths, 2);
    const std::size_t steps = cfg_.sim.n_steps;
    const RiskNeutralSpec rn = risk_neutralize(params, premia);

    const double closed = expected_step_kernel(params, premia).total;
    deterministic("unit mean (closed form)", closed, 1.0, 1e-10);
    deterministic("unit mean (quadrature)", oracle::expect_step_kernel(params, premia).value,
                  1.0, 1e-8);

    ModelParams arbitrage_free = params;
    arbitrage_free.mu = no_arbitrage_drift(params, premia).mu;
    deterministic("q return (quadrature)",
                  oracle::expect_q_return(arbitrage_free, premia, rn).value,
                  std::exp(params.r * params.tau), 1e-8);

    stochastic("path kernel mean", path_kernel_mean(params, premia, n, steps, seeds, opt_.threads),
               1.0);
    const GirsanovMoments g = girsanov_moments(params, premia, n, seeds, opt_.threads);
    stochastic("girsanov mean shift", g.mean, g.expected_mean);
    stochastic("girsanov variance", g.variance, g.expected_variance);

    PricingOptions options;
    options.threads = opt_.threads;
    const MartingaleReport m = martingale_check(params, premia, n, steps, seeds, options);
    checks_.push_back({"discounted price martingale", m.max_abs_z, 0.0, m.max_abs_z,
                       m.max_abs_z <= kDiagnosticZLimit, true});

    bool ok = true;
    for (const auto& c : checks_) ok = ok && c.pass;
    if (opt_.json) {
      json report = {{"pass", ok}, {"checks", json::array()}};
      for (const auto& c : checks_) {
        report["checks"].push_back({{"name", c.name},
                                    {"value", c.value},
                                    {"target", c.target},
                                    {c.is_z ? "z" : "abs_error", c.score},
                                    {"pass", c.pass}});
      }
      out_ << report.dump(2) << '\n';
    } else {
      out_ << std::left << std::setw(30) << "check" << std::setw(26) << "value" << std::setw(26)
           << "target" << std::setw(26) << "z | abs error" << "status\n";
      for (const auto& c : checks_) {
        out_ << std::left << std::setw(30) << c.name << std::setw(26) << format_number(c.value)
             << std::setw(26) << format_number(c.target) << std::setw(26)
             << format_number(c.score) << (c.pass ? "PASS" : "FAIL") << '\n';
      }
    }
    return ok ? kExitOk : kExitFailed;
  }

 private:
  struct Check {
    std::string name;
    double value;
    double target;
    double score;
    bool pass;
    bool is_z;
  };

  void load() {
    cfg_ = load_config(opt_.config);
    if (opt_.active->count("--seed") > 0) cfg_.sim.master_seed = opt_.seed;
    if (opt_.active->count("--paths") > 0) cfg_.sim.n_paths = opt_.paths;
    if (opt_.active->count("--output") > 0) cfg_.output_dir = opt_.output;
  }

  bool load_valid() {
    load();
    const auto violations = jumpemm::validate(cfg_.model);
    for (const auto& v : violations) err_ << to_string(v) << '\n';
    return violations.empty();
  }

  fs::path output_dir() const {
    std::error_code ec;
    fs::create_directories(cfg_.output_dir, ec);
    if (ec) throw std::ios_base::failure("cannot create output directory " +
                                         cfg_.output_dir.string());
    return cfg_.output_dir;
  }

  template <class Writer>
  static void write_file(const fs::path& file, Writer&& writer) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open " + file.string() + " for writing");
    writer(os);
    os.flush();
    if (!os) throw std::ios_base::failure("write to " + file.string() + " failed");
  }

  void line(const char* label, double value) {
    out_ << std::left << std::setw(24) << label << format_number(value) << '\n';
  }

  void deterministic(const char* name, double value, double target, double tol) {
    const double diff = std::abs(value - target);
    checks_.push_back({name, value, target, diff, diff <= tol, false});
  }

  void stochastic(const char* name, const MeanEstimate& est, double target) {
    const double z = est.z_score(target);
    checks_.push_back({name, est.mean, target, z, std::abs(z) <= kDiagnosticZLimit, true});
  }

  const CliOptions& opt_;
  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
  std::vector<Check> checks_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arbitrage-free diffusion-triggered jump model: drift, simulation, pricing"};
  app.name(args.empty() ? "jumpemm" : args.front());
  app.require_subcommand(1);

  CliOptions opt;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "JSON run configuration")->required();
    sub->add_option("--output", opt.output, "Output directory override");
    sub->add_option("--seed", opt.seed, "Master seed override (u64)");
    sub->add_option("--paths", opt.paths, "Path count override");
    sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--json", opt.json, "Machine-readable report");
  };

  auto* validate = app.add_subcommand("validate", "Check model parameters");
  common(validate);
  auto* drift = app.add_subcommand("drift", "No-arbitrage drift report");
  common(drift);
  drift->add_flag("--decompose", opt.decompose, "Print the three drift components");
  auto* simulate = app.add_subcommand("simulate", "Write simulated paths as CSV");
  common(simulate);
  simulate->add_option("--measure", opt.measure, "p (physical) or q (risk-neutral)")
      ->check(CLI::IsMember({"p", "q"}));
  simulate
      ->add_option("--drift", opt.drift,
                   "Q-measure drift: params (config mu) or no-arbitrage")
      ->check(CLI::IsMember({"params", "no-arbitrage"}));
  auto* price = app.add_subcommand("price", "Monte Carlo price of the configured payoff");
  common(price);
  auto* rn_check = app.add_subcommand("rn-check", "Measure-change and martingale diagnostics");
  common(rn_check);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("jumpemm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitIo;
  }

  opt.active = app.get_subcommands().front();
  Command cmd(opt, out, err);
  try {
    if (validate->parsed()) return cmd.validate();
    if (drift->parsed()) return cmd.drift();
    if (simulate->parsed()) return cmd.simulate();
    if (price->parsed()) return cmd.price();
    if (rn_check->parsed()) return cmd.rn_check();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitIo;
}

}  // namespace jumpemm

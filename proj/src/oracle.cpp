#include "jumpemm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "jumpemm/error.hpp"
#include "jumpemm/normal.hpp"
#include "jumpemm/stats.hpp"

namespace jumpemm::oracle {

void require_valid(const GridSpec& grid) {
  if (!(grid.half_width >= 8.0)) throw InputError("grid half_width must be at least 8");
  if (grid.n_points < 5 || grid.n_points % 2 == 0) {
    throw InputError("grid n_points must be odd and at least 5");
  }
  if (grid.gauss_hermite_order < 2) throw InputError("Gauss-Hermite order must be at least 2");
}

GaussHermiteRule gauss_hermite_rule(int order) {
  if (order < 1) throw InputError("Gauss-Hermite order must be positive");
  const int n = order;
  const double pim4 = 0.7511255444649425;  // pi^(-1/4)
  GaussHermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Asymptotic initial guesses for the largest roots, then extrapolation.
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double prev = z;
      z = prev - p1 / pp;
      if (std::abs(z - prev) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

double jump_mgf(const JumpLaw& law, double c, const GridSpec& grid) {
  if (grid.jump_averaging == JumpAveraging::ExactMgf) {
    return std::exp(c * law.nu + 0.5 * c * c * law.delta * law.delta);
  }
  const GaussHermiteRule rule = gauss_hermite_rule(grid.gauss_hermite_order);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * std::exp(c * (law.nu + M_SQRT2 * law.delta * rule.nodes[i]));
  }
  return acc / std::sqrt(M_PI);
}

namespace {

struct Quadrature {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Composite trapezoid on [lo, hi] split at `breaks`, with one Richardson
/// step against the same nodes at double spacing. f(x, m) is called with the
/// midpoint m of the panel containing x, so step integrands can select their
/// level one-sidedly at the breaks.
template <class F>
Quadrature integrate_piecewise(F&& f, double lo, double hi, std::vector<double> breaks,
                               std::size_t n_points) {
  std::vector<double> edges{lo};
  std::sort(breaks.begin(), breaks.end());
  for (double b : breaks) {
    if (b > lo && b < hi) edges.push_back(b);
  }
  edges.push_back(hi);

  const double total = static_cast<double>(n_points - 1);
  Quadrature out;
  std::vector<double> fine_terms;
  std::vector<double> coarse_terms;
  std::vector<double> values;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    const auto half = std::max<long long>(1, std::llround(0.5 * total * (b - a) / (hi - lo)));
    const std::size_t n = static_cast<std::size_t>(2 * half);
    const double h = (b - a) / static_cast<double>(n);
    const double mid = 0.5 * (a + b);
    values.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      // Evaluate the last node at b exactly so the panel ends on the break.
      const double x = i == n ? b : a + h * static_cast<double>(i);
      values[i] = f(x, mid);
    }
    const double ends = 0.5 * (values.front() + values.back());
    const double sum_all = pairwise_sum(std::span<const double>(values).subspan(1, n - 1));
    double sum_even = 0.0;
    {
      std::vector<double> even;
      even.reserve(n / 2);
      for (std::size_t i = 2; i < n; i += 2) even.push_back(values[i]);
      sum_even = pairwise_sum(even);
    }
    const double fine = h * (ends + sum_all);
    const double coarse = 2.0 * h * (ends + sum_even);
    fine_terms.push_back(fine + (fine - coarse) / 3.0);
    coarse_terms.push_back(std::abs(fine - coarse) / 3.0);
  }
  out.value = pairwise_sum(fine_terms);
  out.error_estimate = pairwise_sum(coarse_terms);
  return out;
}

OracleResult finish(const Quadrature& q, double tail_bound) {
  if (!(q.error_estimate < kRichardsonTarget)) {
    throw RefinementFailure("oracle quadrature error estimate " + std::to_string(q.error_estimate) +
                            " exceeds target; refine the grid");
  }
  return {q.value, q.error_estimate, tail_bound};
}

/// Mass of N(mean, tau) outside [lo, hi].
double gaussian_tail(double mean, double tau, double lo, double hi) {
  const double s = std::sqrt(tau);
  return normal_cdf((lo - mean) / s) + normal_cdf(-(hi - mean) / s);
}

double gaussian_density(double x, double mean, double tau) {
  const double s = std::sqrt(tau);
  return normal_pdf((x - mean) / s) / s;
}

/// E_P[exp(c_k J_k) tilt | region] / Z for a region; c_k = extra + eta_k.
double region_average(const RegionJumpSpec& spec, double eta_up, double eta_down, double extra,
                      double z, const GridSpec& grid) {
  return (spec.p_up * jump_mgf(spec.law_up, extra + eta_up, grid) +
          spec.p_down * jump_mgf(spec.law_down, extra + eta_down, grid) + spec.p_none) /
         z;
}

}  // namespace

OracleResult expect_step_kernel(const ModelParams& params, const RiskPremia& premia,
                                const GridSpec& grid) {
  require_valid(grid);
  jumpemm::require_valid(params);
  jumpemm::require_valid(premia);
  const double root_tau = std::sqrt(params.tau);
  const double lo_thr = params.b_down * root_tau;
  const double hi_thr = params.b_up * root_tau;
  const double z1 = normalizer(params.region1, premia.eta_1u, premia.eta_1d);
  const double z2 = normalizer(params.region2, premia.eta_2u, premia.eta_2d);
  const double c1 = region_average(params.region1, premia.eta_1u, premia.eta_1d, 0.0, z1, grid);
  const double c2 = region_average(params.region2, premia.eta_2u, premia.eta_2d, 0.0, z2, grid);
  const double a = premia.gamma_d * params.sigma;

  auto integrand = [&](double x, double mid) {
    const double c = mid < lo_thr ? c1 : (mid > hi_thr ? c2 : 1.0);
    return std::exp(-a * x - 0.5 * a * a * params.tau) * c * gaussian_density(x, 0.0, params.tau);
  };
  const double lo = -grid.half_width * root_tau;
  const double hi = grid.half_width * root_tau;
  const Quadrature q = integrate_piecewise(integrand, lo, hi, {lo_thr, hi_thr}, grid.n_points);
  const double tail = std::max({1.0, c1, c2}) * gaussian_tail(-a * params.tau, params.tau, lo, hi);
  return finish(q, tail);
}

OracleResult expect_mq(const ModelParams& params, const RiskPremia& premia,
                       const RiskNeutralSpec& rn, const GridSpec& grid) {
  require_valid(grid);
  jumpemm::require_valid(params);
  jumpemm::require_valid(premia);
  const double root_tau = std::sqrt(params.tau);
  const double lo_thr = params.b_down * root_tau;
  const double hi_thr = params.b_up * root_tau;
  auto plateau = [&](const RiskNeutralRegion& r) {
    return r.q_up * jump_mgf(r.law_up, 1.0, grid) + r.q_down * jump_mgf(r.law_down, 1.0, grid) +
           r.q_none;
  };
  const double m1 = plateau(rn.region1);
  const double m2 = plateau(rn.region2);
  const double centre = params.sigma * (1.0 - premia.gamma_d) * params.tau;

  auto integrand = [&](double x, double mid) {
    const double m = mid < lo_thr ? m1 : (mid > hi_thr ? m2 : 1.0);
    return m * gaussian_density(x, centre, params.tau);
  };
  const double lo = centre - grid.half_width * root_tau;
  const double hi = centre + grid.half_width * root_tau;
  const Quadrature q = integrate_piecewise(integrand, lo, hi, {lo_thr, hi_thr}, grid.n_points);
  const double tail = std::max({1.0, m1, m2}) * gaussian_tail(centre, params.tau, lo, hi);
  return finish(q, tail);
}

OracleResult expect_q_return(const ModelParams& params, const RiskPremia& premia,
                             const RiskNeutralSpec& rn, const GridSpec& grid) {
  require_valid(grid);
  jumpemm::require_valid(params);
  jumpemm::require_valid(premia);
  const double root_tau = std::sqrt(params.tau);
  const double lo_thr = params.b_down * root_tau;
  const double hi_thr = params.b_up * root_tau;
  // E_P[Psi e^J | x] per trigger region.
  const double c1 =
      region_average(params.region1, premia.eta_1u, premia.eta_1d, 1.0, rn.region1.z, grid);
  const double c2 =
      region_average(params.region2, premia.eta_2u, premia.eta_2d, 1.0, rn.region2.z, grid);
  const double a = premia.gamma_d * params.sigma;
  const double drift = (params.mu - 0.5 * params.sigma * params.sigma) * params.tau;

  auto integrand = [&](double x, double mid) {
    const double c = mid < lo_thr ? c1 : (mid > hi_thr ? c2 : 1.0);
    const double kernel = std::exp(-a * x - 0.5 * a * a * params.tau);
    return kernel * std::exp(drift + params.sigma * x) * c * gaussian_density(x, 0.0, params.tau);
  };
  const double lo = -grid.half_width * root_tau;
  const double hi = grid.half_width * root_tau;
  const Quadrature q = integrate_piecewise(integrand, lo, hi, {lo_thr, hi_thr}, grid.n_points);
  // The integrand equals exp((mu - gamma sigma^2) tau) M_Q(x) times the
  // N(sigma (1 - gamma) tau, tau) density.
  const double centre = params.sigma * (1.0 - premia.gamma_d) * params.tau;
  const double scale = std::exp((params.mu - premia.gamma_d * params.sigma * params.sigma) *
                                params.tau);
  const double tail =
      scale * std::max({1.0, c1, c2}) * gaussian_tail(centre, params.tau, lo, hi);
  return finish(q, tail);
}

}  // namespace jumpemm::oracle

#pragma once

namespace jumpemm {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

/// Standard normal CDF through erfc; absolute error below 1e-15.
double normal_cdf(double x);

double normal_pdf(double x);

/// Inverse standard normal CDF (Wichura's AS241, about 1e-16 relative).
/// Requires 0 < p < 1.
double normal_quantile(double p);

}  // namespace jumpemm

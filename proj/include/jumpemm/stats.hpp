#pragma once

#include <cstddef>
#include <span>

namespace jumpemm {

/// Recursive pairwise summation. The split points depend only on the input
/// length, so the result is reproducible for a given sequence.
double pairwise_sum(std::span<const double> values);

/// Sample mean with its standard error (sample SD / sqrt(N)).
struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;

  /// (mean - expected) / std_error; zero when both the error and the
  /// difference vanish.
  double z_score(double expected) const;
};

MeanEstimate estimate_mean(std::span<const double> values);

/// Welford accumulator with Chan et al.'s merge, for block-wise reductions.
class RunningStats {
 public:
  void push(double x);
  void merge(const RunningStats& other);

  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; zero with fewer than two observations.
  double variance() const;
  MeanEstimate estimate() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace jumpemm

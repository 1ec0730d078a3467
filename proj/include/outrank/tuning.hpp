#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "outrank/criteria.hpp"
#include "outrank/error.hpp"

namespace outrank {

/// Quantile levels, in percent, used to place q and p.
struct TuningConfig {
  double alpha = 25.0;
  double beta = 75.0;

  void validate() const {
    if (!(alpha >= 0.0 && alpha <= 100.0 && beta >= 0.0 && beta <= 100.0)) {
      throw Error(ErrorKind::InvalidInput, "quantile levels must lie in [0,100]");
    }
    if (alpha > beta) {
      throw Error(ErrorKind::InvalidInput, "alpha must not exceed beta");
    }
  }
};

namespace detail {

inline double quantile_sorted(std::span<const double> sorted, double z) {
  const std::size_t n = sorted.size();
  const double h = static_cast<double>(n - 1) * z / 100.0;
  const double lo = std::floor(h);
  const auto i = static_cast<std::size_t>(lo);
  if (i + 1 >= n) return sorted[n - 1];
  const double frac = h - lo;
  if (frac == 0.0) return sorted[i];
  return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

}  // namespace detail

// z% quantile by linear interpolation between order statistics at rank
// h = (N-1) z / 100. z = 0 and z = 100 give the minimum and maximum exactly.
inline double quantile(std::vector<double> values, double z) {
  if (values.empty()) {
    throw Error(ErrorKind::InvalidInput, "quantile of an empty sample");
  }
  if (!(z >= 0.0 && z <= 100.0)) {
    throw Error(ErrorKind::InvalidInput, "quantile level must lie in [0,100]");
  }
  std::sort(values.begin(), values.end());
  return detail::quantile_sorted(values, z);
}

/// |r_i - r_j| over every unordered pair i < j, ties kept as zeros.
inline std::vector<double> pairwise_abs_differences(std::span<const double> values) {
  std::vector<double> d;
  const std::size_t n = values.size();
  d.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d.push_back(std::abs(values[i] - values[j]));
    }
  }
  return d;
}

/// q and p as the alpha and beta quantiles of the pairwise absolute
/// differences. sigma is set halfway between them (1 when both are zero) so
/// the result is usable with the Gaussian kind too.
inline Thresholds tune_thresholds(std::span<const double> values,
                                  const TuningConfig& config) {
  config.validate();
  if (values.size() < 2) {
    throw Error(ErrorKind::InvalidInput,
                "threshold tuning needs at least two alternatives");
  }
  auto diffs = pairwise_abs_differences(values);
  std::sort(diffs.begin(), diffs.end());
  Thresholds t;
  t.q = detail::quantile_sorted(diffs, config.alpha);
  t.p = detail::quantile_sorted(diffs, config.beta);
  const double mid = 0.5 * (t.q + t.p);
  t.sigma = mid > 0.0 ? mid : 1.0;
  return t;
}

inline std::map<std::string, Thresholds> tune_all(const PerformanceMatrix& perf,
                                                  const TuningConfig& config) {
  std::map<std::string, Thresholds> out;
  for (std::size_t k = 0; k < perf.criteria().size(); ++k) {
    const auto column = perf.values().column(k);
    out.emplace(perf.criteria()[k], tune_thresholds(column, config));
  }
  return out;
}

}  // namespace outrank

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "outrank/error.hpp"

namespace outrank::stats {

namespace detail {

// Modified Lentz evaluation of the continued fraction for I_x(a,b).
inline double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 20000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw Error(ErrorKind::InternalInvariant,
              "incomplete beta continued fraction did not converge");
}

}  // namespace detail

/// Regularized incomplete beta function I_x(a, b).
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidInput, "incomplete beta: a and b must be > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::InvalidInput, "incomplete beta: x must lie in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The fraction converges fast below the mean; reflect otherwise.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::clamp(front * detail::beta_continued_fraction(a, b, x) / a, 0.0, 1.0);
  }
  return std::clamp(1.0 - front * detail::beta_continued_fraction(b, a, 1.0 - x) / b,
                    0.0, 1.0);
}

/// P(F > f) for an F(d1, d2) variable.
inline double f_survival(double f, double d1, double d2) {
  if (!(f >= 0.0)) throw Error(ErrorKind::InvalidInput, "F statistic must be >= 0");
  if (std::isinf(f)) return 0.0;
  return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

/// Two-sided tail P(|T| > |t|) for Student's t with df degrees of freedom.
inline double student_t_two_sided(double t, double df) {
  if (!(df > 0.0)) throw Error(ErrorKind::InvalidInput, "t test: df must be > 0");
  if (std::isinf(t)) return 0.0;
  return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::InvalidInput, "correlation: length mismatch");
  }
  if (x.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "correlation: need at least two points");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::UndefinedCorrelation, "correlation: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline constexpr double kSignificanceLevel = 0.05;

/// Two-sided p-value of H0: rho = 0 via t = r sqrt((n-2)/(1-r^2)).
/// Returns 1 when n < 3 (no degrees of freedom left).
inline double correlation_p_value(double r, std::size_t n) {
  if (n < 3) return 1.0;
  const double df = static_cast<double>(n - 2);
  if (std::abs(r) >= 1.0) return 0.0;
  const double t = r * std::sqrt(df / (1.0 - r * r));
  return student_t_two_sided(t, df);
}

inline bool correlation_significant(double r, std::size_t n,
                                    double level = kSignificanceLevel) {
  return correlation_p_value(r, n) < level;
}

struct AnovaResult {
  double f_stat = 0.0;
  long df_between = 0;
  long df_within = 0;
  double p_value = 1.0;
  std::vector<double> group_means;
  double grand_mean = 0.0;
};

/// Classic equal-variance one-way ANOVA.
inline AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "anova: need at least two groups");
  }
  std::size_t total = 0;
  double grand_sum = 0.0;
  for (const auto& g : groups) {
    if (g.empty()) throw Error(ErrorKind::InvalidInput, "anova: empty group");
    total += g.size();
    for (double v : g) grand_sum += v;
  }
  if (total <= groups.size()) {
    throw Error(ErrorKind::InvalidInput,
                "anova: total sample size must exceed the number of groups");
  }

  AnovaResult r;
  r.grand_mean = grand_sum / static_cast<double>(total);
  double ssb = 0.0, ssw = 0.0;
  for (const auto& g : groups) {
    const double m = mean(g);
    r.group_means.push_back(m);
    ssb += static_cast<double>(g.size()) * (m - r.grand_mean) * (m - r.grand_mean);
    for (double v : g) ssw += (v - m) * (v - m);
  }
  r.df_between = static_cast<long>(groups.size()) - 1;
  r.df_within = static_cast<long>(total - groups.size());
  if (!(ssw > 0.0)) {
    throw Error(ErrorKind::Degenerate, "anova: zero within-group variance");
  }
  r.f_stat = (ssb / r.df_between) / (ssw / r.df_within);
  r.p_value = f_survival(r.f_stat, r.df_between, r.df_within);
  return r;
}

}  // namespace outrank::stats

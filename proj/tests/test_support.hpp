#pragma once

// Random instance generators and reference implementations used by the unit
// and acceptance suites. The oracles below restate the formulas directly and
// never call into the engine.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "outrank/outrank.hpp"

namespace outrank::testing {

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "a") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

struct Instance {
  PerformanceMatrix perf;
  std::vector<CriterionSpec> criteria;
};

/// Random matrix with random kinds, directions and weights. Thresholds come
/// from the quantile tuner at random alpha <= beta, as in a real run.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> level(0.0, 100.0);
  std::uniform_int_distribution<int> kind(0, 5);

  Table values(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      // Occasional repeated values so ties and zero differences show up.
      values(i, k) = unit(rng) < 0.15 ? std::round(value(rng)) : value(rng);
    }
  PerformanceMatrix perf(labels(n), labels(m, "c"), values);

  std::vector<CriterionSpec> criteria;
  for (std::size_t k = 0; k < m; ++k) {
    CriterionSpec c;
    c.id = perf.criteria()[k];
    c.direction = unit(rng) < 0.3 ? Direction::Minimize : Direction::Maximize;
    c.weight = unit(rng) + 0.01;
    c.preference.kind = kAllPreferenceKinds[kind(rng)];
    double a = level(rng), b = level(rng);
    if (a > b) std::swap(a, b);
    c.preference.thresholds = tune_thresholds(values.column(k), TuningConfig{a, b});
    criteria.push_back(c);
  }
  return {std::move(perf), normalize_weights(std::move(criteria))};
}

inline FlowResult random_flows(std::mt19937_64& rng, std::size_t n) {
  // Coarse grid so equal flows (indifference) occur with real probability.
  std::uniform_int_distribution<int> grid(0, 8);
  FlowResult f;
  f.alternatives = labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.phi_plus.push_back(grid(rng) / 8.0);
    f.phi_minus.push_back(grid(rng) / 8.0);
    f.phi_net.push_back(f.phi_plus.back() - f.phi_minus.back());
  }
  return f;
}

inline Digraph random_dag(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  Digraph g(labels(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(perm[a], perm[b]);
  return g;
}

// ---- oracles --------------------------------------------------------------

/// Preference degree written from the textbook table, clamped at d <= 0.
inline double oracle_degree(PreferenceKind kind, double q, double p, double s, double d) {
  if (d <= 0) return 0;
  switch (kind) {
    case PreferenceKind::Usual: return 1;
    case PreferenceKind::UShape: return d > q ? 1 : 0;
    case PreferenceKind::VShape: return d >= p ? 1 : d / p;
    case PreferenceKind::Level: return d <= q ? 0 : (d <= p ? 0.5 : 1);
    case PreferenceKind::VShapeIndifference:
      if (d <= q) return 0;
      if (d >= p) return 1;
      return (d - q) / (p - q);
    case PreferenceKind::Gaussian: return 1 - std::exp(-d * d / (2 * s * s));
  }
  return -1;
}

struct OracleFlows {
  std::vector<double> plus, minus, net;
};

inline OracleFlows oracle_flows(const Instance& inst) {
  const std::size_t n = inst.perf.size();
  const auto& v = inst.perf.values();
  std::vector<std::vector<double>> pij(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double s = 0;
      for (std::size_t k = 0; k < inst.criteria.size(); ++k) {
        const auto& c = inst.criteria[k];
        double d = v(i, k) - v(j, k);
        if (c.direction == Direction::Minimize) d = v(j, k) - v(i, k);
        const auto& t = c.preference.thresholds;
        s += c.weight * oracle_degree(c.preference.kind, t.q, t.p, t.sigma, d);
      }
      pij[i][j] = s;
    }
  }
  OracleFlows out;
  for (std::size_t i = 0; i < n; ++i) {
    double a = 0, b = 0;
    for (std::size_t j = 0; j < n; ++j) {
      a += pij[i][j];
      b += pij[j][i];
    }
    out.plus.push_back(a / (n - 1));
    out.minus.push_back(b / (n - 1));
    out.net.push_back(out.plus.back() - out.minus.back());
  }
  return out;
}

/// Reachability by breadth-first search from every node.
inline std::vector<std::vector<bool>> oracle_reach(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (g.has_edge(u, v) && !reach[s][v]) {
          reach[s][v] = true;
          q.push(v);
        }
      }
    }
  }
  return reach;
}

/// Drops each edge in turn and keeps it only if reachability changes.
inline Digraph oracle_reduction(const Digraph& g) {
  const auto full = oracle_reach(g);
  Digraph out = g;
  for (const auto& [u, v] : g.edges()) {
    Digraph trial = out;
    trial.remove_edge(u, v);
    if (oracle_reach(trial) == full) out = trial;
  }
  return out;
}

inline double brute_quantile(std::vector<double> v, double z) {
  std::sort(v.begin(), v.end());
  const double h = (v.size() - 1) * z / 100.0;
  const std::size_t lo = static_cast<std::size_t>(h);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace outrank::testing

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "outrank/criteria.hpp"
#include "outrank/error.hpp"
#include "outrank/preference.hpp"
#include "outrank/table.hpp"

namespace outrank {

/// Signed pairwise differences for one criterion, oriented so that a positive
/// entry (i,j) always favours alternative i.
inline Table difference_matrix(const PerformanceMatrix& perf,
                               std::string_view criterion,
                               Direction direction = Direction::Maximize) {
  const std::size_t k = perf.require_criterion(criterion);
  const std::size_t n = perf.size();
  const Table& v = perf.values();
  Table d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = direction == Direction::Maximize ? v(i, k) - v(j, k)
                                                 : v(j, k) - v(i, k);
    }
  }
  return d;
}

/// Aggregated preference index p_ij together with the alternative labels.
struct PreferenceMatrix {
  std::vector<std::string> alternatives;
  Table values;
};

inline PreferenceMatrix preference_index_matrix(
    const PerformanceMatrix& perf, const std::vector<CriterionSpec>& criteria) {
  const double sum = weight_sum(criteria);
  if (!(std::abs(sum - 1.0) <= kWeightSumTolerance)) {
    throw Error(ErrorKind::Configuration,
                "criterion weights must sum to 1 (got " + std::to_string(sum) +
                    ")");
  }
  struct Column {
    std::size_t index;
    const CriterionSpec* spec;
  };
  std::vector<Column> columns;
  columns.reserve(criteria.size());
  for (const auto& c : criteria) {
    if (c.weight < 0.0) {
      throw Error(ErrorKind::Configuration,
                  "negative weight for criterion '" + c.id + "'");
    }
    c.preference.validate();
    columns.push_back({perf.require_criterion(c.id), &c});
  }

  const std::size_t n = perf.size();
  const Table& v = perf.values();
  Table p(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double acc = 0.0;
      for (const auto& col : columns) {
        const double raw = v(i, col.index) - v(j, col.index);
        const double d = col.spec->direction == Direction::Maximize ? raw : -raw;
        acc += col.spec->weight * preference_degree(col.spec->preference, d);
      }
      // Weights may sum to 1 only within tolerance; keep the index in range.
      p(i, j) = std::min(acc, 1.0);
    }
  }
  return {perf.alternatives(), std::move(p)};
}

/// Leaving (phi_plus), entering (phi_minus) and net flows per alternative.
struct FlowResult {
  std::vector<std::string> alternatives;
  std::vector<double> phi_plus;
  std::vector<double> phi_minus;
  std::vector<double> phi_net;

  std::size_t size() const noexcept { return alternatives.size(); }
};

inline FlowResult flows(const Table& pref, std::vector<std::string> alternatives) {
  const std::size_t n = pref.rows();
  if (pref.cols() != n) {
    throw Error(ErrorKind::InvalidInput, "flows: preference table must be square");
  }
  if (n < 2) {
    throw Error(ErrorKind::InvalidInput, "flows: need at least two alternatives");
  }
  if (alternatives.size() != n) {
    throw Error(ErrorKind::InvalidInput, "flows: label count does not match table");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = pref(i, j);
      if (!(x >= 0.0 && x <= 1.0) || (i == j && x != 0.0)) {
        throw Error(ErrorKind::InvalidInput,
                    "flows: entries must lie in [0,1] with a zero diagonal");
      }
    }
  }

  const double denom = static_cast<double>(n - 1);
  FlowResult out;
  out.alternatives = std::move(alternatives);
  out.phi_plus.resize(n);
  out.phi_minus.resize(n);
  out.phi_net.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double leaving = 0.0;
    double entering = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      leaving += pref(i, j);
      entering += pref(j, i);
    }
    out.phi_plus[i] = leaving / denom;
    out.phi_minus[i] = entering / denom;
    out.phi_net[i] = out.phi_plus[i] - out.phi_minus[i];
  }
  return out;
}

inline FlowResult flows(const PreferenceMatrix& pref) {
  return flows(pref.values, pref.alternatives);
}

struct RankEntry {
  std::string alternative;
  double phi = 0.0;
  std::size_t position = 0;   // 1-based, strictly increasing
  std::size_t tie_group = 0;  // entries sharing a net flow share a group
  bool tied = false;
};

// Total preorder by net flow, highest first. Exact ties are ordered by
// identifier and flagged rather than silently broken.
inline std::vector<RankEntry> promethee_ii_ranking(const FlowResult& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (f.phi_net[a] != f.phi_net[b]) return f.phi_net[a] > f.phi_net[b];
    return f.alternatives[a] < f.alternatives[b];
  });

  std::vector<RankEntry> out;
  out.reserve(order.size());
  std::size_t group = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t i = order[r];
    if (r > 0 && f.phi_net[i] != out.back().phi) ++group;
    out.push_back({f.alternatives[i], f.phi_net[i], r + 1, group, false});
  }
  for (std::size_t r = 0; r < out.size(); ++r) {
    const bool prev = r > 0 && out[r - 1].tie_group == out[r].tie_group;
    const bool next = r + 1 < out.size() && out[r + 1].tie_group == out[r].tie_group;
    out[r].tied = prev || next;
  }
  return out;
}

}  // namespace outrank

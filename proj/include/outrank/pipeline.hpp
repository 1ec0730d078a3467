#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "outrank/basketball.hpp"
#include "outrank/config.hpp"
#include "outrank/criteria.hpp"
#include "outrank/error.hpp"
#include "outrank/outranking.hpp"
#include "outrank/promethee.hpp"
#include "outrank/table.hpp"
#include "outrank/tuning.hpp"

namespace outrank {

/// Request rejection carrying a stable machine-readable code.
class RequestError : public Error {
 public:
  RequestError(std::string code, const std::string& message)
      : Error(ErrorKind::InvalidRequest, message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct RankRequest {
  std::optional<basketball::Position> profile;  // nullopt ranks every position
  basketball::Scenario scenario = basketball::Scenario::EqualWeights;
  basketball::ResidualRule residual = basketball::ResidualRule::Balanced;
  std::optional<basketball::WeightMap> weights;  // overrides the scenario
  double alpha = 25.0;
  double beta = 75.0;
  PreferenceKind function_kind = PreferenceKind::VShapeIndifference;
  std::map<std::string, Direction> directions;  // default Maximize

  void validate() const {
    if (!(alpha >= 0 && alpha <= 100 && beta >= 0 && beta <= 100) || alpha > beta) {
      throw RequestError("invalid_quantiles",
                         "quantile levels must satisfy 0 <= alpha <= beta <= 100");
    }
    if (weights) {
      for (const auto& [id, w] : *weights) {
        if (!is_ranking_criterion(id)) {
          throw RequestError("invalid_weights", "unknown criterion '" + id + "'");
        }
        if (!(w >= 0.0) || !std::isfinite(w)) {
          throw RequestError("invalid_weights", "weight for '" + id + "' must be >= 0");
        }
      }
    }
    for (const auto& [id, d] : directions) {
      if (!is_ranking_criterion(id)) {
        throw RequestError("invalid_direction", "unknown criterion '" + id + "'");
      }
    }
  }

  static bool is_ranking_criterion(std::string_view id) {
    const auto& ids = basketball::kRankingCriteria;
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  }
};

inline std::string profile_name(const std::optional<basketball::Position>& p) {
  return p ? std::string(basketball::code(*p)) : std::string("all");
}

inline std::optional<basketball::Position> parse_profile(std::string_view s) {
  if (s == "all") return std::nullopt;
  if (auto p = basketball::parse_position(s)) return p;
  throw RequestError("unknown_profile", "unknown profile '" + std::string(s) + "'");
}

inline basketball::Scenario parse_scenario(std::string_view s) {
  if (s == "1" || s == "equal") return basketball::Scenario::EqualWeights;
  if (s == "2" || s == "boosted") return basketball::Scenario::CorrelationBoosted;
  throw RequestError("invalid_scenario", "unknown scenario '" + std::string(s) + "'");
}

inline PreferenceKind parse_function(std::string_view s) {
  if (auto k = parse_preference_kind(s)) return *k;
  throw RequestError("unknown_function", "unknown preference function '" + std::string(s) + "'");
}

/// Parses "k=v,k=v" into a weight map, keeping the given order.
inline basketball::WeightMap parse_weight_list(std::string_view s) {
  basketball::WeightMap out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = s.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw RequestError("invalid_weights", "expected k=v in '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    std::size_t used = 0;
    double w = 0;
    try {
      w = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw RequestError("invalid_weights", "not a number: '" + value + "'");
    }
    out.emplace_back(key, w);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Recognised keys: profile, scenario, residual (balanced|literal), alpha, beta,
// function, weights (k=v,...), direction.<criterion> (max|min).
inline void apply_config(const KeyValueConfig& cfg, RankRequest& req) {
  for (const auto& [key, value] : cfg.entries()) {
    if (key == "profile") {
      req.profile = parse_profile(value);
    } else if (key == "scenario") {
      req.scenario = parse_scenario(value);
    } else if (key == "residual") {
      if (value == "balanced") req.residual = basketball::ResidualRule::Balanced;
      else if (value == "literal") req.residual = basketball::ResidualRule::Literal;
      else throw Error(ErrorKind::Configuration, "residual must be balanced or literal");
    } else if (key == "alpha") {
      req.alpha = cfg.get_real(key, req.alpha);
    } else if (key == "beta") {
      req.beta = cfg.get_real(key, req.beta);
    } else if (key == "function") {
      req.function_kind = parse_function(value);
    } else if (key == "weights") {
      req.weights = parse_weight_list(value);
    } else if (key.rfind("direction.", 0) == 0) {
      const std::string id = key.substr(10);
      if (value == "max") req.directions[id] = Direction::Maximize;
      else if (value == "min") req.directions[id] = Direction::Minimize;
      else throw Error(ErrorKind::Configuration, "direction must be max or min");
    } else {
      throw Error(ErrorKind::Configuration, "unknown config key '" + key + "'");
    }
  }
}

struct NamedThresholds {
  std::string criterion;
  Thresholds thresholds;
};

struct RankResponse {
  std::string profile;
  std::vector<std::string> warnings;
  std::vector<NamedThresholds> thresholds;
  basketball::WeightMap weights;  // after normalization
  FlowResult flows;
  std::vector<RankEntry> total_order;
  OutrankingRelation relation;
  std::vector<std::pair<std::string, std::string>> covering_edges;
  std::vector<std::pair<std::string, std::string>> indifferent_pairs;
  std::size_t incomparable_pairs = 0;  // unordered
};

/// Players passing eligibility and the profile filter, in input order.
inline std::vector<basketball::BoxScoreLine> select_players(
    const std::vector<basketball::BoxScoreLine>& dataset,
    const std::optional<basketball::Position>& profile) {
  std::vector<basketball::BoxScoreLine> out;
  for (const auto& l : basketball::eligibility_filter(dataset)) {
    if (!profile || l.position == *profile) out.push_back(l);
  }
  return out;
}

inline PerformanceMatrix index_matrix(const std::vector<basketball::BoxScoreLine>& players) {
  std::vector<std::string> ids;
  Table values(players.size(), basketball::kRankingCriteria.size());
  for (std::size_t i = 0; i < players.size(); ++i) {
    ids.push_back(players[i].player_id);
    const auto v = basketball::compute_indices(players[i]);
    for (std::size_t k = 0; k < basketball::kRankingCriteria.size(); ++k) {
      values(i, k) = basketball::index_value(v, basketball::kRankingCriteria[k]);
    }
  }
  std::vector<std::string> criteria(basketball::kRankingCriteria.begin(),
                                    basketball::kRankingCriteria.end());
  return PerformanceMatrix(std::move(ids), std::move(criteria), std::move(values));
}

inline RankResponse run_rank(const std::vector<basketball::BoxScoreLine>& dataset,
                             const RankRequest& request) {
  request.validate();
  const auto players = select_players(dataset, request.profile);
  if (players.size() < 2) {
    throw RequestError("insufficient_alternatives",
                       "need at least two eligible players for profile '" +
                           profile_name(request.profile) + "'");
  }

  RankResponse resp;
  resp.profile = profile_name(request.profile);
  const PerformanceMatrix perf = index_matrix(players);
  const TuningConfig tuning{request.alpha, request.beta};

  basketball::WeightMap weights;
  if (request.weights) {
    for (auto id : basketball::kRankingCriteria) {
      double w = 0.0;
      for (const auto& [key, value] : *request.weights)
        if (key == id) w = value;
      weights.emplace_back(std::string(id), w);
    }
  } else if (request.profile) {
    auto sw = basketball::scenario_weights(*request.profile, request.scenario, request.residual);
    if (sw.warning) resp.warnings.push_back(*sw.warning);
    weights = std::move(sw.weights);
  } else {
    auto sw = basketball::scenario_weights(basketball::Position::PointGuard,
                                           basketball::Scenario::EqualWeights);
    if (request.scenario == basketball::Scenario::CorrelationBoosted) {
      resp.warnings.push_back("boosted weights need a single position; using equal weights");
    }
    weights = std::move(sw.weights);
  }

  std::vector<CriterionSpec> specs;
  for (std::size_t k = 0; k < perf.criteria().size(); ++k) {
    const auto& id = perf.criteria()[k];
    CriterionSpec spec;
    spec.id = id;
    if (auto it = request.directions.find(id); it != request.directions.end())
      spec.direction = it->second;
    spec.weight = weights[k].second;
    spec.preference.kind = request.function_kind;
    spec.preference.thresholds = tune_thresholds(perf.values().column(k), tuning);
    resp.thresholds.push_back({id, spec.preference.thresholds});
    specs.push_back(std::move(spec));
  }

  bool rescaled = false;
  try {
    specs = normalize_weights(std::move(specs), &rescaled);
  } catch (const Error& e) {
    throw RequestError("invalid_weights", e.what());
  }
  if (rescaled) resp.warnings.push_back("weights rescaled to sum to 1");
  for (const auto& s : specs) resp.weights.emplace_back(s.id, s.weight);

  resp.flows = flows(preference_index_matrix(perf, specs));
  resp.total_order = promethee_ii_ranking(resp.flows);
  resp.relation = promethee_i_relation(resp.flows);

  const Digraph covering = transitive_reduction(build_digraph(resp.relation));
  for (const auto& [u, v] : covering.edges())
    resp.covering_edges.emplace_back(covering.nodes[u], covering.nodes[v]);
  const std::size_t n = resp.relation.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Verdict v = resp.relation(i, j);
      if (v == Verdict::Indifferent) {
        resp.indifferent_pairs.emplace_back(resp.relation.alternatives[i],
                                            resp.relation.alternatives[j]);
      } else if (v == Verdict::Incomparable) {
        ++resp.incomparable_pairs;
      }
    }
  }
  return resp;
}

}  // namespace outrank

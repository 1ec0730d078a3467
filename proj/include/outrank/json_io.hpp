#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "outrank/basketball.hpp"
#include "outrank/pipeline.hpp"

namespace outrank {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Thresholds& t) {
  return Json{{"q", t.q}, {"p", t.p}, {"sigma", t.sigma}};
}

// Keys are emitted in a fixed order and doubles with their shortest
// round-trip representation, so identical inputs give byte-identical output.
inline Json to_json(const RankResponse& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["profile"] = r.profile;
  j["alternatives"] = r.flows.size();
  j["warnings"] = r.warnings;

  Json thresholds = Json::object();
  for (const auto& t : r.thresholds) thresholds[t.criterion] = to_json(t.thresholds);
  j["thresholds"] = std::move(thresholds);

  Json weights = Json::object();
  for (const auto& [id, w] : r.weights) weights[id] = w;
  j["weights"] = std::move(weights);

  Json flows = Json::array();
  for (std::size_t i = 0; i < r.flows.size(); ++i) {
    flows.push_back(Json{{"player", r.flows.alternatives[i]},
                         {"phi_plus", r.flows.phi_plus[i]},
                         {"phi_minus", r.flows.phi_minus[i]},
                         {"phi", r.flows.phi_net[i]}});
  }
  j["flows"] = std::move(flows);

  Json order = Json::array();
  for (const auto& e : r.total_order) {
    order.push_back(Json{{"rank", e.position},
                         {"player", e.alternative},
                         {"phi", e.phi},
                         {"tie_group", e.tie_group},
                         {"tied", e.tied}});
  }
  j["total_order"] = std::move(order);

  Json edges = Json::array();
  for (const auto& [a, b] : r.covering_edges) edges.push_back(Json::array({a, b}));
  Json indiff = Json::array();
  for (const auto& [a, b] : r.indifferent_pairs) indiff.push_back(Json::array({a, b}));
  j["partial_order"] = Json{{"edges", std::move(edges)},
                            {"indifferent", std::move(indiff)},
                            {"incomparable_pairs", r.incomparable_pairs}};
  return j;
}

inline RankRequest rank_request_from_json(const Json& j) {
  if (!j.is_object()) throw RequestError("invalid_request", "request must be a JSON object");
  RankRequest req;
  try {
    if (j.contains("profile")) req.profile = parse_profile(j.at("profile").get<std::string>());
    if (j.contains("scenario")) {
      const auto& s = j.at("scenario");
      req.scenario = parse_scenario(s.is_number_integer() ? std::to_string(s.get<int>())
                                                          : s.get<std::string>());
    }
    if (j.contains("residual")) {
      const auto r = j.at("residual").get<std::string>();
      if (r == "balanced") req.residual = basketball::ResidualRule::Balanced;
      else if (r == "literal") req.residual = basketball::ResidualRule::Literal;
      else throw RequestError("invalid_request", "residual must be balanced or literal");
    }
    if (j.contains("weights") && !j.at("weights").is_null()) {
      basketball::WeightMap w;
      for (const auto& [k, v] : j.at("weights").items()) w.emplace_back(k, v.get<double>());
      req.weights = std::move(w);
    }
    if (j.contains("alpha")) req.alpha = j.at("alpha").get<double>();
    if (j.contains("beta")) req.beta = j.at("beta").get<double>();
    if (j.contains("function")) req.function_kind = parse_function(j.at("function").get<std::string>());
    if (j.contains("directions")) {
      for (const auto& [k, v] : j.at("directions").items()) {
        const auto d = v.get<std::string>();
        if (d == "max") req.directions[k] = Direction::Maximize;
        else if (d == "min") req.directions[k] = Direction::Minimize;
        else throw RequestError("invalid_direction", "direction must be max or min");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw RequestError("invalid_request", std::string("bad field type: ") + e.what());
  }
  req.validate();
  return req;
}

inline Json to_json(const basketball::CriterionVector& v) {
  Json j;
  for (auto id : basketball::kAllIndices) j[std::string(id)] = basketball::index_value(v, id);
  return j;
}

inline Json players_json(const std::vector<basketball::BoxScoreLine>& dataset) {
  Json players = Json::array();
  for (const auto& l : dataset) {
    Json p{{"player_id", l.player_id},
           {"position", basketball::code(l.position)},
           {"eligible", basketball::eligible(l)}};
    p["indices"] = l.Min > 0 ? to_json(basketball::compute_indices(l)) : Json(nullptr);
    players.push_back(std::move(p));
  }
  return Json{{"schema_version", kSchemaVersion}, {"players", std::move(players)}};
}

inline Json criteria_json() {
  struct Meta {
    const char* id;
    const char* description;
    bool ranked;
  };
  static constexpr Meta meta[] = {
      {"PtsM", "points per minute", true},
      {"DRM", "defensive rating per minute", true},
      {"ORM", "offensive rating per minute", true},
      {"EPts", "points scored as a percentage of points attempted", true},
      {"ASTM", "assists plus steals per turnover, per minute", true},
      {"PCSpct", "successful possessions as a percentage of completed ones", true},
      {"PMW", "plus/minus weighted by share of a 40-minute game", false},
  };
  Json crit = Json::array();
  for (const auto& m : meta) {
    crit.push_back(Json{{"id", m.id},
                        {"description", m.description},
                        {"direction", "max"},
                        {"ranked", m.ranked}});
  }
  Json kinds = Json::array();
  for (auto k : kAllPreferenceKinds) kinds.push_back(std::string(to_string(k)));
  Json positions = Json::array({"all"});
  for (auto p : basketball::kPositions) positions.push_back(std::string(basketball::code(p)));
  return Json{{"schema_version", kSchemaVersion},
              {"criteria", std::move(crit)},
              {"functions", std::move(kinds)},
              {"profiles", std::move(positions)},
              {"defaults", Json{{"alpha", 25.0},
                                {"beta", 75.0},
                                {"function", "VShapeIndifference"},
                                {"scenario", 1}}}};
}

inline Json error_json(const std::string& code, const std::string& message) {
  return Json{{"schema_version", kSchemaVersion},
              {"error", Json{{"code", code}, {"message", message}}}};
}

/// Fixed-precision number for human-facing exports: `%.6g` by default,
/// `%.4f` in fixed mode.
inline std::string format_export(double v, bool fixed = false) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fixed ? "%.4f" : "%.6g", v);
  return buf;
}

inline std::string to_table(const RankResponse& r, bool fixed = false) {
  std::string out = "rank\tplayer\tphi\tphi_plus\tphi_minus\ttied\n";
  for (const auto& e : r.total_order) {
    std::size_t i = 0;
    while (r.flows.alternatives[i] != e.alternative) ++i;
    out += std::to_string(e.position) + '\t' + e.alternative + '\t' +
           format_export(e.phi, fixed) + '\t' +
           format_export(r.flows.phi_plus[i], fixed) + '\t' +
           format_export(r.flows.phi_minus[i], fixed) + '\t' +
           (e.tied ? "yes" : "no") + '\n';
  }
  return out;
}

}  // namespace outrank

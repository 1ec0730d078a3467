#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "outrank/error.hpp"

namespace outrank::basketball {

enum class Position { PointGuard, ShootingGuard, Forward, PowerForward, Center };

inline constexpr std::array<Position, 5> kPositions = {
    Position::PointGuard, Position::ShootingGuard, Position::Forward,
    Position::PowerForward, Position::Center};

inline std::string_view code(Position p) {
  switch (p) {
    case Position::PointGuard: return "PG";
    case Position::ShootingGuard: return "SG";
    case Position::Forward: return "F";
    case Position::PowerForward: return "PF";
    case Position::Center: return "C";
  }
  return "?";
}

inline std::optional<Position> parse_position(std::string_view s) {
  for (auto p : kPositions)
    if (s == code(p)) return p;
  return std::nullopt;
}

/// Raw season totals for one player.
struct BoxScoreLine {
  std::string player_id;
  Position position = Position::PointGuard;
  long games = 0;
  double Min = 0;
  double Pts = 0;
  double P2 = 0, P2A = 0;
  double P3 = 0, P3A = 0;
  double FT = 0, FTA = 0;
  double FG = 0, FGA = 0;
  double ORB = 0, DRB = 0;
  double AST = 0, STL = 0, BLK = 0, BLKR = 0, TOV = 0;
  double PF = 0, PFR = 0;
  double PM = 0;

  friend bool operator==(const BoxScoreLine&, const BoxScoreLine&) = default;
};

inline constexpr double kShotSumTolerance = 1e-9;

/// Throws Validation naming the first violated constraint.
inline void validate(const BoxScoreLine& l) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::Validation,
                "player '" + l.player_id + "': " + what);
  };
  if (l.player_id.empty()) fail("empty player_id");
  if (l.games < 0) fail("games must be >= 0");
  const std::pair<const char*, double> nonneg[] = {
      {"Min", l.Min}, {"Pts", l.Pts}, {"P2", l.P2},   {"P2A", l.P2A},
      {"P3", l.P3},   {"P3A", l.P3A}, {"FT", l.FT},   {"FTA", l.FTA},
      {"FG", l.FG},   {"FGA", l.FGA}, {"ORB", l.ORB}, {"DRB", l.DRB},
      {"AST", l.AST}, {"STL", l.STL}, {"BLK", l.BLK}, {"BLKR", l.BLKR},
      {"TOV", l.TOV}, {"PF", l.PF},   {"PFR", l.PFR}};
  for (const auto& [name, v] : nonneg) {
    if (!std::isfinite(v) || v < 0) fail(std::string(name) + " must be finite and >= 0");
  }
  if (!std::isfinite(l.PM)) fail("PM must be finite");
  if (l.P2 > l.P2A) fail("P2 <= P2A violated");
  if (l.P3 > l.P3A) fail("P3 <= P3A violated");
  if (l.FT > l.FTA) fail("FT <= FTA violated");
  if (l.FG > l.FGA) fail("FG <= FGA violated");
  if (std::abs(l.FG - (l.P2 + l.P3)) > kShotSumTolerance) fail("FG = P2 + P3 violated");
  if (std::abs(l.FGA - (l.P2A + l.P3A)) > kShotSumTolerance)
    fail("FGA = P2A + P3A violated");
}

/// Efficiency indices derived from one box-score line.
struct CriterionVector {
  double PtsM = 0;
  double DRM = 0;
  double ORM = 0;
  double EPts = 0;
  double ASTM = 0;
  double PCSpct = 0;
  double PMW = 0;  // weight derivation only, never ranked
};

/// The six indices used for ranking, in canonical order.
inline constexpr std::array<std::string_view, 6> kRankingCriteria = {
    "PtsM", "DRM", "ORM", "EPts", "ASTM", "PCSpct"};

/// Ranking criteria plus PMW, the order used by the statistics reports.
inline constexpr std::array<std::string_view, 7> kAllIndices = {
    "PtsM", "DRM", "ORM", "PMW", "EPts", "ASTM", "PCSpct"};

inline double index_value(const CriterionVector& v, std::string_view id) {
  if (id == "PtsM") return v.PtsM;
  if (id == "DRM") return v.DRM;
  if (id == "ORM") return v.ORM;
  if (id == "EPts") return v.EPts;
  if (id == "ASTM") return v.ASTM;
  if (id == "PCSpct") return v.PCSpct;
  if (id == "PMW") return v.PMW;
  throw Error(ErrorKind::NotFound, "unknown index '" + std::string(id) + "'");
}

inline constexpr double kGameMinutes = 40.0;

// Zero-attempt players get 0 for EPts and PCS%; ASTM divides by at least one
// turnover.
inline CriterionVector compute_indices(const BoxScoreLine& l) {
  if (!(l.Min > 0)) {
    throw Error(ErrorKind::InvalidInput,
                "player '" + l.player_id + "': minutes must be > 0");
  }
  CriterionVector v;
  v.PtsM = l.Pts / l.Min;
  v.DRM = (l.DRB + l.STL + l.BLK - l.PF) / l.Min;
  const double gained = 2 * l.P2 + 3 * l.P3 + l.FT + l.ORB + l.AST + l.PFR;
  const double lost = (l.FGA - l.FG) + (l.FTA - l.FT) + l.TOV + l.BLKR;
  v.ORM = (gained - lost) / l.Min;
  const double possible = 2 * l.P2A + 3 * l.P3A + l.FTA;
  v.EPts = possible > 0 ? 100.0 * l.Pts / possible : 0.0;
  v.ASTM = (l.AST + l.STL) / (std::max(l.TOV, 1.0) * l.Min);
  const double completed = l.FGA + l.PFR + l.AST + l.TOV;
  v.PCSpct = completed > 0 ? 100.0 * (l.FG + l.PFR + l.AST) / completed : 0.0;
  v.PMW = l.PM * l.Min / kGameMinutes;
  return v;
}

inline constexpr long kMinGames = 10;
inline constexpr double kMinMinutesPerGame = 10.0;

inline bool eligible(const BoxScoreLine& l) {
  return l.games >= kMinGames &&
         l.Min / static_cast<double>(l.games) >= kMinMinutesPerGame;
}

inline std::vector<BoxScoreLine> eligibility_filter(const std::vector<BoxScoreLine>& lines) {
  std::vector<BoxScoreLine> out;
  std::copy_if(lines.begin(), lines.end(), std::back_inserter(out), eligible);
  return out;
}

inline std::map<Position, std::vector<BoxScoreLine>> group_by_position(
    const std::vector<BoxScoreLine>& lines) {
  std::map<Position, std::vector<BoxScoreLine>> groups;
  for (auto p : kPositions) groups[p];
  for (const auto& l : lines) groups[l.position].push_back(l);
  return groups;
}

enum class Scenario { EqualWeights, CorrelationBoosted };

// How the 0.2 left over by the two boosted criteria is spread over the other
// four: Balanced gives 0.05 each (sums to 1), Literal gives 0.2/5 = 0.04 each
// (sums to 0.96 and relies on later normalization).
enum class ResidualRule { Balanced, Literal };

using WeightMap = std::vector<std::pair<std::string, double>>;

struct ScenarioWeights {
  WeightMap weights;
  std::optional<std::string> warning;
};

inline constexpr double kBoostedWeight = 0.4;

inline ScenarioWeights scenario_weights(Position position, Scenario scenario,
                                        ResidualRule residual = ResidualRule::Balanced) {
  ScenarioWeights out;
  auto equal = [&] {
    for (auto id : kRankingCriteria)
      out.weights.emplace_back(std::string(id), 1.0 / kRankingCriteria.size());
  };
  if (scenario == Scenario::EqualWeights) {
    equal();
    return out;
  }

  std::array<std::string_view, 2> boosted;
  switch (position) {
    case Position::PointGuard:
    case Position::ShootingGuard:
      boosted = {"EPts", "ASTM"};
      break;
    case Position::PowerForward:
    case Position::Center:
      boosted = {"DRM", "ASTM"};
      break;
    case Position::Forward:
      equal();
      out.warning = "no boosted-criteria scenario defined for forwards; using equal weights";
      return out;
  }
  const double rest = residual == ResidualRule::Balanced
                          ? (1.0 - 2 * kBoostedWeight) / 4.0
                          : (1.0 - 2 * kBoostedWeight) / 5.0;
  for (auto id : kRankingCriteria) {
    const bool boost = std::find(boosted.begin(), boosted.end(), id) != boosted.end();
    out.weights.emplace_back(std::string(id), boost ? kBoostedWeight : rest);
  }
  return out;
}

}  // namespace outrank::basketball

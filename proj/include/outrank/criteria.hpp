#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "outrank/error.hpp"
#include "outrank/table.hpp"

namespace outrank {

/// Alternatives x criteria evaluation table. Immutable once constructed.
class PerformanceMatrix {
 public:
  PerformanceMatrix(std::vector<std::string> alternatives,
                    std::vector<std::string> criteria, Table values)
      : alternatives_(std::move(alternatives)),
        criteria_(std::move(criteria)),
        values_(std::move(values)) {
    if (values_.rows() != alternatives_.size()) {
      throw Error(ErrorKind::InvalidInput,
                  "performance matrix: row count does not match alternatives");
    }
    if (values_.cols() != criteria_.size()) {
      throw Error(ErrorKind::InvalidInput,
                  "performance matrix: column count does not match criteria");
    }
    require_unique(alternatives_, "alternative");
    require_unique(criteria_, "criterion");
    for (std::size_t i = 0; i < values_.rows(); ++i) {
      for (std::size_t k = 0; k < values_.cols(); ++k) {
        if (!std::isfinite(values_(i, k))) {
          throw Error(ErrorKind::InvalidInput,
                      "performance matrix: non-finite value for '" +
                          alternatives_[i] + "' on '" + criteria_[k] + "'");
        }
      }
    }
  }

  const std::vector<std::string>& alternatives() const noexcept {
    return alternatives_;
  }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const Table& values() const noexcept { return values_; }

  std::size_t size() const noexcept { return alternatives_.size(); }

  std::optional<std::size_t> criterion_index(std::string_view id) const {
    auto it = std::find(criteria_.begin(), criteria_.end(), id);
    if (it == criteria_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - criteria_.begin());
  }

  std::size_t require_criterion(std::string_view id) const {
    if (auto k = criterion_index(id)) return *k;
    throw Error(ErrorKind::NotFound,
                "unknown criterion '" + std::string(id) + "'");
  }

  std::vector<double> column(std::string_view id) const {
    return values_.column(require_criterion(id));
  }

 private:
  static void require_unique(const std::vector<std::string>& ids,
                             const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
      if (!seen.insert(id).second) {
        throw Error(ErrorKind::Duplicate,
                    std::string("duplicate ") + what + " id '" + id + "'");
      }
    }
  }

  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  Table values_;
};

/// Indifference threshold q, preference threshold p, Gaussian inflection sigma.
struct Thresholds {
  double q = 0.0;
  double p = 0.0;
  double sigma = 1.0;

  void validate() const {
    if (!(std::isfinite(q) && std::isfinite(p) && std::isfinite(sigma))) {
      throw Error(ErrorKind::InvalidInput, "thresholds must be finite");
    }
    if (q < 0.0 || p < 0.0) {
      throw Error(ErrorKind::InvalidInput, "thresholds q and p must be >= 0");
    }
    if (q > p) {
      throw Error(ErrorKind::InvalidInput,
                  "indifference threshold q exceeds preference threshold p");
    }
    if (!(sigma > 0.0)) {
      throw Error(ErrorKind::InvalidInput, "gaussian sigma must be > 0");
    }
  }

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

enum class PreferenceKind {
  Usual,               // Type I
  UShape,              // Type II
  VShape,              // Type III
  Level,               // Type IV
  VShapeIndifference,  // Type V
  Gaussian,            // Type VI
};

inline constexpr PreferenceKind kAllPreferenceKinds[] = {
    PreferenceKind::Usual,  PreferenceKind::UShape,
    PreferenceKind::VShape, PreferenceKind::Level,
    PreferenceKind::VShapeIndifference, PreferenceKind::Gaussian};

inline std::string_view to_string(PreferenceKind kind) {
  switch (kind) {
    case PreferenceKind::Usual: return "Usual";
    case PreferenceKind::UShape: return "UShape";
    case PreferenceKind::VShape: return "VShape";
    case PreferenceKind::Level: return "Level";
    case PreferenceKind::VShapeIndifference: return "VShapeIndifference";
    case PreferenceKind::Gaussian: return "Gaussian";
  }
  return "?";
}

inline std::optional<PreferenceKind> parse_preference_kind(std::string_view s) {
  for (auto kind : kAllPreferenceKinds) {
    if (s == to_string(kind)) return kind;
  }
  // Roman-numeral aliases, as the types are usually numbered I..VI.
  static constexpr std::pair<std::string_view, PreferenceKind> aliases[] = {
      {"I", PreferenceKind::Usual},  {"II", PreferenceKind::UShape},
      {"III", PreferenceKind::VShape}, {"IV", PreferenceKind::Level},
      {"V", PreferenceKind::VShapeIndifference},
      {"VI", PreferenceKind::Gaussian}};
  for (const auto& [name, kind] : aliases) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

struct PreferenceFunctionSpec {
  PreferenceKind kind = PreferenceKind::VShapeIndifference;
  Thresholds thresholds{};

  // q == p is accepted for every kind: ramp kinds then degrade to a step at q.
  void validate() const { thresholds.validate(); }
};

enum class Direction { Maximize, Minimize };

struct CriterionSpec {
  std::string id;
  Direction direction = Direction::Maximize;
  double weight = 0.0;
  PreferenceFunctionSpec preference{};
};

inline double weight_sum(const std::vector<CriterionSpec>& criteria) {
  double sum = 0.0;
  for (const auto& c : criteria) sum += c.weight;
  return sum;
}

inline constexpr double kWeightSumTolerance = 1e-9;

/// Rescales weights to sum to one. Sets `rescaled` when the input sum was off
/// by more than the tolerance, so callers can surface a warning.
inline std::vector<CriterionSpec> normalize_weights(
    std::vector<CriterionSpec> criteria, bool* rescaled = nullptr) {
  for (const auto& c : criteria) {
    if (!std::isfinite(c.weight) || c.weight < 0.0) {
      throw Error(ErrorKind::Configuration,
                  "weight of criterion '" + c.id + "' must be finite and >= 0");
    }
  }
  const double sum = weight_sum(criteria);
  if (!(sum > 0.0)) {
    throw Error(ErrorKind::Configuration, "criterion weights sum to zero");
  }
  const bool off = std::abs(sum - 1.0) > kWeightSumTolerance;
  if (rescaled) *rescaled = off;
  if (off) {
    for (auto& c : criteria) c.weight /= sum;
  }
  return criteria;
}

}  // namespace outrank

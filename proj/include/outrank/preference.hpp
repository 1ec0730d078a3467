#pragma once

#include <cmath>

#include "outrank/criteria.hpp"
#include "outrank/error.hpp"

namespace outrank {

// Degree in [0,1] to which a signed criterion difference d expresses
// preference for the first alternative. Zero for every d <= 0; the opposite
// direction is carried by the transposed pair. Ramp kinds with q == p act as
// a unit step at q.
inline double preference_degree(const PreferenceFunctionSpec& spec, double d) {
  if (!std::isfinite(d)) {
    throw Error(ErrorKind::InvalidInput, "preference_degree: non-finite difference");
  }
  if (d <= 0.0) return 0.0;

  const double q = spec.thresholds.q;
  const double p = spec.thresholds.p;
  switch (spec.kind) {
    case PreferenceKind::Usual:
      return 1.0;
    case PreferenceKind::UShape:
      return d <= q ? 0.0 : 1.0;
    case PreferenceKind::VShape:
      if (d > p) return 1.0;
      return d / p;  // p > 0 here since 0 < d <= p
    case PreferenceKind::Level:
      if (d <= q) return 0.0;
      return d <= p ? 0.5 : 1.0;
    case PreferenceKind::VShapeIndifference:
      if (d <= q) return 0.0;
      if (d > p) return 1.0;
      return (d - q) / (p - q);  // q < d <= p implies p > q
    case PreferenceKind::Gaussian: {
      const double s = spec.thresholds.sigma;
      return 1.0 - std::exp(-(d * d) / (2.0 * s * s));
    }
  }
  throw Error(ErrorKind::InternalInvariant, "unhandled preference kind");
}

}  // namespace outrank

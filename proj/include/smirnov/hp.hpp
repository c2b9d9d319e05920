#pragma once

#include <array>

#include "smirnov/expr.hpp"

namespace smirnov {

// Radial p-mean (1/n) sum_j |e(r zeta_j)|^p at grid resolution; p in (0, 4],
// r in (0, kRMax].  Nondecreasing in r for analytic e.
double hp_mean(const Expr& e, double p, double r, int n = kDefaultGridSize);

enum class GrowthVerdict { kBounded, kDivergent, kInconclusive };

const char* to_string(GrowthVerdict v);

struct TrendReport {
  double p = 0.0;
  std::array<double, 3> radii{0.9, 0.99, 0.999};
  std::array<double, 3> means{0.0, 0.0, 0.0};
  double total_ratio = 0.0;      // means[2] / means[0]
  double increment_ratio = 0.0;  // (m3 - m2)/(m2 - m1) when monotone
  GrowthVerdict verdict = GrowthVerdict::kInconclusive;
};

// Desk-scale H^p membership proxy from the three radial means (a documented
// heuristic, not a proof).  Verdict rule, in order:
//   bounded    if m3/m1 < 1.2;
//   divergent  if monotone and (m3/m1 > 4 or the increment ratio
//              (m3-m2)/(m2-m1) >= 0.95, i.e. log-type growth or worse);
//   bounded    if monotone and the increment ratio <= 0.92 (geometric decay
//              of the increments: the radial means have a finite limit);
//   inconclusive otherwise.
// The pure threshold rule (4 / 1.2) cannot separate log-growth divergence
// from slow bounded tails at these radii, hence the increment-ratio clauses.
TrendReport membership_trend(const Expr& e, double p, int n = kDefaultGridSize);

}  // namespace smirnov

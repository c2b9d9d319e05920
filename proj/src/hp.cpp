#include "smirnov/hp.hpp"

#include <cmath>

namespace smirnov {

double hp_mean(const Expr& e, double p, double r, int n) {
  if (!(p > 0.0) || p > 4.0) {
    throw std::invalid_argument("hp_mean: p must be in (0, 4]");
  }
  if (!(r > 0.0) || r > kRMax) {
    throw std::invalid_argument("hp_mean: r must be in (0, kRMax]");
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const EvalResult v = e.eval(DiskPoint(std::polar(r, 2.0 * kPi * j / n)));
    if (v.at_infinity) {
      throw PoleError("hp_mean: pole on the circle |z| = r", std::polar(r, 2.0 * kPi * j / n));
    }
    sum += std::pow(std::abs(v.value), p);
  }
  return sum / n;
}

const char* to_string(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::kBounded: return "bounded";
    case GrowthVerdict::kDivergent: return "divergent";
    default: return "inconclusive";
  }
}

TrendReport membership_trend(const Expr& e, double p, int n) {
  TrendReport rep;
  rep.p = p;
  for (int k = 0; k < 3; ++k) {
    rep.means[k] = hp_mean(e, p, rep.radii[k], n);
  }
  const double m1 = rep.means[0], m2 = rep.means[1], m3 = rep.means[2];
  rep.total_ratio = m3 / m1;
  const double d1 = m2 - m1, d2 = m3 - m2;
  rep.increment_ratio = (d1 > 0.0) ? d2 / d1 : 0.0;

  if (rep.total_ratio < 1.2) {
    rep.verdict = GrowthVerdict::kBounded;
  } else if (d1 > 0.0 && d2 > 0.0) {
    if (rep.total_ratio > 4.0 || rep.increment_ratio >= 0.95) {
      rep.verdict = GrowthVerdict::kDivergent;
    } else if (rep.increment_ratio <= 0.92) {
      rep.verdict = GrowthVerdict::kBounded;
    } else {
      rep.verdict = GrowthVerdict::kInconclusive;
    }
  } else {
    rep.verdict = GrowthVerdict::kInconclusive;
  }
  return rep;
}

}  // namespace smirnov

#include "smirnov/a_integral.hpp"

#include <cmath>

namespace smirnov {

TruncationLadder::TruncationLadder(Eigen::ArrayXd A) : levels(std::move(A)) {
  if (levels.size() < 2) {
    throw std::invalid_argument("TruncationLadder: need at least two rungs");
  }
  for (int k = 0; k + 1 < levels.size(); ++k) {
    if (!(levels[k] > 0.0) || !(levels[k] < levels[k + 1])) {
      throw std::invalid_argument("TruncationLadder: rungs must be positive increasing");
    }
  }
}

TruncationLadder TruncationLadder::dyadic(int k_lo, int k_hi) {
  return TruncationLadder(dyadic_thresholds(k_lo, k_hi));
}

AIntegralResult a_integral(const BoundaryGrid& h, const TruncationLadder& ladder) {
  AIntegralResult res;
  res.verdict = weak_decay_test(distribution(h, dyadic_thresholds()));
  res.rejected = (res.verdict == WeakDecayVerdict::kNonMember);

  const int n = h.size();
  Complex prev = 0.0;
  for (int k = 0; k < ladder.levels.size(); ++k) {
    const double A = ladder.levels[k];
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex v = h.values()[j];
      if (std::abs(v) <= A) {
        sum += v;
      }
    }
    sum /= double(n);
    TruncationRung rung;
    rung.A = A;
    rung.integral = sum;
    rung.increment = (k == 0) ? 0.0 : std::abs(sum - prev);
    res.trace.push_back(rung);
    prev = sum;
  }
  res.limit = res.trace.back().integral;
  for (size_t k = res.trace.size() >= 3 ? res.trace.size() - 3 : 1;
       k < res.trace.size(); ++k) {
    res.error_bar = std::max(res.error_bar, res.trace[k].increment);
  }
  return res;
}

HerglotzAResult herglotz_a_integral(const BoundaryGrid& v, DiskPoint z,
                                    const TruncationLadder& ladder) {
  if (!v.is_real()) {
    throw std::invalid_argument("herglotz_a_integral: v must be real-valued");
  }
  if (z.abs() > kRMax + 1e-15) {
    throw std::domain_error("herglotz_a_integral: |z| exceeds kRMax");
  }
  const int n = v.size();
  const double mean = v.mean().real();
  const Eigen::ArrayXd vv = v.real_values() - mean;  // restored additively below
  const Eigen::ArrayXcd& zeta = v.nodes();
  Eigen::ArrayXcd kernel(n);
  for (int j = 0; j < n; ++j) {
    kernel[j] = (zeta[j] + z.z) / (zeta[j] - z.z);
  }

  const Complex kI(0.0, 1.0);
  HerglotzAResult res;
  Complex prev = 0.0;
  for (int k = 0; k < ladder.levels.size(); ++k) {
    const double A = ladder.levels[k];
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
      sum += kernel[j] * std::clamp(vv[j], -A, A);
    }
    const Complex value = kI * (sum / double(n) + mean);
    TruncationRung rung;
    rung.A = A;
    rung.integral = value;
    rung.increment = (k == 0) ? 0.0 : std::abs(value - prev);
    res.trace.push_back(rung);
    prev = value;
  }
  res.value = res.trace.back().integral;
  const size_t m = res.trace.size();
  for (size_t k = m >= 3 ? m - 3 : 1; k < m; ++k) {
    res.error_bar = std::max(res.error_bar, res.trace[k].increment);
  }
  for (size_t k = m >= 4 ? m - 4 : 1; k + 1 < m; ++k) {
    if (res.trace[k + 1].increment > res.trace[k].increment + 1e-15) {
      res.increments_monotone = false;  // flagged, not fatal
    }
  }
  return res;
}

Hfs1Certificate hfs1_certificate(const BoundaryGrid& h, double A) {
  if (!(A > 0.0)) {
    throw std::invalid_argument("hfs1_certificate: A must be positive");
  }
  const int n = h.size();
  const double scale = std::max(1.0, h.values().abs().maxCoeff());
  if (std::abs(h.mean()) > 1e-6 * scale) {
    throw std::domain_error("hfs1_certificate: grid mean is far from 0");
  }
  Complex sum = 0.0;
  long count_above = 0;
  for (int j = 0; j < n; ++j) {
    const Complex v = h.values()[j];
    if (std::abs(v) <= A) {
      sum += v;
    } else {
      ++count_above;
    }
  }
  Hfs1Certificate cert;
  cert.lhs = std::abs(sum) / n;
  cert.rho_A = A * double(count_above) / n;
  cert.sigma_0 = empirical_sigma(h, 0.0);
  cert.sigma_A = empirical_sigma(h, A);
  cert.rhs = cert.rho_A + 2.0 * std::sqrt(cert.sigma_0 * cert.sigma_A);
  cert.passes = cert.lhs <= cert.rhs + 1e-8;
  return cert;
}

}  // namespace smirnov

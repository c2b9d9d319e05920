#pragma once

#include <Eigen/Dense>

#include "smirnov/complex_plane.hpp"

namespace smirnov {

// Uniform samples on the unit circle at zeta_j = exp(2 pi i j / n), n a power
// of two >= 64.  Trapezoidal quadrature over the grid integrates trigonometric
// polynomials of degree < n/2 exactly, and is exact as "dm" with weights 1/n.
class BoundaryGrid {
 public:
  explicit BoundaryGrid(Eigen::ArrayXcd values, bool mean_removed = false);

  static BoundaryGrid zeros(int n);

  // Samples f(theta_j), theta_j = 2 pi j / n.  F may return double or Complex.
  template <class F>
  static BoundaryGrid sample(int n, F&& f) {
    Eigen::ArrayXcd v(n);
    for (int j = 0; j < n; ++j) {
      v[j] = Complex(f(2.0 * kPi * j / n));
    }
    return BoundaryGrid(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  double theta(int j) const { return 2.0 * kPi * j / size(); }
  Complex zeta(int j) const { return nodes_[j]; }
  const Eigen::ArrayXcd& nodes() const { return nodes_; }
  const Eigen::ArrayXcd& values() const { return values_; }
  Eigen::ArrayXcd& values() { return values_; }

  bool mean_removed() const { return mean_removed_; }
  Complex mean() const { return values_.mean(); }
  bool is_real(double tol = 1e-9) const;
  Eigen::ArrayXd real_values() const { return values_.real(); }

 private:
  Eigen::ArrayXcd values_;
  Eigen::ArrayXcd nodes_;
  bool mean_removed_ = false;
};

inline constexpr int kDefaultGridSize = 4096;

// Indexed Fourier coefficients g_hat(k), |k| <= max_n.
struct FourierCoeffs {
  int max_n = 0;
  Eigen::ArrayXcd c;  // c[k + max_n] = g_hat(k)

  Complex operator()(int k) const { return c[k + max_n]; }
};

// g_hat(k) = (1/n) sum_j g(zeta_j) zeta_j^{-k}; exact for trigonometric
// polynomials of degree < n/2.  Requires max_n < n/2.
FourierCoeffs fourier_coeffs(const BoundaryGrid& g, int max_n);

// Harmonic conjugate via the Fourier multiplier -i sgn(k); the input must be
// real-valued.  The output has mean zero (conjugate normalized to vanish at
// the origin) and is again real-valued.
BoundaryGrid conjugate(const BoundaryGrid& g);

// Poisson / conjugate-Poisson extensions by grid quadrature against
// P_z = Re((zeta+z)/(zeta-z)) and Q_z = Im((zeta+z)/(zeta-z)); |z| <= kRMax.
Complex poisson_extend(const BoundaryGrid& g, DiskPoint z);
Complex conj_poisson_extend(const BoundaryGrid& g, DiskPoint z);

// Analytic completion (1/n) sum_j g_j (zeta_j + z)/(zeta_j - z); its real and
// imaginary parts are the two extensions above when g is real.
Complex herglotz_extend(const BoundaryGrid& g, DiskPoint z);

// Empirical distribution data of |g| over a threshold ladder:
//   lambda(t) = m{ |g| > t },  rho(t) = t lambda(t),  sigma(A) = sup_{t>=A} rho(t).
// sigma here is the ladder-restricted sup; see empirical_sigma for the exact
// sup over the sample distribution.
struct DistributionProfile {
  Eigen::ArrayXd thresholds;
  Eigen::ArrayXd lambda;
  Eigen::ArrayXd rho;
  Eigen::ArrayXd sigma;
};

// Dyadic threshold ladder t = 2^k, k = k_lo..k_hi.
Eigen::ArrayXd dyadic_thresholds(int k_lo = -4, int k_hi = 16);

DistributionProfile distribution(const BoundaryGrid& g,
                                 const Eigen::ArrayXd& thresholds);

// Exact sup_{t >= A} t lambda(t) for the sample distribution of |g|.  This is
// the attained sup for the discrete measure and a lower bound for the
// underlying function's sigma.
double empirical_sigma(const BoundaryGrid& g, double A);

enum class WeakDecayVerdict { kMember, kNonMember, kInconclusive };

// Heuristic test of t lambda(t) -> 0 over the top of the ladder: member when
// rho decays by at least a factor 2 per decade, non-member when rho fails to
// decay, inconclusive between.
WeakDecayVerdict weak_decay_test(const DistributionProfile& profile);

const char* to_string(WeakDecayVerdict v);

}  // namespace smirnov

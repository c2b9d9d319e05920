#pragma once

#include "smirnov/grid.hpp"

namespace smirnov {

// Outer function from boundary log-modulus data:
//   F(z) = e^{i gamma} exp( integral (zeta+z)/(zeta-z) w(zeta) dm ),  w = log|F|.
// gamma is kept separate from w so that |F(0)| = exp(mean w).
class OuterFunction {
 public:
  OuterFunction(double gamma, BoundaryGrid logmod);

  static OuterFunction unit(int n = kDefaultGridSize);  // F == 1
  // Constant c = |c| e^{i gamma}, c != 0.
  static OuterFunction constant(Complex c, int n = kDefaultGridSize);

  double gamma() const { return gamma_; }
  const BoundaryGrid& logmod() const { return logmod_; }
  int grid_size() const { return logmod_.size(); }

  Complex eval(DiskPoint z) const;

  // exp(w + i conj(w) + i gamma) on the grid: the a.e. boundary function.
  Eigen::ArrayXcd boundary() const;

  // gamma/2 reduced into (-pi/2, pi/2], logmod/2; the square of the result
  // evaluates to this function.
  OuterFunction sqrt() const;

  OuterFunction times(const OuterFunction& other) const;

 private:
  double gamma_ = 0.0;
  BoundaryGrid logmod_;
};

inline Complex outer_eval(const OuterFunction& f, DiskPoint z) { return f.eval(z); }
inline Eigen::ArrayXcd outer_boundary(const OuterFunction& f) { return f.boundary(); }
inline OuterFunction outer_sqrt(const OuterFunction& f) { return f.sqrt(); }

// w = log|1 - zeta| sampled on the grid.  The singular node at zeta = 1 is
// replaced by its quadrature cell average log(pi/n) - 1, which keeps the
// Herglotz quadrature of the integrable singularity consistent.
BoundaryGrid logabs_one_minus_zeta(int n = kDefaultGridSize);

}  // namespace smirnov

#pragma once

#include <utility>
#include <vector>

#include "smirnov/expr.hpp"

namespace smirnov {

// Rational function num/den with complex polynomial coefficients.
struct RationalFn {
  Poly num;
  Poly den;

  Complex eval(Complex z) const { return poly_eval(num, z) / poly_eval(den, z); }
};

// f = I F with real a.e. boundary values.  The inner/outer pair carries the
// canonical data; expr carries the evaluation path (exact closed forms where
// the construction provides them, which matters for tight pointwise checks).
class RealSmirnovFn {
 public:
  RealSmirnovFn(InnerFunction inner, OuterFunction outer);
  RealSmirnovFn(InnerFunction inner, OuterFunction outer, Expr expr);

  const InnerFunction& inner() const { return inner_; }
  const OuterFunction& outer() const { return outer_; }
  const Expr& expr() const { return expr_; }
  int grid_size() const { return outer_.grid_size(); }

  Complex eval(DiskPoint z) const { return expr_.eval(z).value; }

  // Exact a.e. boundary samples: inner boundary values times the outer
  // boundary function.  NaN at singular atoms.
  Eigen::ArrayXcd boundary_values() const;

 private:
  InnerFunction inner_;
  OuterFunction outer_;
  Expr expr_;
};

// K(phi) as a real Smirnov function: inner factor phi, outer factor
// -4/(1 - phi)^2 (grid data), exact expression apply_K(phi).
RealSmirnovFn koebe_of_inner(const InnerFunction& phi, int n = kDefaultGridSize);

// Helson representation f = i (psi1 + psi2)/(psi1 - psi2) with relatively
// prime finite Blaschke products psi1, psi2.
struct HelsonPair {
  InnerFunction psi1;
  InnerFunction psi2;

  Complex reconstruct(Complex z) const;
};

// Decomposition through (f - i)/(f + i) = psi2/psi1 for rational f with real
// boundary values.  Zeros of the two sides closer than 1e-8 are treated as a
// common factor and cancelled.
HelsonPair helson_decompose(const RationalFn& f);

struct KoebeFactorization {
  Expr koebe_part;          // K(I_f), or the constant 2 when I_f is constant
  RealSmirnovFn outer_part; // R_f = -(1/4)(1 - I_f)^2 F, outer and real
};

// f = K_f R_f with K_f Koebe inner; |R_f| <= |f| and sign(R_f) = sign(f)
// a.e. on the circle.  A constant inner factor is absorbed as K_f = 2.
KoebeFactorization koebe_factor(const RealSmirnovFn& f);

// For f >= 0 a.e.: f = g1^2 + g2^2 with g1 = (1/2)(1 + I_f) sqrt(F) and
// g2 = (i/2)(1 - I_f) sqrt(F), both real outer.  The pointwise square-root
// branch cancels in the squares.
std::pair<RealSmirnovFn, RealSmirnovFn> sum_of_squares(const RealSmirnovFn& f);

// Level sets E_n = {v >= n}, n = 1..max v, of a nonnegative integer-valued
// staircase sampled on the grid; prod_n f_{E_n} = exp[pi(-conj(v) + iv)].
std::vector<ArcSet> bounded_arg_expand(const BoundaryGrid& v);

// Winding number of f around 0 along |z| = r, by sampled argument tracking.
int winding_number(const Expr& f, double r, int samples = 4096);

}  // namespace smirnov

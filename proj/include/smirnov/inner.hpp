#pragma once

#include <vector>

#include "smirnov/grid.hpp"
#include "smirnov/poly.hpp"

namespace smirnov {

struct BlaschkeZero {
  Complex a;             // in the punctured disk, a != 0
  int multiplicity = 1;
};

struct SingularAtom {
  Complex zeta;   // |zeta| = 1
  double mass;    // > 0
};

// Inner function with finite data:
//   I(z) = xi z^N prod_k [ (|a_k|/a_k) (a_k - z)/(1 - conj(a_k) z) ]^{m_k}
//          * exp( - sum_k mu_k (zeta_k + z)/(zeta_k - z) ).
// Infinite Blaschke products and continuous singular measures are out of
// scope; truncation sequences live in the products module.
class InnerFunction {
 public:
  InnerFunction() = default;  // constant 1

  InnerFunction(Complex xi, int power, std::vector<BlaschkeZero> zeros,
                std::vector<SingularAtom> atoms);

  static InnerFunction one() { return InnerFunction(); }
  static InnerFunction unimodular_constant(Complex xi);
  static InnerFunction monomial(int power);
  static InnerFunction blaschke_factor(Complex a);  // single zero, xi = 1
  static InnerFunction blaschke(std::vector<BlaschkeZero> zeros, Complex xi = 1.0);
  // exp(mass (z + zeta)/(z - zeta)); the classic point-mass singular factor.
  static InnerFunction atomic(Complex zeta, double mass);

  Complex xi() const { return xi_; }
  int power() const { return power_; }
  const std::vector<BlaschkeZero>& zeros() const { return zeros_; }
  const std::vector<SingularAtom>& atoms() const { return atoms_; }

  bool is_constant() const { return power_ == 0 && zeros_.empty() && atoms_.empty(); }
  int zero_count() const;                // with multiplicity, excluding origin
  double total_singular_mass() const;
  double origin_modulus() const;         // |I(0)| = e^{-mu(T)} prod |a_k|^{m_k}

  Complex eval(Complex z) const;         // |z| <= 1, off atoms
  // Exact unimodular boundary samples at the grid nodes (atoms excepted, where
  // the value is NaN).
  Eigen::ArrayXcd boundary_values(const BoundaryGrid& like) const;

  InnerFunction times(const InnerFunction& other) const;

  // Numerator/denominator polynomials of a finite Blaschke product; throws if
  // a singular part is present.
  std::pair<Poly, Poly> to_rational() const;

 private:
  Complex xi_{1.0, 0.0};
  int power_ = 0;
  std::vector<BlaschkeZero> zeros_;
  std::vector<SingularAtom> atoms_;
};

inline Complex inner_eval(const InnerFunction& f, Complex z) { return f.eval(z); }
inline InnerFunction inner_multiply(const InnerFunction& a, const InnerFunction& b) {
  return a.times(b);
}

// Recovers the finite Blaschke representation of a rational function num/den
// that is analytic on the closed disk and unimodular on the circle.  Errors:
// uncancelled pole inside the disk; boundary modulus deviating from 1 by more
// than 1e-8.
InnerFunction rational_inner_from_bounded(const Poly& num, const Poly& den);

}  // namespace smirnov

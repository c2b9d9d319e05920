#pragma once

#include <vector>

#include "smirnov/grid.hpp"
#include "smirnov/inner.hpp"

namespace smirnov {

// Half-open arc [beta, alpha) of the unit circle, counterclockwise.  In
// canonical form beta is in [0, 2pi) and alpha is in (beta, beta + 2pi], so a
// single arc may cover the wrap point.
struct Arc {
  double beta;
  double alpha;

  double length() const { return alpha - beta; }
};

// Finite disjoint union of half-open arcs, normalized and sorted.  Overlapping
// or exactly adjacent input arcs are merged (union semantics), so disjointness
// is an invariant rather than a precondition.
class ArcSet {
 public:
  ArcSet() = default;  // empty set
  explicit ArcSet(std::vector<Arc> arcs);

  static ArcSet arc(double beta, double alpha) { return ArcSet({Arc{beta, alpha}}); }
  static ArcSet full_circle();

  const std::vector<Arc>& arcs() const { return arcs_; }
  int count() const { return static_cast<int>(arcs_.size()); }
  bool empty() const { return arcs_.empty(); }
  bool is_full() const;

  // Normalized Lebesgue measure, sum of lengths / 2pi, in [0, 1].
  double measure() const;

  // Half-open membership: left endpoint in, right endpoint out.
  bool contains(double theta) const;

  Eigen::ArrayXd indicator_samples(int n) const;  // chi_E at the grid nodes

 private:
  std::vector<Arc> arcs_;
};

ArcSet arcset_union(const ArcSet& a, const ArcSet& b);
ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b);
ArcSet arcset_complement(const ArcSet& a);

// Arcs of samples with Re v_j >= threshold (node-aligned, half-open cells).
ArcSet level_set_arcs(const BoundaryGrid& v, double threshold);

// The Cayley inner function attached to E, f_E = exp[pi(-conj(v_E) + i v_E)]
// with v_E the Poisson extension of chi_E, evaluated as the product of the
// per-arc closed forms
//   e^{-i(alpha-beta)/2} (e^{i alpha} - z)/(e^{i beta} - z).
// Properties: f_E(0) = e^{i pi m(E)}, arg f_E = pi chi_E a.e. on the circle,
// f_empty = 1 and f_circle = -1.
Complex cayley_eval(const ArcSet& set, DiskPoint z);

struct CayleyInnerFn {
  ArcSet set;
  double scale = 1.0;  // |f(0)| multiplier
};

Complex cayley_eval(const CayleyInnerFn& f, DiskPoint z);

// The inner function with T(phi) = f_E per arc: the Blaschke product with one
// zero per arc,
//   z_E = e^{i(alpha+beta)/2} tan([pi - (alpha - beta)]/4),
// valid when every arc has measure < 1/2.  For a single arc the result is
// exactly T^{-1}(f_E); for several arcs the factors satisfy
// prod_j T(phi_j) = f_E, which is the identity asserted numerically (the
// single inner function T^{-1}(f_E) is not a finite Blaschke product then).
InnerFunction phi_from_arcset(const ArcSet& set);

// Origin data of an inner function and the measure it implies through
// phi_E(0) = tan(pi/2 (1/2 - m(E))).  Requires I(0) real and nonzero.
struct InnerLevelEstimate {
  double origin_value;      // I(0), signed
  double origin_modulus;    // e^{-mu(T)} prod |a_k|^{m_k}
  double implied_measure;   // m(E) solving the tangent relation
};

InnerLevelEstimate arcset_from_inner_check(const InnerFunction& I);

// The level arcs I_n of the atomic inner function exp(rho (z+1)/(z-1)):
// endpoints ((4n+j)pi - 2 rho i)/((4n+j)pi + 2 rho i), j = 1, 3, for n in
// [n_lo, n_hi].  Their total measure over all n is 1/2 - (2/pi) atan(e^{-rho}).
ArcSet atomic_level_arcs(double rho, int n_lo, int n_hi);

// Upper bound for the measure of the arcs outside [n_lo, n_hi].
double atomic_level_tail_bound(double rho, int n_lo, int n_hi);

// Finite stage of a fat Cantor set on the circle: at stage k the open middle
// proportion fatness^{k+1} of each remaining interval is removed.  Stage
// measure is exactly prod_{k<depth} (1 - fatness^{k+1}).
ArcSet cantor_stage(int depth, double fatness = 0.25);
double cantor_stage_measure(int depth, double fatness = 0.25);

}  // namespace smirnov

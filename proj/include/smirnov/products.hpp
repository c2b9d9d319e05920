#pragma once

#include <optional>
#include <vector>

#include "smirnov/cayley.hpp"
#include "smirnov/expr.hpp"

namespace smirnov {

// Named term generators with analytic tail information.
struct SequenceFamily {
  enum class Kind {
    kGeometricArcs,   // arcs with m(E_n) = ratio^n, ratio in (0,1)
    kHarmonicArcs,    // arcs with m(E_n) = 1/(2n)
    kBlaschkeRadial,  // single zeros a_n = 1 - c q^n (q in (0,1)) or 1 - c/n (q = 0)
    kMonomialPowers,  // phi_n = z for every n
    kRotations,       // phi_n = e^{i theta_n}, theta_n = c/n^p
    kAtomMasses,      // atoms at 1 with mass mu_n = c/n^p
  };

  Kind kind;
  double param = 0.5;   // ratio / c, per kind
  double param2 = 0.0;  // q or exponent p, per kind
  int count = 256;      // default truncation horizon

  InnerFunction term(int n) const;          // n >= 1
  std::optional<ArcSet> term_arcs(int n) const;  // for the arc families

  bool theta_sum_converges() const;
  bool powers_sum_converges() const;
  bool blaschke_sum_converges() const;
  bool singular_mass_sum_converges() const;

  // Upper bound for sum_{n > K} |1 - phi_n(0)| on convergent families.
  double origin_tail_bound(int K) const;
};

// A sequence of inner functions, either an explicit finite list (a finite
// product, trivially convergent) or a named family.
class InnerSequence {
 public:
  static InnerSequence from_terms(std::vector<InnerFunction> terms);
  static InnerSequence from_family(SequenceFamily family);

  const std::optional<SequenceFamily>& family() const { return family_; }
  int term_count() const;  // explicit size or the family horizon
  InnerFunction term(int n) const;  // n >= 1
  std::optional<ArcSet> term_arcs(int n) const;

 private:
  std::vector<InnerFunction> terms_;
  std::optional<SequenceFamily> family_;
};

enum class ConvergenceStatus { kConverges, kDiverges, kInconclusive };

enum class CriterionTag { kNone, kTheta, kPowers, kBlaschke, kSingularMass };

struct ConvergenceVerdict {
  ConvergenceStatus status = ConvergenceStatus::kInconclusive;
  CriterionTag failing = CriterionTag::kNone;
  double tail_estimate = 0.0;  // bound on sum_{n > count} |1 - phi_n(0)|
};

const char* to_string(ConvergenceStatus s);
const char* to_string(CriterionTag t);

// Convergence of prod phi_n, decided by the four-part criterion: the rotation
// sum (taken absolutely: sum |theta_n|), the power sum, the joint Blaschke
// sum, and the singular mass sum.  Explicit finite lists converge trivially;
// verdicts for families come from their analytic tail data.
ConvergenceVerdict unilateral_verdict(const InnerSequence& s);

struct ProductValue {
  Complex value{1.0, 0.0};
  double tail_bound = 0.0;
};

// Partial product prod_{n <= K} T(phi_n)(z) with a Schwarz-type tail bound.
// Requires unilateral_verdict(s).status == kConverges.
ProductValue unilateral_eval(const InnerSequence& s, DiskPoint z, int K);

// Partial sums sum_{n <= K} m(E_n) for the arc families (the trace shown for
// divergence diagnostics).
std::vector<double> arc_measure_partial_sums(const InnerSequence& s, int K);

struct BilateralSplit {
  std::vector<ArcSet> plus;   // E_n^+ = {v >= n}
  std::vector<ArcSet> minus;  // E_n^- = {v <= -n}
};

// Level sets of an integer-valued grid function, signs split.
BilateralSplit bilateral_split(const BoundaryGrid& v);

struct BilateralValue {
  Complex value{1.0, 0.0};
  double imbalance_sum = 0.0;                 // sum_{n<=K} |m(E_n^+) - m(E_n^-)|
  std::vector<double> per_term_imbalance;
};

// Partial bilateral product prod_{n <= K} f_{E_n^+}(z) / f_{E_n^-}(z) with the
// absolute-convergence diagnostic sum.
BilateralValue bilateral_eval(const BilateralSplit& split, DiskPoint z, int K);

// 1 - T(phi+)(z)/T(phi-)(z), verified against the closed form
// 2i(phi+ - phi-) / ((1 + i phi+)(1 - i phi-)).
Complex quotient_deviation(const InnerFunction& phi_plus,
                           const InnerFunction& phi_minus, DiskPoint z);

// The inner function phi with T(phi) = T(phi1) + T(phi2):
//   phi = (3i phi1 phi2 + phi1 + phi2 + i) / (3 + i phi1 + i phi2 + phi1 phi2),
// reduced to finite Blaschke form.  Requires rational (finite Blaschke) input.
InnerFunction cayley_sum_inner(const InnerFunction& phi1, const InnerFunction& phi2);

}  // namespace smirnov

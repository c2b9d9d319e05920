#include "smirnov/products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smirnov {

namespace {
const Complex kI(0.0, 1.0);
}

InnerFunction SequenceFamily::term(int n) const {
  if (n < 1) {
    throw std::invalid_argument("SequenceFamily::term: n >= 1");
  }
  switch (kind) {
    case Kind::kGeometricArcs:
    case Kind::kHarmonicArcs:
      return phi_from_arcset(*term_arcs(n));
    case Kind::kBlaschkeRadial: {
      const double gap = (param2 > 0.0) ? param * std::pow(param2, n) : param / n;
      return InnerFunction::blaschke_factor(1.0 - gap);
    }
    case Kind::kMonomialPowers:
      return InnerFunction::monomial(1);
    case Kind::kRotations:
      return InnerFunction::unimodular_constant(
          std::polar(1.0, param / std::pow(double(n), param2)));
    case Kind::kAtomMasses:
      return InnerFunction::atomic(1.0, param / std::pow(double(n), param2));
  }
  throw std::logic_error("SequenceFamily::term: unknown kind");
}

std::optional<ArcSet> SequenceFamily::term_arcs(int n) const {
  double m = 0.0;
  switch (kind) {
    case Kind::kGeometricArcs:
      m = std::pow(param, n);
      break;
    case Kind::kHarmonicArcs:
      m = 0.5 / n;
      break;
    default:
      return std::nullopt;
  }
  // Arc of measure m centered at angle pi.
  return ArcSet::arc(kPi * (1.0 - m), kPi * (1.0 + m));
}

bool SequenceFamily::theta_sum_converges() const {
  if (kind == Kind::kRotations) {
    return param2 > 1.0;
  }
  return true;  // all other families have theta_n = 0 for large n
}

bool SequenceFamily::powers_sum_converges() const {
  return kind != Kind::kMonomialPowers;
}

bool SequenceFamily::blaschke_sum_converges() const {
  switch (kind) {
    case Kind::kGeometricArcs:
      return true;  // 1 - |z_n| <= pi m(E_n), geometric
    case Kind::kHarmonicArcs:
      return false;  // 1 - |z_n| ~ pi/(2n)
    case Kind::kBlaschkeRadial:
      return param2 > 0.0;  // geometric gaps converge, 1/n gaps do not
    default:
      return true;
  }
}

bool SequenceFamily::singular_mass_sum_converges() const {
  if (kind == Kind::kAtomMasses) {
    return param2 > 1.0;
  }
  return true;
}

double SequenceFamily::origin_tail_bound(int K) const {
  switch (kind) {
    case Kind::kGeometricArcs:
      // |1 - phi_n(0)| = 1 - tan(pi/4 - pi m/2) <= pi m(E_n).
      return kPi * std::pow(param, K + 1) / (1.0 - param);
    case Kind::kBlaschkeRadial:
      if (param2 > 0.0) {
        return param * std::pow(param2, K + 1) / (1.0 - param2);
      }
      break;
    case Kind::kRotations:
      if (param2 > 1.0) {
        // |1 - e^{i theta}| <= |theta|; integral tail of c/n^p.
        return param * std::pow(double(K), 1.0 - param2) / (param2 - 1.0);
      }
      break;
    case Kind::kAtomMasses:
      if (param2 > 1.0) {
        return param * std::pow(double(K), 1.0 - param2) / (param2 - 1.0);
      }
      break;
    default:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

InnerSequence InnerSequence::from_terms(std::vector<InnerFunction> terms) {
  InnerSequence s;
  s.terms_ = std::move(terms);
  return s;
}

InnerSequence InnerSequence::from_family(SequenceFamily family) {
  switch (family.kind) {
    case SequenceFamily::Kind::kGeometricArcs:
      if (!(family.param > 0.0) || family.param > 0.5) {
        throw std::invalid_argument("geometric-arcs: ratio must be in (0, 1/2]");
      }
      break;
    case SequenceFamily::Kind::kBlaschkeRadial:
      if (!(family.param > 0.0) || family.param > 0.5 || family.param2 < 0.0 ||
          family.param2 >= 1.0) {
        throw std::invalid_argument("blaschke-radial: need c in (0, 1/2], q in [0, 1)");
      }
      break;
    default:
      break;
  }
  if (family.count < 1) {
    throw std::invalid_argument("SequenceFamily: count must be >= 1");
  }
  InnerSequence s;
  s.family_ = std::move(family);
  return s;
}

int InnerSequence::term_count() const {
  return family_ ? family_->count : static_cast<int>(terms_.size());
}

InnerFunction InnerSequence::term(int n) const {
  if (family_) {
    return family_->term(n);
  }
  if (n < 1 || n > static_cast<int>(terms_.size())) {
    throw std::out_of_range("InnerSequence::term");
  }
  return terms_[n - 1];
}

std::optional<ArcSet> InnerSequence::term_arcs(int n) const {
  return family_ ? family_->term_arcs(n) : std::nullopt;
}

const char* to_string(ConvergenceStatus s) {
  switch (s) {
    case ConvergenceStatus::kConverges: return "converges";
    case ConvergenceStatus::kDiverges: return "diverges";
    default: return "inconclusive";
  }
}

const char* to_string(CriterionTag t) {
  switch (t) {
    case CriterionTag::kTheta: return "theta";
    case CriterionTag::kPowers: return "powers";
    case CriterionTag::kBlaschke: return "blaschke";
    case CriterionTag::kSingularMass: return "singular-mass";
    default: return "none";
  }
}

ConvergenceVerdict unilateral_verdict(const InnerSequence& s) {
  ConvergenceVerdict v;
  if (!s.family()) {
    // A finite explicit list is a finite product.
    v.status = ConvergenceStatus::kConverges;
    v.failing = CriterionTag::kNone;
    v.tail_estimate = 0.0;
    return v;
  }
  const SequenceFamily& fam = *s.family();
  if (!fam.theta_sum_converges()) {
    v.status = ConvergenceStatus::kDiverges;
    v.failing = CriterionTag::kTheta;
    return v;
  }
  if (!fam.powers_sum_converges()) {
    v.status = ConvergenceStatus::kDiverges;
    v.failing = CriterionTag::kPowers;
    return v;
  }
  if (!fam.blaschke_sum_converges()) {
    v.status = ConvergenceStatus::kDiverges;
    v.failing = CriterionTag::kBlaschke;
    return v;
  }
  if (!fam.singular_mass_sum_converges()) {
    v.status = ConvergenceStatus::kDiverges;
    v.failing = CriterionTag::kSingularMass;
    return v;
  }
  v.status = ConvergenceStatus::kConverges;
  v.failing = CriterionTag::kNone;
  v.tail_estimate = fam.origin_tail_bound(fam.count);
  return v;
}

ProductValue unilateral_eval(const InnerSequence& s, DiskPoint z, int K) {
  const ConvergenceVerdict v = unilateral_verdict(s);
  if (v.status != ConvergenceStatus::kConverges) {
    throw std::domain_error("unilateral_eval: sequence verdict is not 'converges'");
  }
  ProductValue out;
  const int kmax = s.family() ? K : std::min(K, s.term_count());
  for (int n = 1; n <= kmax; ++n) {
    out.value *= mobius_T(s.term(n).eval(z.z));
  }
  // Tail of the dropped factors: Schwarz transfer to z, then through T.
  double tail0 = 0.0;
  if (s.family()) {
    tail0 = s.family()->origin_tail_bound(K);
  } else {
    for (int n = kmax + 1; n <= s.term_count(); ++n) {
      tail0 += std::abs(1.0 - s.term(n).eval(0.0));
    }
  }
  if (tail0 > 0.0) {
    const double sbar = tail0 * (1.0 + z.abs()) / std::max(1e-15, 1.0 - z.abs());
    if (sbar < 0.7) {
      const double mapped = std::sqrt(2.0) * sbar / (std::sqrt(2.0) - sbar);
      out.tail_bound = std::abs(out.value) * std::expm1(mapped);
    } else {
      out.tail_bound = std::numeric_limits<double>::infinity();
    }
  }
  return out;
}

std::vector<double> arc_measure_partial_sums(const InnerSequence& s, int K) {
  std::vector<double> sums;
  double acc = 0.0;
  for (int n = 1; n <= K; ++n) {
    const auto arcs = s.term_arcs(n);
    if (!arcs) {
      throw std::invalid_argument("arc_measure_partial_sums: not an arc family");
    }
    acc += arcs->measure();
    sums.push_back(acc);
  }
  return sums;
}

BilateralSplit bilateral_split(const BoundaryGrid& v) {
  const int n = v.size();
  int max_pos = 0, max_neg = 0;
  for (int j = 0; j < n; ++j) {
    const Complex c = v.values()[j];
    const double rounded = std::round(c.real());
    if (std::abs(c.imag()) > 1e-9 || std::abs(c.real() - rounded) > 1e-9) {
      throw std::domain_error("bilateral_split: samples must be integers");
    }
    max_pos = std::max(max_pos, static_cast<int>(rounded));
    max_neg = std::max(max_neg, static_cast<int>(-rounded));
  }
  BilateralSplit split;
  BoundaryGrid neg(-v.values());
  for (int level = 1; level <= max_pos; ++level) {
    split.plus.push_back(level_set_arcs(v, level - 0.5));
  }
  for (int level = 1; level <= max_neg; ++level) {
    split.minus.push_back(level_set_arcs(neg, level - 0.5));
  }
  return split;
}

BilateralValue bilateral_eval(const BilateralSplit& split, DiskPoint z, int K) {
  BilateralValue out;
  const int levels =
      static_cast<int>(std::max(split.plus.size(), split.minus.size()));
  for (int n = 1; n <= std::min(K, levels); ++n) {
    const bool has_p = n <= static_cast<int>(split.plus.size());
    const bool has_m = n <= static_cast<int>(split.minus.size());
    const Complex num = has_p ? cayley_eval(split.plus[n - 1], z) : Complex(1.0);
    const Complex den = has_m ? cayley_eval(split.minus[n - 1], z) : Complex(1.0);
    out.value *= num / den;
    const double mp = has_p ? split.plus[n - 1].measure() : 0.0;
    const double mm = has_m ? split.minus[n - 1].measure() : 0.0;
    out.per_term_imbalance.push_back(std::abs(mp - mm));
    out.imbalance_sum += std::abs(mp - mm);
  }
  return out;
}

Complex quotient_deviation(const InnerFunction& phi_plus,
                           const InnerFunction& phi_minus, DiskPoint z) {
  const Complex wp = phi_plus.eval(z.z);
  const Complex wm = phi_minus.eval(z.z);
  if (chordal(wp, kI) < kPoleTol) {
    throw PoleError("quotient_deviation: T(phi+) at its pole", kI);
  }
  if (chordal(wm, -kI) < kPoleTol) {
    throw PoleError("quotient_deviation: T(phi-) vanishes", -kI);
  }
  const Complex lhs = 1.0 - mobius_T(wp) / mobius_T(wm);
  const Complex rhs = 2.0 * kI * (wp - wm) / ((1.0 + kI * wp) * (1.0 - kI * wm));
  if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(lhs))) {
    throw std::logic_error("quotient_deviation: algebraic identity violated");
  }
  return lhs;
}

InnerFunction cayley_sum_inner(const InnerFunction& phi1, const InnerFunction& phi2) {
  const auto [p1, q1] = phi1.to_rational();
  const auto [p2, q2] = phi2.to_rational();
  // phi = (3i p1 p2 + p1 q2 + p2 q1 + i q1 q2) / (3 q1 q2 + i p1 q2 + i p2 q1 + p1 p2)
  const Poly p1p2 = poly_mul(p1, p2);
  const Poly p1q2 = poly_mul(p1, q2);
  const Poly p2q1 = poly_mul(p2, q1);
  const Poly q1q2 = poly_mul(q1, q2);
  Poly num = poly_add(poly_add(p1p2, p1q2, 3.0 * kI, 1.0),
                      poly_add(p2q1, q1q2, 1.0, kI));
  Poly den = poly_add(poly_add(q1q2, p1q2, 3.0, kI),
                      poly_add(p2q1, p1p2, kI, 1.0));
  InnerFunction phi = rational_inner_from_bounded(num, den);

  // T(phi) = T(phi1) + T(phi2) pointwise.
  for (const Complex z : {Complex(0.13, 0.21), Complex(-0.4, 0.1), Complex(0.05, -0.33)}) {
    const Complex lhs = mobius_T(phi.eval(z));
    const Complex rhs = mobius_T(phi1.eval(z)) + mobius_T(phi2.eval(z));
    if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::abs(rhs))) {
      throw std::logic_error("cayley_sum_inner: T-addition identity violated");
    }
  }
  return phi;
}

}  // namespace smirnov

#include "smirnov/cayley.hpp"

#include <algorithm>
#include <cmath>

namespace smirnov {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kArcEps = 1e-13;  // merge/drop tolerance in radians

double wrap_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0) {
    r += kTwoPi;
  }
  return r;
}

struct Segment {
  double lo, hi;  // non-wrapping, within [0, 2pi]
};

// Split arbitrary arcs into non-wrapping segments, merge, and refuse the pair
// straddling the wrap point into a single canonical arc.
std::vector<Arc> normalize(const std::vector<Arc>& raw) {
  std::vector<Segment> segs;
  for (const Arc& a : raw) {
    double len = a.alpha - a.beta;
    if (!(len > 0.0)) {
      throw std::invalid_argument("ArcSet: arc must have alpha > beta");
    }
    if (len >= kTwoPi - kArcEps) {
      return {Arc{0.0, kTwoPi}};  // covers the whole circle
    }
    const double beta = wrap_angle(a.beta);
    if (beta + len <= kTwoPi) {
      segs.push_back({beta, beta + len});
    } else {
      segs.push_back({beta, kTwoPi});
      segs.push_back({0.0, beta + len - kTwoPi});
    }
  }
  if (segs.empty()) {
    return {};
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  std::vector<Segment> merged;
  for (const Segment& s : segs) {
    if (s.hi - s.lo < kArcEps) {
      continue;
    }
    if (!merged.empty() && s.lo <= merged.back().hi + kArcEps) {
      merged.back().hi = std::max(merged.back().hi, s.hi);
    } else {
      merged.push_back(s);
    }
  }
  if (merged.empty()) {
    return {};
  }
  if (merged.size() == 1 && merged[0].hi - merged[0].lo >= kTwoPi - kArcEps) {
    return {Arc{0.0, kTwoPi}};
  }
  std::vector<Arc> arcs;
  arcs.reserve(merged.size());
  // Fuse a segment ending at 2pi with one starting at 0 across the wrap point.
  size_t first = 0;
  if (merged.size() >= 2 && merged.front().lo < kArcEps &&
      merged.back().hi > kTwoPi - kArcEps) {
    const Segment& head = merged.front();
    const Segment& tail = merged.back();
    arcs.push_back(Arc{tail.lo, kTwoPi + head.hi});
    first = 1;
    merged.pop_back();
  }
  for (size_t i = first; i < merged.size(); ++i) {
    arcs.push_back(Arc{merged[i].lo, merged[i].hi});
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return x.beta < y.beta; });
  return arcs;
}

}  // namespace

ArcSet::ArcSet(std::vector<Arc> arcs) : arcs_(normalize(arcs)) {}

ArcSet ArcSet::full_circle() { return ArcSet({Arc{0.0, kTwoPi}}); }

bool ArcSet::is_full() const {
  return arcs_.size() == 1 && arcs_[0].length() >= kTwoPi - kArcEps;
}

double ArcSet::measure() const {
  double total = 0.0;
  for (const Arc& a : arcs_) {
    total += a.length();
  }
  return total / kTwoPi;
}

bool ArcSet::contains(double theta) const {
  const double t = wrap_angle(theta);
  for (const Arc& a : arcs_) {
    if (t >= a.beta && t < a.alpha) {
      return true;
    }
    if (a.alpha > kTwoPi && t + kTwoPi < a.alpha) {
      return true;  // wrap arc covers [0, alpha - 2pi)
    }
  }
  return false;
}

Eigen::ArrayXd ArcSet::indicator_samples(int n) const {
  Eigen::ArrayXd chi = Eigen::ArrayXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    chi[j] = contains(kTwoPi * j / n) ? 1.0 : 0.0;
  }
  return chi;
}

ArcSet arcset_union(const ArcSet& a, const ArcSet& b) {
  std::vector<Arc> arcs = a.arcs();
  arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
  return ArcSet(std::move(arcs));
}

ArcSet arcset_complement(const ArcSet& a) {
  if (a.empty()) {
    return ArcSet::full_circle();
  }
  if (a.is_full()) {
    return ArcSet();
  }
  // Gaps between consecutive arcs, walking the circle once.
  std::vector<Arc> gaps;
  const auto& arcs = a.arcs();
  for (size_t i = 0; i < arcs.size(); ++i) {
    const double end = arcs[i].alpha;
    const double next = (i + 1 < arcs.size()) ? arcs[i + 1].beta
                                              : arcs[0].beta + kTwoPi;
    if (next - end > kArcEps) {
      gaps.push_back(Arc{end, next});
    }
  }
  return ArcSet(std::move(gaps));
}

ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b) {
  return arcset_complement(
      arcset_union(arcset_complement(a), arcset_complement(b)));
}

ArcSet level_set_arcs(const BoundaryGrid& v, double threshold) {
  const int n = v.size();
  std::vector<Arc> arcs;
  int run_start = -1;
  auto flush = [&](int end_exclusive) {
    if (run_start >= 0) {
      arcs.push_back(Arc{kTwoPi * run_start / n, kTwoPi * end_exclusive / n});
      run_start = -1;
    }
  };
  for (int j = 0; j < n; ++j) {
    if (v.values()[j].real() >= threshold) {
      if (run_start < 0) {
        run_start = j;
      }
    } else {
      flush(j);
    }
  }
  flush(n);
  return ArcSet(std::move(arcs));  // normalize fuses a run crossing the wrap
}

Complex cayley_eval(const ArcSet& set, DiskPoint z) {
  if (set.empty()) {
    return 1.0;
  }
  if (set.is_full()) {
    return -1.0;
  }
  Complex out = 1.0;
  for (const Arc& a : set.arcs()) {
    const Complex eb = std::polar(1.0, a.beta);
    const Complex ea = std::polar(1.0, a.alpha);
    if (std::abs(z.z - eb) < kPoleTol || std::abs(z.z - ea) < kPoleTol) {
      throw PoleError("cayley_eval: z at an arc endpoint", std::abs(z.z - eb) < kPoleTol ? eb : ea);
    }
    out *= std::polar(1.0, -0.5 * a.length()) * (ea - z.z) / (eb - z.z);
  }
  return out;
}

Complex cayley_eval(const CayleyInnerFn& f, DiskPoint z) {
  if (!(f.scale > 0.0)) {
    throw std::invalid_argument("CayleyInnerFn: scale must be positive");
  }
  return f.scale * cayley_eval(f.set, z);
}

InnerFunction phi_from_arcset(const ArcSet& set) {
  if (set.empty()) {
    return InnerFunction::one();
  }
  if (set.is_full()) {
    return InnerFunction::unimodular_constant(-1.0);
  }
  std::vector<BlaschkeZero> zeros;
  Complex xi = 1.0;
  int power = 0;
  for (const Arc& a : set.arcs()) {
    const double len = a.length();
    if (len > kPi + 1e-12) {
      throw std::domain_error(
          "phi_from_arcset: arc measure > 1/2 has no single-Blaschke closed "
          "form; fall back to cayley_eval composed with mobius_T_inv");
    }
    if (std::abs(len - kPi) <= 1e-12) {
      // Measure exactly 1/2: the zero degenerates to the origin and the
      // factor is -e^{-i(alpha+beta)/2} z.
      xi *= -std::polar(1.0, -0.5 * (a.alpha + a.beta));
      ++power;
      continue;
    }
    const Complex z_e =
        std::polar(std::tan(0.25 * (kPi - len)), 0.5 * (a.alpha + a.beta));
    zeros.push_back(BlaschkeZero{z_e, 1});
  }
  return InnerFunction(xi, power, std::move(zeros), {});
}

InnerLevelEstimate arcset_from_inner_check(const InnerFunction& I) {
  const Complex v = I.eval(0.0);
  if (std::abs(v) < 1e-12) {
    throw std::domain_error("arcset_from_inner_check: I(0) = 0 (measure would be 1/2 exactly)");
  }
  if (std::abs(v.imag()) > 1e-9 * std::abs(v)) {
    throw std::domain_error("arcset_from_inner_check: I(0) is not real");
  }
  InnerLevelEstimate est;
  est.origin_value = v.real();
  est.origin_modulus = I.origin_modulus();
  est.implied_measure = measure_from_origin_value(v.real());
  return est;
}

ArcSet atomic_level_arcs(double rho, int n_lo, int n_hi) {
  if (!(rho > 0.0)) {
    throw std::invalid_argument("atomic_level_arcs: rho must be positive");
  }
  if (n_lo > n_hi) {
    throw std::invalid_argument("atomic_level_arcs: empty range");
  }
  auto endpoint_angle = [&](double x) {
    const Complex w = Complex(x, -2.0 * rho) / Complex(x, 2.0 * rho);
    return wrap_angle(std::arg(w));
  };
  std::vector<Arc> arcs;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double beta = endpoint_angle((4.0 * n + 1.0) * kPi);
    const double alpha = endpoint_angle((4.0 * n + 3.0) * kPi);
    arcs.push_back(Arc{beta, alpha});
  }
  return ArcSet(std::move(arcs));
}

double atomic_level_tail_bound(double rho, int n_lo, int n_hi) {
  // Telescoping bound: the arcs for n >= M occupy disjoint subintervals of
  // (0, atan(2 rho / ((4M+1) pi))) in the atan variable.
  auto upper_tail = [&](int M) {
    return std::atan(2.0 * rho / ((4.0 * M + 1.0) * kPi)) / kPi;
  };
  double bound = upper_tail(n_hi + 1);
  // Arcs below n_lo are conjugates of the arcs for n >= -n_lo.
  bound += upper_tail(std::max(0, -n_lo));
  return bound;
}

ArcSet cantor_stage(int depth, double fatness) {
  if (depth < 0 || depth > 20) {
    throw std::invalid_argument("cantor_stage: depth must be in [0, 20]");
  }
  if (!(fatness > 0.0) || fatness >= 1.0) {
    throw std::invalid_argument("cantor_stage: fatness must be in (0, 1)");
  }
  std::vector<Segment> intervals{{0.0, kTwoPi}};
  for (int k = 0; k < depth; ++k) {
    const double remove = std::pow(fatness, k + 1);
    std::vector<Segment> next;
    next.reserve(2 * intervals.size());
    for (const Segment& s : intervals) {
      const double len = s.hi - s.lo;
      const double keep = 0.5 * len * (1.0 - remove);
      next.push_back({s.lo, s.lo + keep});
      next.push_back({s.hi - keep, s.hi});
    }
    intervals = std::move(next);
  }
  std::vector<Arc> arcs;
  arcs.reserve(intervals.size());
  for (const Segment& s : intervals) {
    arcs.push_back(Arc{s.lo, s.hi});
  }
  return ArcSet(std::move(arcs));
}

double cantor_stage_measure(int depth, double fatness) {
  double m = 1.0;
  for (int k = 0; k < depth; ++k) {
    m *= 1.0 - std::pow(fatness, k + 1);
  }
  return m;
}

}  // namespace smirnov

#include "smirnov/factorization.hpp"

#include <algorithm>
#include <cmath>

namespace smirnov {

namespace {
const Complex kI(0.0, 1.0);
}

RealSmirnovFn::RealSmirnovFn(InnerFunction inner, OuterFunction outer)
    : inner_(std::move(inner)),
      outer_(std::move(outer)),
      expr_(Expr::product({Expr::inner(inner_), Expr::outer(outer_)})) {}

RealSmirnovFn::RealSmirnovFn(InnerFunction inner, OuterFunction outer, Expr expr)
    : inner_(std::move(inner)), outer_(std::move(outer)), expr_(std::move(expr)) {}

Eigen::ArrayXcd RealSmirnovFn::boundary_values() const {
  const BoundaryGrid& w = outer_.logmod();
  return inner_.boundary_values(w) * outer_.boundary();
}

RealSmirnovFn koebe_of_inner(const InnerFunction& phi, int n) {
  if (phi.is_constant()) {
    throw std::invalid_argument("koebe_of_inner: inner factor must be non-constant");
  }
  // log|F| = log 4 - 2 log|1 - phi| on the circle; F(z) = -4/(1 - phi(z))^2.
  // Samples where phi hits 1 are floored at the quadrature cell average of the
  // integrable log singularity, log(pi/n) - 1.
  const double floor = kPi / (n * std::exp(1.0));
  BoundaryGrid probe = BoundaryGrid::zeros(n);
  const Eigen::ArrayXcd phib = phi.boundary_values(probe);
  Eigen::ArrayXcd w(n);
  for (int j = 0; j < n; ++j) {
    double d = std::abs(1.0 - phib[j]);
    if (!std::isfinite(d)) d = 1.0;  // atom sample, measure zero
    w[j] = std::log(4.0) - 2.0 * std::log(std::max(d, floor));
  }
  OuterFunction F(kPi, BoundaryGrid(std::move(w)));
  return RealSmirnovFn(phi, std::move(F), Expr::apply_K(Expr::inner(phi)));
}

Complex HelsonPair::reconstruct(Complex z) const {
  const Complex a = psi1.eval(z);
  const Complex b = psi2.eval(z);
  return kI * (a + b) / (a - b);
}

HelsonPair helson_decompose(const RationalFn& f) {
  const Poly num = poly_trim(f.num);
  const Poly den = poly_trim(f.den);
  if (poly_degree(den) < 0) {
    throw std::invalid_argument("helson_decompose: zero denominator");
  }

  // Boundary realness probe away from poles.
  for (int j = 0; j < 128; ++j) {
    const Complex zeta = std::polar(1.0, 2.0 * kPi * j / 128 + 0.0007);
    const Complex d = poly_eval(den, zeta);
    if (std::abs(d) < 1e-6) {
      continue;
    }
    const Complex v = poly_eval(num, zeta) / d;
    if (std::abs(v.imag()) > 1e-7 * std::max(1.0, std::abs(v))) {
      throw std::domain_error("helson_decompose: boundary values are not real");
    }
  }

  // (f - i)/(f + i) = (num - i den)/(num + i den) = psi2/psi1.
  Poly p = poly_add(num, den, 1.0, -kI);
  Poly q = poly_add(num, den, 1.0, kI);
  if (poly_degree(p) < 0 || poly_degree(q) < 0) {
    throw std::domain_error("helson_decompose: f is identically +-i, not real");
  }

  std::vector<Complex> zp, zq;
  for (const Complex& r : poly_roots(p)) {
    if (std::abs(r) < 1.0 - 1e-10) {
      zp.push_back(r);
    }
  }
  for (const Complex& r : poly_roots(q)) {
    if (std::abs(r) < 1.0 - 1e-10) {
      zq.push_back(r);
    }
  }

  // Relative primality: cancel zero pairs closer than 1e-8.
  for (auto it = zp.begin(); it != zp.end();) {
    auto jt = std::min_element(zq.begin(), zq.end(), [&](Complex a, Complex b) {
      return std::abs(a - *it) < std::abs(b - *it);
    });
    if (jt != zq.end() && std::abs(*jt - *it) < 1e-8) {
      zq.erase(jt);
      it = zp.erase(it);
    } else {
      ++it;
    }
  }

  auto to_inner = [](const std::vector<Complex>& roots) {
    std::vector<BlaschkeZero> zeros;
    int power = 0;
    for (const Complex& r : roots) {
      if (std::abs(r) < 1e-12) {
        ++power;
      } else {
        zeros.push_back(BlaschkeZero{r, 1});
      }
    }
    return InnerFunction(1.0, power, std::move(zeros), {});
  };

  InnerFunction psi1 = to_inner(zq);
  InnerFunction psi2 = to_inner(zp);

  // Attach the unimodular constant of psi2/psi1 = (f - i)/(f + i) to psi2.
  Complex ratio_const = 0.0;
  for (const Complex probe : {Complex(0.17, 0.06), Complex(-0.23, 0.31), Complex(0.05, -0.41)}) {
    const Complex qq = poly_eval(q, probe);
    const Complex b1 = psi1.eval(probe);
    const Complex b2 = psi2.eval(probe);
    if (std::abs(qq) > 1e-10 && std::abs(b1) > 1e-8 && std::abs(b2) > 1e-8) {
      ratio_const = (poly_eval(p, probe) / qq) * (b1 / b2);
      break;
    }
  }
  if (std::abs(std::abs(ratio_const) - 1.0) > 1e-7) {
    throw std::domain_error("helson_decompose: quotient of inner parts is not unimodular");
  }
  psi2 = psi2.times(InnerFunction::unimodular_constant(ratio_const / std::abs(ratio_const)));
  return HelsonPair{std::move(psi1), std::move(psi2)};
}

KoebeFactorization koebe_factor(const RealSmirnovFn& f) {
  const InnerFunction& I = f.inner();
  const OuterFunction& F = f.outer();
  const int n = f.grid_size();

  if (I.is_constant()) {
    // Take I' = i and F' = -i xi F: then K = K(i) = 2 and R = f / 2.
    Eigen::ArrayXcd w = F.logmod().values() - std::log(2.0);
    OuterFunction half(F.gamma() + std::arg(I.xi()), BoundaryGrid(std::move(w)));
    RealSmirnovFn outer_part(
        InnerFunction::one(), half,
        Expr::product({Expr::constant(0.5), f.expr()}));
    return KoebeFactorization{Expr::constant(2.0), std::move(outer_part)};
  }

  // R_f = -(1/4)(1 - I)^2 F.
  const double floor = kPi / (n * std::exp(1.0));
  BoundaryGrid probe = BoundaryGrid::zeros(n);
  const Eigen::ArrayXcd Ib = I.boundary_values(probe);
  Eigen::ArrayXcd w(n);
  for (int j = 0; j < n; ++j) {
    double d = std::abs(1.0 - Ib[j]);
    if (!std::isfinite(d)) d = 1.0;  // atom sample, measure zero
    w[j] = F.logmod().values()[j] + 2.0 * std::log(std::max(d, floor)) - std::log(4.0);
  }
  // gamma of R: arg(R(0)) ... R(0) = -(1 - I(0))^2 F(0) / 4.
  const Complex r0 = -0.25 * (1.0 - I.eval(0.0)) * (1.0 - I.eval(0.0)) *
                     std::polar(1.0, F.gamma());
  OuterFunction R_data(std::arg(r0), BoundaryGrid(std::move(w)));

  // R = -(1/4)(1 - I)^2 F = f / K(I), the second form staying exact whenever
  // f.expr() is.
  Expr R_expr = Expr::quotient(f.expr(), Expr::apply_K(Expr::inner(I)));

  RealSmirnovFn outer_part(InnerFunction::one(), std::move(R_data), std::move(R_expr));
  return KoebeFactorization{Expr::apply_K(Expr::inner(I)), std::move(outer_part)};
}

std::pair<RealSmirnovFn, RealSmirnovFn> sum_of_squares(const RealSmirnovFn& f) {
  const InnerFunction& I = f.inner();
  const OuterFunction& F = f.outer();
  const int n = f.grid_size();

  // Nonnegativity check on exact boundary samples.
  const Eigen::ArrayXcd fb = f.boundary_values();
  double scale = 0.0;
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(std::abs(fb[j]))) {
      scale = std::max(scale, std::abs(fb[j]));
    }
  }
  for (int j = 0; j < n; ++j) {
    const Complex v = fb[j];
    if (!std::isfinite(std::abs(v))) {
      continue;  // singular sample (atom or boundary pole)
    }
    if (v.real() < -1e-7 * scale || std::abs(v.imag()) > 1e-6 * scale) {
      throw std::domain_error("sum_of_squares: boundary values are not nonnegative");
    }
  }

  // The tree has no sum node, so (1 +- I)^2 is reached through Koebe:
  // K(-I) = 4I/(1+I)^2 and K(I) = -4I/(1-I)^2 give
  //   (1 + I)^2 = 4 I / K(-I)  and  (1 - I)^2 = -4 I / K(I).
  Expr Ie = Expr::inner(I);
  Expr mIe = Expr::product({Expr::constant(-1.0), Ie});
  Expr one_plus_sq = Expr::quotient(Expr::product({Expr::constant(4.0), Ie}),
                                    Expr::apply_K(mIe));
  Expr one_minus_sq = Expr::quotient(Expr::product({Expr::constant(-4.0), Ie}),
                                     Expr::apply_K(Ie));
  // g1^2 = (1/4)(1+I)^2 F, g2^2 = -(1/4)(1-I)^2 F; return g1, g2 as
  // sqrt-outer of those squares (branch cancels in the squares).
  Expr g1sq = Expr::product({Expr::constant(0.25), one_plus_sq,
                             Expr::quotient(f.expr(), Ie)});
  Expr g2sq = Expr::product({Expr::constant(-0.25), one_minus_sq,
                             Expr::quotient(f.expr(), Ie)});
  Expr g1e = Expr::sqrt_outer(g1sq);
  Expr g2e = Expr::sqrt_outer(g2sq);

  // Outer data: log|g1| = log|1 + I|/... on the grid, gamma from values at 0.
  const double floor = kPi / (n * std::exp(1.0));
  BoundaryGrid probe = BoundaryGrid::zeros(n);
  const Eigen::ArrayXcd Ib = I.boundary_values(probe);
  Eigen::ArrayXcd w1(n), w2(n);
  for (int j = 0; j < n; ++j) {
    double dp = std::abs(1.0 + Ib[j]);
    double dm = std::abs(1.0 - Ib[j]);
    if (!std::isfinite(dp)) dp = 1.0;
    if (!std::isfinite(dm)) dm = 1.0;
    const double wF = F.logmod().values()[j].real();
    w1[j] = std::log(std::max(dp, floor)) - std::log(2.0) + 0.5 * wF;
    w2[j] = std::log(std::max(dm, floor)) - std::log(2.0) + 0.5 * wF;
  }
  const double gF2 = OuterFunction(F.gamma(), F.logmod()).sqrt().gamma();
  const Complex g10 = 0.5 * (1.0 + I.eval(0.0)) * std::polar(1.0, gF2);
  const Complex g20 = 0.5 * kI * (1.0 - I.eval(0.0)) * std::polar(1.0, gF2);
  RealSmirnovFn g1f(InnerFunction::one(),
                    OuterFunction(std::arg(g10), BoundaryGrid(std::move(w1))), g1e);
  RealSmirnovFn g2f(InnerFunction::one(),
                    OuterFunction(std::arg(g20), BoundaryGrid(std::move(w2))), g2e);
  return {std::move(g1f), std::move(g2f)};
}

std::vector<ArcSet> bounded_arg_expand(const BoundaryGrid& v) {
  const int n = v.size();
  int max_level = 0;
  for (int j = 0; j < n; ++j) {
    const Complex c = v.values()[j];
    const double rounded = std::round(c.real());
    if (std::abs(c.imag()) > 1e-9 || std::abs(c.real() - rounded) > 1e-9 || rounded < 0) {
      throw std::domain_error("bounded_arg_expand: samples must be nonnegative integers");
    }
    max_level = std::max(max_level, static_cast<int>(rounded));
  }
  std::vector<ArcSet> levels;
  for (int level = 1; level <= max_level; ++level) {
    levels.push_back(level_set_arcs(v, level - 0.5));
  }
  return levels;
}

int winding_number(const Expr& f, double r, int samples) {
  double total = 0.0;
  Complex prev = f.eval(DiskPoint(Complex(r, 0.0))).value;
  for (int j = 1; j <= samples; ++j) {
    const Complex z = std::polar(r, 2.0 * kPi * j / samples);
    const Complex cur = f.eval(DiskPoint(z)).value;
    total += std::arg(cur / prev);  // increments stay below pi on a fine grid
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace smirnov

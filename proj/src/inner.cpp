#include "smirnov/inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smirnov {

namespace {

Complex blaschke_factor_at(const BlaschkeZero& zero, Complex z) {
  const Complex unit = std::abs(zero.a) / zero.a;
  const Complex base = unit * (zero.a - z) / (1.0 - std::conj(zero.a) * z);
  Complex out = 1.0;
  for (int k = 0; k < zero.multiplicity; ++k) {
    out *= base;
  }
  return out;
}

}  // namespace

InnerFunction::InnerFunction(Complex xi, int power, std::vector<BlaschkeZero> zeros,
                             std::vector<SingularAtom> atoms)
    : xi_(xi), power_(power), zeros_(std::move(zeros)), atoms_(std::move(atoms)) {
  if (std::abs(std::abs(xi_) - 1.0) > 1e-12) {
    throw std::invalid_argument("InnerFunction: |xi| must be 1");
  }
  xi_ /= std::abs(xi_);
  if (power_ < 0) {
    throw std::invalid_argument("InnerFunction: power must be >= 0");
  }
  for (auto& z : zeros_) {
    const double r = std::abs(z.a);
    if (!(r > 0.0) || r >= 1.0 || z.multiplicity <= 0) {
      throw std::invalid_argument("InnerFunction: Blaschke zeros must lie in the punctured disk");
    }
  }
  for (auto& a : atoms_) {
    if (std::abs(std::abs(a.zeta) - 1.0) > 1e-12 || !(a.mass > 0.0)) {
      throw std::invalid_argument("InnerFunction: atoms need |zeta| = 1 and mass > 0");
    }
    a.zeta /= std::abs(a.zeta);
  }
}

InnerFunction InnerFunction::unimodular_constant(Complex xi) {
  return InnerFunction(xi, 0, {}, {});
}

InnerFunction InnerFunction::monomial(int power) {
  return InnerFunction(1.0, power, {}, {});
}

InnerFunction InnerFunction::blaschke_factor(Complex a) {
  return InnerFunction(1.0, 0, {BlaschkeZero{a, 1}}, {});
}

InnerFunction InnerFunction::blaschke(std::vector<BlaschkeZero> zeros, Complex xi) {
  return InnerFunction(xi, 0, std::move(zeros), {});
}

InnerFunction InnerFunction::atomic(Complex zeta, double mass) {
  return InnerFunction(1.0, 0, {}, {SingularAtom{zeta, mass}});
}

int InnerFunction::zero_count() const {
  int n = 0;
  for (const auto& z : zeros_) {
    n += z.multiplicity;
  }
  return n;
}

double InnerFunction::total_singular_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) {
    m += a.mass;
  }
  return m;
}

double InnerFunction::origin_modulus() const {
  if (power_ > 0) {
    return 0.0;
  }
  double v = std::exp(-total_singular_mass());
  for (const auto& z : zeros_) {
    v *= std::pow(std::abs(z.a), z.multiplicity);
  }
  return v;
}

Complex InnerFunction::eval(Complex z) const {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw std::domain_error("InnerFunction::eval: |z| > 1");
  }
  for (const auto& a : atoms_) {
    if (chordal(z, a.zeta) < kPoleTol) {
      throw PoleError("InnerFunction::eval: at a singular atom", a.zeta);
    }
  }
  Complex out = xi_;
  for (int k = 0; k < power_; ++k) {
    out *= z;
  }
  for (const auto& zero : zeros_) {
    out *= blaschke_factor_at(zero, z);
  }
  Complex s = 0.0;
  for (const auto& a : atoms_) {
    s += a.mass * (a.zeta + z) / (a.zeta - z);
  }
  if (!atoms_.empty()) {
    out *= std::exp(-s);
  }
  return out;
}

Eigen::ArrayXcd InnerFunction::boundary_values(const BoundaryGrid& like) const {
  const int n = like.size();
  Eigen::ArrayXcd out(n);
  for (int j = 0; j < n; ++j) {
    const Complex zeta = like.zeta(j);
    bool at_atom = false;
    for (const auto& a : atoms_) {
      if (chordal(zeta, a.zeta) < kPoleTol) {
        at_atom = true;
        break;
      }
    }
    out[j] = at_atom ? Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)
                     : eval(zeta);
  }
  return out;
}

InnerFunction InnerFunction::times(const InnerFunction& other) const {
  std::vector<BlaschkeZero> zeros = zeros_;
  for (const auto& z : other.zeros_) {
    auto it = std::find_if(zeros.begin(), zeros.end(), [&](const BlaschkeZero& w) {
      return std::abs(w.a - z.a) == 0.0;
    });
    if (it != zeros.end()) {
      it->multiplicity += z.multiplicity;
    } else {
      zeros.push_back(z);
    }
  }
  std::vector<SingularAtom> atoms = atoms_;
  for (const auto& a : other.atoms_) {
    auto it = std::find_if(atoms.begin(), atoms.end(), [&](const SingularAtom& b) {
      return std::abs(b.zeta - a.zeta) == 0.0;
    });
    if (it != atoms.end()) {
      it->mass += a.mass;
    } else {
      atoms.push_back(a);
    }
  }
  return InnerFunction(xi_ * other.xi_, power_ + other.power_, std::move(zeros),
                       std::move(atoms));
}

std::pair<Poly, Poly> InnerFunction::to_rational() const {
  if (!atoms_.empty()) {
    throw std::invalid_argument("to_rational: singular part is not rational");
  }
  Poly num(1), den(1);
  num << xi_;
  den << 1.0;
  for (int k = 0; k < power_; ++k) {
    Poly z(2);
    z << 0.0, 1.0;
    num = poly_mul(num, z);
  }
  for (const auto& zero : zeros_) {
    for (int k = 0; k < zero.multiplicity; ++k) {
      Poly top(2), bot(2);
      top << (std::abs(zero.a) / zero.a) * zero.a, -(std::abs(zero.a) / zero.a);
      bot << 1.0, -std::conj(zero.a);
      num = poly_mul(num, top);
      den = poly_mul(den, bot);
    }
  }
  return {num, den};
}

InnerFunction rational_inner_from_bounded(const Poly& num_in, const Poly& den_in) {
  const Poly num = poly_trim(num_in);
  const Poly den = poly_trim(den_in);
  if (poly_degree(den) < 0 || poly_degree(num) < 0) {
    throw std::invalid_argument("rational_inner_from_bounded: zero polynomial");
  }

  // Boundary modulus check at 256 probe points.
  for (int j = 0; j < 256; ++j) {
    const Complex zeta = std::polar(1.0, 2.0 * kPi * j / 256 + 0.001);
    const Complex d = poly_eval(den, zeta);
    if (std::abs(d) < 1e-14) {
      continue;
    }
    const double mod = std::abs(poly_eval(num, zeta) / d);
    if (std::abs(mod - 1.0) > 1e-8) {
      throw std::domain_error("rational_inner_from_bounded: boundary modulus deviates from 1");
    }
  }

  std::vector<Complex> zn = poly_roots(num);
  std::vector<Complex> zd = poly_roots(den);

  // Poles inside the closed disk must cancel against numerator roots.
  for (const Complex& p : zd) {
    if (std::abs(p) < 1.0 + 1e-8) {
      auto it = std::min_element(zn.begin(), zn.end(), [&](Complex a, Complex b) {
        return std::abs(a - p) < std::abs(b - p);
      });
      if (it == zn.end() || std::abs(*it - p) > 1e-8) {
        throw std::domain_error("rational_inner_from_bounded: pole inside the closed disk");
      }
      zn.erase(it);
    }
  }

  int power = 0;
  std::vector<BlaschkeZero> zeros;
  for (const Complex& r : zn) {
    if (std::abs(r) < 1e-10) {
      ++power;
    } else if (std::abs(r) < 1.0 - 1e-10) {
      auto it = std::find_if(zeros.begin(), zeros.end(), [&](const BlaschkeZero& w) {
        return std::abs(w.a - r) < 1e-10;
      });
      if (it != zeros.end()) {
        ++it->multiplicity;
      } else {
        zeros.push_back(BlaschkeZero{r, 1});
      }
    } else {
      // An uncancelled root on or outside the circle contradicts inner-ness.
      throw std::domain_error("rational_inner_from_bounded: not inner (root on/outside the circle)");
    }
  }

  InnerFunction base(1.0, power, zeros, {});
  // Fix the unimodular constant at a probe point away from the zeros.
  Complex xi = 0.0;
  for (const Complex probe : {Complex(0.0, 0.0), Complex(0.31, 0.17), Complex(-0.22, 0.41)}) {
    const Complex b = base.eval(probe);
    const Complex d = poly_eval(den, probe);
    if (std::abs(b) > 1e-6 && std::abs(d) > 1e-12) {
      xi = poly_eval(num, probe) / d / b;
      break;
    }
  }
  if (std::abs(std::abs(xi) - 1.0) > 1e-8) {
    throw std::domain_error("rational_inner_from_bounded: constant is not unimodular");
  }
  InnerFunction result(xi / std::abs(xi), power, base.zeros(), {});

  // Pointwise cross-check of the recovered representation.
  for (int j = 0; j < 50; ++j) {
    const Complex z = std::polar(0.02 + 0.018 * j, 2.399963 * j);
    const Complex d = poly_eval(den, z);
    if (std::abs(d) < 1e-12) {
      continue;
    }
    if (std::abs(result.eval(z) - poly_eval(num, z) / d) > 1e-8) {
      throw std::domain_error("rational_inner_from_bounded: representation mismatch");
    }
  }
  return result;
}

}  // namespace smirnov

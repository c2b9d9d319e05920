#include "smirnov/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace smirnov {

namespace {
const Complex kI(0.0, 1.0);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

EvalResult infinity_result() {
  EvalResult r;
  r.value = Complex(kNaN, kNaN);
  r.at_infinity = true;
  return r;
}
}  // namespace

struct Expr::Node {
  ExprKind kind;
  std::vector<Expr> children;
  std::vector<Complex> poles;  // declared poles in the open disk
  std::vector<Complex> zeros;  // structural zeros in the open disk (best effort)

  // leaf payloads
  Complex constant{0.0, 0.0};
  std::optional<InnerFunction> inner;
  std::optional<OuterFunction> outer;
  std::optional<CayleyInnerFn> cayley;

  int exponent = 0;              // kIntPower
  double tail_sum_origin = 0.0;  // kTruncatedProduct

  void absorb_child_poles() {
    for (const Expr& c : children) {
      poles.insert(poles.end(), c.node_->poles.begin(), c.node_->poles.end());
    }
  }
  void absorb_child_zeros() {
    for (const Expr& c : children) {
      zeros.insert(zeros.end(), c.node_->zeros.begin(), c.node_->zeros.end());
    }
  }
};

Expr Expr::constant(Complex c) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kConstant;
  n->constant = c;
  return Expr(std::move(n));
}

Expr Expr::inner(InnerFunction f) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kInnerLeaf;
  for (int k = 0; k < f.power(); ++k) {
    n->zeros.push_back(0.0);
  }
  for (const auto& z : f.zeros()) {
    for (int k = 0; k < z.multiplicity; ++k) {
      n->zeros.push_back(z.a);
    }
  }
  n->inner = std::move(f);
  return Expr(std::move(n));
}

Expr Expr::outer(OuterFunction f) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kOuterLeaf;
  n->outer = std::move(f);
  return Expr(std::move(n));
}

Expr Expr::cayley(CayleyInnerFn f) {
  if (!(f.scale > 0.0)) {
    throw std::invalid_argument("Expr::cayley: scale must be positive");
  }
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kCayleyLeaf;  // zero-free in the open disk
  n->cayley = std::move(f);
  return Expr(std::move(n));
}

Expr Expr::cayley(ArcSet set, double scale) {
  return cayley(CayleyInnerFn{std::move(set), scale});
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) {
    return constant(1.0);
  }
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kProduct;
  n->children = std::move(factors);
  n->absorb_child_poles();
  n->absorb_child_zeros();
  return Expr(std::move(n));
}

Expr Expr::quotient(Expr num, Expr den) {
  if (den.kind() == ExprKind::kConstant && den.node_->constant == Complex(0.0, 0.0)) {
    throw std::invalid_argument("Expr::quotient: denominator is identically zero");
  }
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kQuotient;
  n->poles = den.node_->zeros;   // zeros of the denominator become poles
  n->zeros = num.node_->zeros;   // cancellations are not tracked
  n->children = {std::move(num), std::move(den)};
  n->absorb_child_poles();
  return Expr(std::move(n));
}

Expr Expr::ipow(Expr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kIntPower;
  n->exponent = exponent;
  if (exponent > 0) {
    n->zeros = base.node_->zeros;
  } else if (exponent < 0) {
    n->poles = base.node_->zeros;
  }
  n->children = {std::move(base)};
  n->absorb_child_poles();
  return Expr(std::move(n));
}

Expr Expr::sqrt_outer(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kSqrtOuter;
  n->children = {std::move(child)};
  n->absorb_child_poles();
  return Expr(std::move(n));
}

Expr Expr::apply_T(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kApplyT;  // zeros/poles of T(child) are not structural
  n->children = {std::move(child)};
  n->absorb_child_poles();
  return Expr(std::move(n));
}

Expr Expr::apply_T_inv(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kApplyTInv;
  n->children = {std::move(child)};
  n->absorb_child_poles();
  return Expr(std::move(n));
}

Expr Expr::apply_K(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kApplyK;
  n->zeros = child.node_->zeros;  // K(w) = 0 iff w = 0
  n->children = {std::move(child)};
  n->absorb_child_poles();
  return Expr(std::move(n));
}

Expr Expr::truncated_product(std::vector<Expr> factors, double tail_sum_origin) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::kTruncatedProduct;
  n->children = std::move(factors);
  n->tail_sum_origin = tail_sum_origin;
  n->absorb_child_poles();
  n->absorb_child_zeros();
  return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }

const std::vector<Complex>& Expr::poles() const { return node_->poles; }

namespace {

Complex product_fold(const std::vector<Complex>& vals, bool balanced) {
  if (!balanced || vals.size() < 4) {
    Complex acc = 1.0;
    for (Complex v : vals) {
      acc *= v;
    }
    return acc;
  }
  std::vector<Complex> layer = vals;
  while (layer.size() > 1) {
    std::vector<Complex> next;
    next.reserve((layer.size() + 1) / 2);
    for (size_t i = 0; i + 1 < layer.size(); i += 2) {
      next.push_back(layer[i] * layer[i + 1]);
    }
    if (layer.size() % 2) {
      next.push_back(layer.back());
    }
    layer = std::move(next);
  }
  return layer[0];
}

}  // namespace

EvalResult Expr::eval(DiskPoint z, const EvalOptions& opts) const {
  for (const Complex& p : node_->poles) {
    if (chordal(z.z, p) < opts.pole_tol) {
      throw PoleError("expr_eval: z within pole tolerance of a declared pole", p);
    }
  }

  const Node& n = *node_;
  EvalResult r;
  switch (n.kind) {
    case ExprKind::kConstant:
      r.value = n.constant;
      break;
    case ExprKind::kInnerLeaf:
      r.value = n.inner->eval(z.z);
      break;
    case ExprKind::kOuterLeaf:
      r.value = n.outer->eval(z);
      break;
    case ExprKind::kCayleyLeaf:
      r.value = cayley_eval(*n.cayley, z);
      break;
    case ExprKind::kProduct:
    case ExprKind::kTruncatedProduct: {
      std::vector<Complex> vals;
      vals.reserve(n.children.size());
      bool inf = false;
      for (const Expr& c : n.children) {
        EvalResult cr = c.eval(z, opts);
        r.tail_warning |= cr.tail_warning;
        r.tail_bound += cr.tail_bound;
        if (cr.at_infinity) {
          inf = true;
        } else {
          vals.push_back(cr.value);
        }
      }
      if (inf) {
        const bool killed = std::any_of(vals.begin(), vals.end(), [](Complex v) {
          return v == Complex(0.0, 0.0);
        });
        EvalResult out = infinity_result();
        out.at_infinity = !killed;  // 0 * inf is indeterminate: NaN, not inf
        out.tail_warning = r.tail_warning;
        out.tail_bound = r.tail_bound;
        return out;
      }
      r.value = product_fold(vals, opts.balanced_products);
      if (n.kind == ExprKind::kTruncatedProduct && n.tail_sum_origin > 0.0) {
        // Schwarz-type transfer of the origin tail to z, then through T:
        //   sum_k |1 - phi_k(z)| <= (1+|z|)/(1-|z|) sum_k |1 - phi_k(0)|,
        //   |1 - T(w)| = |1-i| |1-w| / |1+iw|,  |1+iw| >= sqrt(2) - |1-w|.
        const double s = n.tail_sum_origin * (1.0 + z.abs()) /
                         std::max(1e-15, 1.0 - z.abs());
        double bound = std::numeric_limits<double>::infinity();
        if (s < 0.7) {
          const double mapped = std::sqrt(2.0) * s / (std::sqrt(2.0) - s);
          bound = std::abs(r.value) * std::expm1(mapped);
        }
        r.tail_bound += bound;
        r.tail_warning |= !(bound <= opts.tail_tol);
      }
      break;
    }
    case ExprKind::kQuotient: {
      EvalResult num = n.children[0].eval(z, opts);
      EvalResult den = n.children[1].eval(z, opts);
      r.tail_warning = num.tail_warning || den.tail_warning;
      r.tail_bound = num.tail_bound + den.tail_bound;
      if (den.at_infinity) {
        r.value = num.at_infinity ? Complex(kNaN, kNaN) : Complex(0.0, 0.0);
        r.at_infinity = false;
        break;
      }
      if (num.at_infinity) {
        r.at_infinity = true;
        r.value = Complex(kNaN, kNaN);
        break;
      }
      if (std::abs(den.value) < 1e-300) {
        throw PoleError("expr_eval: quotient denominator vanished", z.z);
      }
      r.value = num.value / den.value;
      break;
    }
    case ExprKind::kIntPower: {
      EvalResult c = n.children[0].eval(z, opts);
      r.tail_warning = c.tail_warning;
      r.tail_bound = c.tail_bound;
      if (c.at_infinity) {
        if (n.exponent > 0) {
          return infinity_result();
        }
        r.value = (n.exponent == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        break;
      }
      const int e = std::abs(n.exponent);
      Complex acc = 1.0;
      for (int k = 0; k < e; ++k) {
        acc *= c.value;
      }
      if (n.exponent < 0) {
        if (std::abs(acc) < 1e-300) {
          throw PoleError("expr_eval: negative power at a zero", z.z);
        }
        acc = 1.0 / acc;
      }
      r.value = acc;
      break;
    }
    case ExprKind::kSqrtOuter: {
      EvalResult c = n.children[0].eval(z, opts);
      if (c.at_infinity) {
        return infinity_result();
      }
      r = c;
      r.value = std::sqrt(c.value);  // pointwise principal branch
      break;
    }
    case ExprKind::kApplyT: {
      EvalResult c = n.children[0].eval(z, opts);
      r.tail_warning = c.tail_warning;
      r.tail_bound = c.tail_bound;
      if (c.at_infinity) {
        r.value = -kI;  // T(inf) = -i
        break;
      }
      if (chordal(c.value, kI) < opts.pole_tol) {
        return infinity_result();  // T(i) = inf
      }
      r.value = mobius_T(c.value);
      break;
    }
    case ExprKind::kApplyTInv: {
      EvalResult c = n.children[0].eval(z, opts);
      r.tail_warning = c.tail_warning;
      r.tail_bound = c.tail_bound;
      if (c.at_infinity) {
        r.value = kI;  // T^{-1}(inf) = i
        break;
      }
      if (chordal(c.value, -kI) < opts.pole_tol) {
        return infinity_result();
      }
      r.value = mobius_T_inv(c.value);
      break;
    }
    case ExprKind::kApplyK: {
      EvalResult c = n.children[0].eval(z, opts);
      r.tail_warning = c.tail_warning;
      r.tail_bound = c.tail_bound;
      if (c.at_infinity) {
        r.value = 0.0;  // K(w) -> 0 as w -> inf
        break;
      }
      if (chordal(c.value, 1.0) < opts.pole_tol) {
        return infinity_result();  // K(1) = inf
      }
      r.value = koebe_K(c.value);
      break;
    }
  }
  return r;
}

}  // namespace smirnov

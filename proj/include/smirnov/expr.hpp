#pragma once

#include <memory>
#include <vector>

#include "smirnov/cayley.hpp"
#include "smirnov/inner.hpp"
#include "smirnov/outer.hpp"

namespace smirnov {

enum class ExprKind {
  kConstant,
  kInnerLeaf,
  kOuterLeaf,
  kCayleyLeaf,
  kProduct,
  kQuotient,
  kIntPower,
  kSqrtOuter,
  kApplyT,
  kApplyTInv,
  kApplyK,
  kTruncatedProduct,
};

struct EvalOptions {
  double pole_tol = kPoleTol;
  // Pairwise-balanced multiplication for long products (keeps rounding growth
  // logarithmic in the factor count).
  bool balanced_products = false;
  double tail_tol = 1e-8;  // tail bounds above this set the warning flag
};

struct EvalResult {
  Complex value{0.0, 0.0};
  bool at_infinity = false;   // value on the Riemann sphere is infinity
  bool tail_warning = false;  // truncated product tail bound exceeded tail_tol
  double tail_bound = 0.0;
};

// Immutable expression tree over inner/outer/Cayley leaves.  Poles inside the
// disk are collected structurally at construction time; evaluation refuses
// points within pole_tol (chordal) of a declared pole and reports mid-tree
// infinities through the at_infinity flag instead of overflowing.
class Expr {
 public:
  Expr() : Expr(constant(0.0)) {}

  static Expr constant(Complex c);
  static Expr inner(InnerFunction f);
  static Expr outer(OuterFunction f);
  static Expr cayley(CayleyInnerFn f);
  static Expr cayley(ArcSet set, double scale = 1.0);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(Expr num, Expr den);
  static Expr ipow(Expr base, int exponent);
  // Pointwise principal square root of a zero-free child; the branch is
  // pointwise, so only squares of the result are branch-independent.
  static Expr sqrt_outer(Expr child);
  static Expr apply_T(Expr child);
  static Expr apply_T_inv(Expr child);
  static Expr apply_K(Expr child);
  // Partial product with the tail_sum_origin = sum over dropped factors of
  // |1 - phi_n(0)|; drives the evaluation-time tail bound.
  static Expr truncated_product(std::vector<Expr> factors, double tail_sum_origin);

  ExprKind kind() const;
  // Declared poles inside the open disk (best effort from leaf data; runtime
  // guards still catch vanishing denominators elsewhere).
  const std::vector<Complex>& poles() const;

  EvalResult eval(DiskPoint z, const EvalOptions& opts = {}) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline EvalResult expr_eval(const Expr& e, DiskPoint z, const EvalOptions& opts = {}) {
  return e.eval(z, opts);
}

}  // namespace smirnov

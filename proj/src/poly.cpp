#include "smirnov/poly.hpp"

#include <Eigen/Eigenvalues>

namespace smirnov {

Complex poly_eval(const Poly& p, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) {
    acc = acc * z + p[k];
  }
  return acc;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c = Poly::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

Poly poly_add(const Poly& a, const Poly& b, Complex ca, Complex cb) {
  Poly c = Poly::Zero(std::max(a.size(), b.size()));
  c.head(a.size()) += ca * a;
  c.head(b.size()) += cb * b;
  return c;
}

Poly poly_scale(const Poly& a, Complex c) { return c * a; }

int poly_degree(const Poly& p, double tol) {
  const double scale = p.cwiseAbs().maxCoeff();
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) {
    if (std::abs(p[k]) > tol * scale) {
      return static_cast<int>(k);
    }
  }
  return -1;  // zero polynomial
}

Poly poly_trim(const Poly& p, double tol) {
  const int d = poly_degree(p, tol);
  if (d < 0) {
    return Poly::Zero(1);
  }
  return p.head(d + 1);
}

std::vector<Complex> poly_roots(const Poly& p_in) {
  const Poly p = poly_trim(p_in);
  const int d = static_cast<int>(p.size()) - 1;
  if (d <= 0) {
    return {};
  }
  if (d > 64) {
    throw std::invalid_argument("poly_roots: degree > 64 unsupported");
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    companion(k, d - 1) = -p[k] / p[d];
    if (k + 1 < d) {
      companion(k + 1, k) = 1.0;
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(d);
  for (int k = 0; k < d; ++k) {
    roots[k] = es.eigenvalues()[k];
  }
  return roots;
}

}  // namespace smirnov

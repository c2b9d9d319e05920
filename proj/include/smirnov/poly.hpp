#pragma once

#include <Eigen/Dense>
#include <vector>

#include "smirnov/complex_plane.hpp"

namespace smirnov {

// Dense polynomials with complex coefficients in ascending order:
// p = c[0] + c[1] z + ... + c[d] z^d.
using Poly = Eigen::VectorXcd;

Complex poly_eval(const Poly& p, Complex z);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b, Complex ca = 1.0, Complex cb = 1.0);
Poly poly_scale(const Poly& a, Complex c);

// Degree after trimming trailing coefficients below tol * max|c|.
int poly_degree(const Poly& p, double tol = 1e-14);
Poly poly_trim(const Poly& p, double tol = 1e-14);

// All roots of p via the companion-matrix eigenvalue method (degree <= 64).
std::vector<Complex> poly_roots(const Poly& p);

}  // namespace smirnov

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace smirnov {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Evaluations closer than this to a pole (chordal metric) raise PoleError
// instead of returning huge values.
inline constexpr double kPoleTol = 1e-9;

// Deepest radius at which grid-based kernel quadrature is considered resolved
// (at the default grid size the Poisson kernel is under-resolved beyond it).
inline constexpr double kRMax = 0.999;

// Chordal distance on the Riemann sphere:
//   d(a, b) = 2|a - b| / (sqrt(1 + |a|^2) sqrt(1 + |b|^2)).
double chordal(Complex a, Complex b);

class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, Complex where);
  Complex where() const { return where_; }

 private:
  Complex where_;
};

// A point of the closed unit disk; |z| = 1 exactly is allowed for boundary
// work, interior operations additionally enforce their own radius caps.
struct DiskPoint {
  Complex z;

  DiskPoint(Complex w);  // implicit on purpose; validates |w| <= 1
  DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

  double abs() const { return std::abs(z); }
};

// T(z) = i (1 - iz)/(1 + iz).  Maps the disk onto the upper half plane and
// the circle (minus +-i) onto the real line; fixes +-1; pole at i.
Complex mobius_T(Complex z);

// T^{-1}(z) = i (z - i)/(z + i).  Pole at -i.
Complex mobius_T_inv(Complex z);

// K(z) = -4 z/(1 - z)^2.  Univalent from the disk onto the complement of the
// half line [1, inf); K >= 1 a.e. on the circle.  Pole at 1.
Complex koebe_K(Complex z);

// tan(pi/2 (1/2 - m)), the origin value of the inner factor attached to a set
// of measure m, and its inverse.  Shared by the cayley and products modules.
double origin_value_from_measure(double m);
double measure_from_origin_value(double value);

}  // namespace smirnov

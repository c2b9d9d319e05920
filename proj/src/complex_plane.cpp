#include "smirnov/complex_plane.hpp"

#include <cmath>

namespace smirnov {

double chordal(Complex a, Complex b) {
  return 2.0 * std::abs(a - b) /
         (std::sqrt(1.0 + std::norm(a)) * std::sqrt(1.0 + std::norm(b)));
}

PoleError::PoleError(const std::string& what, Complex where)
    : std::runtime_error(what), where_(where) {}

DiskPoint::DiskPoint(Complex w) : z(w) {
  if (!(std::abs(w) <= 1.0 + 1e-12)) {
    throw std::domain_error("DiskPoint: |z| > 1");
  }
}

namespace {
const Complex kI(0.0, 1.0);
}

Complex mobius_T(Complex z) {
  if (chordal(z, kI) < kPoleTol) {
    throw PoleError("mobius_T: pole at i", kI);
  }
  return kI * (1.0 - kI * z) / (1.0 + kI * z);
}

Complex mobius_T_inv(Complex z) {
  if (chordal(z, -kI) < kPoleTol) {
    throw PoleError("mobius_T_inv: pole at -i", -kI);
  }
  return kI * (z - kI) / (z + kI);
}

Complex koebe_K(Complex z) {
  if (chordal(z, 1.0) < kPoleTol) {
    throw PoleError("koebe_K: pole at 1", 1.0);
  }
  const Complex d = 1.0 - z;
  return -4.0 * z / (d * d);
}

double origin_value_from_measure(double m) {
  return std::tan(0.5 * kPi * (0.5 - m));
}

double measure_from_origin_value(double value) {
  return 0.5 - (2.0 / kPi) * std::atan(value);
}

}  // namespace smirnov

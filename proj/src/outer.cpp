#include "smirnov/outer.hpp"

#include <cmath>

namespace smirnov {

OuterFunction::OuterFunction(double gamma, BoundaryGrid logmod)
    : gamma_(gamma), logmod_(std::move(logmod)) {
  if (!logmod_.is_real()) {
    throw std::invalid_argument("OuterFunction: log-modulus must be real-valued");
  }
  if (!logmod_.values().real().isFinite().all()) {
    throw std::invalid_argument("OuterFunction: log-modulus samples must be finite");
  }
}

OuterFunction OuterFunction::unit(int n) {
  return OuterFunction(0.0, BoundaryGrid::zeros(n));
}

OuterFunction OuterFunction::constant(Complex c, int n) {
  if (c == Complex(0.0, 0.0)) {
    throw std::invalid_argument("OuterFunction::constant: outer functions are zero-free");
  }
  Eigen::ArrayXcd w = Eigen::ArrayXcd::Constant(n, std::log(std::abs(c)));
  return OuterFunction(std::arg(c), BoundaryGrid(std::move(w)));
}

Complex OuterFunction::eval(DiskPoint z) const {
  return std::polar(1.0, gamma_) * std::exp(herglotz_extend(logmod_, z));
}

Eigen::ArrayXcd OuterFunction::boundary() const {
  const Eigen::ArrayXd w = logmod_.real_values();
  const Eigen::ArrayXd wt = conjugate(logmod_).real_values();
  const int n = logmod_.size();
  Eigen::ArrayXcd out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = std::polar(std::exp(w[j]), wt[j] + gamma_);
  }
  return out;
}

OuterFunction OuterFunction::sqrt() const {
  // Canonical branch: halve gamma into (-pi/2, pi/2].
  double g = std::remainder(gamma_, 2.0 * kPi);
  if (g <= -kPi) {
    g += 2.0 * kPi;
  }
  return OuterFunction(0.5 * g, BoundaryGrid(logmod_.values() * 0.5));
}

OuterFunction OuterFunction::times(const OuterFunction& other) const {
  if (grid_size() != other.grid_size()) {
    throw std::invalid_argument("OuterFunction::times: grid sizes differ");
  }
  return OuterFunction(gamma_ + other.gamma_,
                       BoundaryGrid(logmod_.values() + other.logmod_.values()));
}

BoundaryGrid logabs_one_minus_zeta(int n) {
  Eigen::ArrayXcd w(n);
  w[0] = std::log(kPi / n) - 1.0;  // cell average of log|1 - e^{i theta}| near 0
  for (int j = 1; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    w[j] = std::log(2.0 * std::abs(std::sin(0.5 * theta)));
  }
  return BoundaryGrid(std::move(w));
}

}  // namespace smirnov

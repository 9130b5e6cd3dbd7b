#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liquiddrop {

inline constexpr double kPi = std::numbers::pi;

/// Volume of the unit ball in R^n, pi^{n/2} / Gamma(n/2 + 1).
inline double unit_ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be >= 1");
  return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

/// Surface measure of the unit sphere in R^n, n * omega_n.
inline double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

// Ambient dimension with its unit-ball constants. Valid range [3, 10]:
// below 3 the Newton kernel changes character, above 10 nothing here is
// exercised.
struct Dimension {
  int n = 3;
  double unitBallVolume = 0.0;
  double unitSphereArea = 0.0;

  explicit Dimension(int n_) : n(n_) {
    if (n < 3 || n > 10) throw std::invalid_argument("Dimension: n must lie in [3, 10]");
    unitBallVolume = unit_ball_volume(n);
    unitSphereArea = unit_sphere_area(n);
  }
};

/// \int_0^pi sin^k(t) dt = sqrt(pi) Gamma((k+1)/2) / Gamma(k/2 + 1).
inline double sin_power_integral(int k) {
  if (k < 0) throw std::invalid_argument("sin_power_integral: k must be >= 0");
  return std::sqrt(kPi) * std::tgamma(0.5 * (k + 1)) / std::tgamma(0.5 * k + 1.0);
}

}  // namespace liquiddrop

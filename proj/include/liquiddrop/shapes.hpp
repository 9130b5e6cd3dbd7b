#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liquiddrop/dimension.hpp"
#include "liquiddrop/quadrature.hpp"
#include "liquiddrop/spherical_harmonics.hpp"

namespace liquiddrop::shapes {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

// ---------------------------------------------------------------------------
// Radially symmetric sets: a disjoint union of spherical shells.
// ---------------------------------------------------------------------------

class RadialSet {
 public:
  RadialSet(int n, std::vector<std::pair<double, double>> intervals)
      : dim_(n), intervals_(std::move(intervals)) {
    double prev = -1.0;
    for (const auto& [a, b] : intervals_) {
      if (!(a >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("RadialSet: radii must be finite and nonnegative");
      if (!(a > prev) || !(b > a))
        throw std::invalid_argument("RadialSet: intervals must be sorted, disjoint, increasing");
      prev = b;
    }
  }

  int n() const { return dim_.n; }
  const Dimension& dim() const { return dim_; }
  const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  double max_radius() const { return intervals_.empty() ? 0.0 : intervals_.back().second; }

  double volume() const {
    double acc = 0.0;
    for (const auto& [a, b] : intervals_)
      acc += std::pow(b, dim_.n) - std::pow(a, dim_.n);
    return dim_.unitBallVolume * acc;
  }

  // An inner sphere of radius 0 is not boundary and contributes nothing.
  double perimeter() const {
    double acc = 0.0;
    for (const auto& [a, b] : intervals_) {
      if (a > 0.0) acc += std::pow(a, dim_.n - 1);
      acc += std::pow(b, dim_.n - 1);
    }
    return dim_.unitSphereArea * acc;
  }

  bool contains(double radius) const {
    for (const auto& [a, b] : intervals_)
      if (radius >= a && radius <= b) return true;
    return false;
  }

  RadialSet scaled(double s) const {
    if (!(s > 0.0)) throw std::domain_error("RadialSet::scaled: factor must be positive");
    std::vector<std::pair<double, double>> out;
    out.reserve(intervals_.size());
    for (const auto& [a, b] : intervals_) out.emplace_back(s * a, s * b);
    return RadialSet(dim_.n, std::move(out));
  }

 private:
  Dimension dim_;
  std::vector<std::pair<double, double>> intervals_;
};

inline RadialSet unit_ball(int n) { return RadialSet(n, {{0.0, 1.0}}); }

/// The annulus B_R \ B_eps with R = (1 + eps^n)^{1/n}; volume equals
/// omega_n by construction.
inline RadialSet annulus_family(double eps, int n) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("annulus_family: eps must lie in (0,1)");
  const double outer = std::exp(std::log1p(std::pow(eps, n)) / n);
  return RadialSet(n, {{eps, outer}});
}

inline RadialSet rescale_to_unit_volume(const RadialSet& set) {
  const double vol = set.volume();
  if (!(vol > 0.0)) throw std::domain_error("rescale_to_unit_volume: empty set");
  return set.scaled(std::pow(set.dim().unitBallVolume / vol, 1.0 / set.n()));
}

// ---------------------------------------------------------------------------
// Tensor quadrature grid on S^2: Gauss-Legendre in cos(theta), uniform
// azimuth. Weights sum to 4 pi.
// ---------------------------------------------------------------------------

struct SphereGrid {
  int nTheta = 64;
  int nPhi = 128;
  std::vector<double> t;        // cos(theta), per polar node
  std::vector<double> tWeight;  // GL weights, sum 2
  std::vector<double> phi;      // azimuth nodes

  SphereGrid(int nTheta_, int nPhi_) : nTheta(nTheta_), nPhi(nPhi_) {
    if (nTheta < 4 || nPhi < 8) throw std::invalid_argument("SphereGrid: grid too coarse");
    const GaussRule& rule = gauss_legendre(nTheta);
    t = rule.nodes;
    tWeight = rule.weights;
    phi.resize(nPhi);
    for (int k = 0; k < nPhi; ++k) phi[k] = 2.0 * kPi * k / nPhi;
  }

  int node_count() const { return nTheta * nPhi; }
  double node_weight(int i) const { return tWeight[i / nPhi] * (2.0 * kPi / nPhi); }
  double node_t(int i) const { return t[i / nPhi]; }
  double node_phi(int i) const { return phi[i % nPhi]; }
};

// ---------------------------------------------------------------------------
// Star-shaped surfaces in R^3: r(omega) = r0 (1 + sum c_{l,m} Y_{l,m}).
// ---------------------------------------------------------------------------

class StarSurface {
 public:
  StarSurface(int maxDegree, double r0, std::vector<double> coeffs, int nTheta = 64,
              int nPhi = 128)
      : L_(maxDegree), r0_(r0), coeffs_(std::move(coeffs)), grid_(nTheta, nPhi) {
    if (L_ < 0) throw std::invalid_argument("StarSurface: maxDegree must be >= 0");
    if (!(r0_ > 0.0)) throw std::invalid_argument("StarSurface: r0 must be positive");
    if (static_cast<int>(coeffs_.size()) != sph_count(L_))
      throw std::invalid_argument("StarSurface: coefficient vector has wrong size");
    build_cache();
  }

  int max_degree() const { return L_; }
  double r0() const { return r0_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const SphereGrid& grid() const { return grid_; }

  /// Radius along direction (t = cos theta, phi); exact, not interpolated.
  double radius(double t, double phi) const {
    SphWorkspace& ws = sph_thread_workspace();
    static thread_local std::vector<double> values;
    values.resize(coeffs_.size());
    sph_evaluate(L_, t, phi, ws, values.data());
    double sum = 1.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) sum += coeffs_[k] * values[k];
    return r0_ * sum;
  }

  double volume() const {
    double acc = 0.0;
    for (int i = 0; i < grid_.node_count(); ++i)
      acc += grid_.node_weight(i) * nodeR_[i] * nodeR_[i] * nodeR_[i];
    return acc / 3.0;
  }

  double perimeter() const {
    double acc = 0.0;
    for (int i = 0; i < grid_.node_count(); ++i) acc += areaElement_[i];
    return acc;
  }

  Vec3 barycenter() const {
    Vec3 acc{0.0, 0.0, 0.0};
    for (int i = 0; i < grid_.node_count(); ++i) {
      const double w = grid_.node_weight(i) * 0.25 * std::pow(nodeR_[i], 4);
      acc = acc + w * direction(i);
    }
    return (1.0 / volume()) * acc;
  }

  /// Strict upper bound for r over the whole sphere (grid max plus margin).
  double bounding_radius() const { return rBound_; }

  int node_count() const { return grid_.node_count(); }
  double node_radius(int i) const { return nodeR_[i]; }
  /// Boundary point at node i.
  Vec3 node_position(int i) const { return nodeR_[i] * direction(i); }
  /// Outward unit normal at node i.
  const Vec3& node_normal(int i) const { return normal_[i]; }
  /// Surface measure carried by node i (area element times quadrature weight).
  double node_area(int i) const { return areaElement_[i]; }
  Vec3 direction(int i) const {
    const double t = grid_.node_t(i), p = grid_.node_phi(i);
    const double s = std::sqrt(1.0 - t * t);
    return {s * std::cos(p), s * std::sin(p), t};
  }

  StarSurface with_grid(int nTheta, int nPhi) const {
    return StarSurface(L_, r0_, coeffs_, nTheta, nPhi);
  }

  StarSurface scaled(double s) const {
    if (!(s > 0.0)) throw std::domain_error("StarSurface::scaled: factor must be positive");
    return StarSurface(L_, s * r0_, coeffs_, grid_.nTheta, grid_.nPhi);
  }

 private:
  void build_cache() {
    const int count = grid_.node_count();
    nodeR_.resize(count);
    normal_.resize(count);
    areaElement_.resize(count);
    SphWorkspace ws;
    std::vector<double> values(coeffs_.size()), dth(coeffs_.size()), dph(coeffs_.size());
    double rMax = 0.0;
    for (int i = 0; i < count; ++i) {
      const double t = grid_.node_t(i), phi = grid_.node_phi(i);
      const double sinTheta = std::sqrt(1.0 - t * t);
      sph_evaluate(L_, t, phi, ws, values.data(), dth.data(), dph.data());
      double f = 1.0, fTheta = 0.0, fPhi = 0.0;
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        f += coeffs_[k] * values[k];
        fTheta += coeffs_[k] * dth[k];
        fPhi += coeffs_[k] * dph[k];
      }
      const double r = r0_ * f;
      if (!(r > 0.0)) throw std::domain_error("StarSurface: radius must stay positive");
      const double rTheta = r0_ * fTheta;
      const double rPhiOverSin = r0_ * fPhi / sinTheta;
      nodeR_[i] = r;
      rMax = std::max(rMax, r);

      // x = r(omega) omega; dA = r sqrt(r^2 + |grad_S r|^2) dOmega and the
      // outward normal is (r omega - grad_S r) / |...|.
      const double gradSq = rTheta * rTheta + rPhiOverSin * rPhiOverSin;
      const double root = std::sqrt(r * r + gradSq);
      areaElement_[i] = grid_.node_weight(i) * r * root;

      const double cosT = t, sinT = sinTheta;
      const double cosP = std::cos(phi), sinP = std::sin(phi);
      const Vec3 eR{sinT * cosP, sinT * sinP, cosT};
      const Vec3 eTheta{cosT * cosP, cosT * sinP, -sinT};
      const Vec3 ePhi{-sinP, cosP, 0.0};
      Vec3 nu{r * eR[0] - rTheta * eTheta[0] - rPhiOverSin * ePhi[0],
              r * eR[1] - rTheta * eTheta[1] - rPhiOverSin * ePhi[1],
              r * eR[2] - rTheta * eTheta[2] - rPhiOverSin * ePhi[2]};
      nu = (1.0 / root) * nu;
      normal_[i] = nu;
    }
    rBound_ = rMax * 1.05;
  }

  int L_;
  double r0_;
  std::vector<double> coeffs_;
  SphereGrid grid_;
  std::vector<double> nodeR_;
  std::vector<Vec3> normal_;
  std::vector<double> areaElement_;
  double rBound_ = 0.0;
};

inline StarSurface rescale_to_unit_volume(const StarSurface& s) {
  const double vol = s.volume();
  if (!(vol > 0.0)) throw std::domain_error("rescale_to_unit_volume: degenerate surface");
  return s.scaled(std::cbrt(unit_ball_volume(3) / vol));
}

/// Ball of radius r0 in the star representation.
inline StarSurface star_ball(double r0 = 1.0, int nTheta = 64, int nPhi = 128) {
  return StarSurface(0, r0, std::vector<double>(1, 0.0), nTheta, nPhi);
}

/// Single-mode perturbation r = 1 + amplitude Y_{l,0}, rescaled to unit
/// volume.
inline StarSurface perturbed_ball(int l, double amplitude, int maxDegree = 4, int gridRes = 64) {
  if (l < 2 || l > maxDegree)
    throw std::invalid_argument("perturbed_ball: need 2 <= l <= maxDegree");
  std::vector<double> coeffs(sph_count(maxDegree), 0.0);
  coeffs[sph_index(l, 0)] = amplitude;
  StarSurface raw(maxDegree, 1.0, std::move(coeffs), gridRes, 2 * gridRes);
  return rescale_to_unit_volume(raw);
}

/// Projects an arbitrary positive radius function onto the harmonic basis.
inline StarSurface project_star_surface(const std::function<double(double, double)>& radiusFn,
                                        int maxDegree, int nTheta = 64, int nPhi = 128) {
  SphereGrid grid(nTheta, nPhi);
  SphWorkspace ws;
  std::vector<double> values(sph_count(maxDegree));
  std::vector<double> proj(sph_count(maxDegree), 0.0);
  double mean = 0.0;
  for (int i = 0; i < grid.node_count(); ++i) {
    const double r = radiusFn(grid.node_t(i), grid.node_phi(i));
    mean += grid.node_weight(i) * r;
  }
  const double r0 = mean / (4.0 * kPi);
  for (int i = 0; i < grid.node_count(); ++i) {
    const double f = radiusFn(grid.node_t(i), grid.node_phi(i)) / r0 - 1.0;
    sph_evaluate(maxDegree, grid.node_t(i), grid.node_phi(i), ws, values.data());
    for (int k = 0; k < sph_count(maxDegree); ++k)
      proj[k] += grid.node_weight(i) * f * values[k];
  }
  proj[0] = 0.0;  // constant part already captured by r0
  return StarSurface(maxDegree, r0, std::move(proj), nTheta, nPhi);
}

// Gram-matrix deviation from identity for the harmonic basis on a grid;
// orthonormality self-test support.
inline double harmonic_gram_residual(int maxDegree, const SphereGrid& grid) {
  const int count = sph_count(maxDegree);
  std::vector<double> gram(static_cast<std::size_t>(count) * count, 0.0);
  SphWorkspace ws;
  std::vector<double> values(count);
  for (int i = 0; i < grid.node_count(); ++i) {
    sph_evaluate(maxDegree, grid.node_t(i), grid.node_phi(i), ws, values.data());
    const double w = grid.node_weight(i);
    for (int a = 0; a < count; ++a)
      for (int b = a; b < count; ++b) gram[a * count + b] += w * values[a] * values[b];
  }
  double worst = 0.0;
  for (int a = 0; a < count; ++a)
    for (int b = a; b < count; ++b)
      worst = std::max(worst, std::abs(gram[a * count + b] - (a == b ? 1.0 : 0.0)));
  return worst;
}

}  // namespace liquiddrop::shapes

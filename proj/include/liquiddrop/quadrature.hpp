#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "liquiddrop/dimension.hpp"

namespace liquiddrop {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule by Newton iteration on P_n (NR-style), cached per order.
inline const GaussRule& gauss_legendre(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");

  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[order - 1 - i] = rule.weights[i];
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

template <typename F>
double integrate_gl(const F& f, double a, double b, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

// Adaptive Gauss-Legendre: compare one panel against its two halves and
// recurse where they disagree. errorOut, when given, accumulates the
// last-level discrepancies.
template <typename F>
double integrate_adaptive(const F& f, double a, double b, double relTol, double absTol,
                          int order = 12, int maxDepth = 28, double* errorOut = nullptr) {
  struct Frame {
    double a, b, whole;
    int depth;
  };
  double whole = integrate_gl(f, a, b, order);
  std::vector<Frame> stack{{a, b, whole, 0}};
  double total = 0.0, errAcc = 0.0;
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    double m = 0.5 * (fr.a + fr.b);
    double left = integrate_gl(f, fr.a, m, order);
    double right = integrate_gl(f, m, fr.b, order);
    double diff = std::abs(left + right - fr.whole);
    if (diff <= absTol + relTol * std::abs(left + right) || fr.depth >= maxDepth) {
      total += left + right;
      errAcc += diff;
    } else {
      stack.push_back({fr.a, m, left, fr.depth + 1});
      stack.push_back({m, fr.b, right, fr.depth + 1});
    }
  }
  if (errorOut) *errorOut += errAcc;
  return total;
}

/// Breakpoints of [a, b] grading dyadically toward `a`; first panel has
/// length (b-a) * 2^-(count).
inline std::vector<double> graded_breakpoints_toward_start(double a, double b, int count) {
  std::vector<double> pts;
  pts.push_back(a);
  double len = b - a;
  for (int k = count; k >= 1; --k) pts.push_back(a + len * std::ldexp(1.0, -k));
  pts.push_back(b);
  // ldexp duplicates nothing, but guard against degenerate spans
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <typename F>
double integrate_graded(const F& f, const std::vector<double>& breakpoints, int order) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    acc += integrate_gl(f, breakpoints[i], breakpoints[i + 1], order);
  return acc;
}

}  // namespace liquiddrop

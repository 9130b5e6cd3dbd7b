#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "liquiddrop/dimension.hpp"

namespace liquiddrop {

/// Flat index of the (l, m) mode, 0 <= l, |m| <= l.
inline int sph_index(int l, int m) { return l * l + l + m; }

inline int sph_count(int maxDegree) { return (maxDegree + 1) * (maxDegree + 1); }

// Scratch buffers for harmonic evaluation; reuse across calls, one per thread.
struct SphWorkspace {
  std::vector<double> pn, dpn, cm, sm;
};

// Real orthonormal spherical harmonics on S^2 (no Condon-Shortley phase):
//   Y_{l,0}  = Pn_{l,0}(t)
//   Y_{l,m}  = sqrt(2) Pn_{l,m}(t) cos(m phi),  m > 0
//   Y_{l,-m} = sqrt(2) Pn_{l,m}(t) sin(m phi),  m > 0
// with Pn the fully normalized associated Legendre functions, t = cos theta.
// Fills values[sph_index(l,m)]; dtheta/dphi optional. Requires |t| < 1.
inline void sph_evaluate(int L, double t, double phi, SphWorkspace& ws, double* values,
                         double* dtheta = nullptr, double* dphi = nullptr) {
  const double sinTheta = std::sqrt(std::max(0.0, 1.0 - t * t));
  if (sinTheta <= 0.0) throw std::domain_error("sph_evaluate: pole evaluation not supported");
  const std::size_t count = static_cast<std::size_t>(sph_count(L));
  ws.pn.resize(count);
  ws.cm.resize(L + 1);
  ws.sm.resize(L + 1);
  const bool wantD = dtheta != nullptr;
  if (wantD) ws.dpn.resize(count);

  double* pn = ws.pn.data();
  pn[0] = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= L; ++m)
    pn[sph_index(m, m)] =
        pn[sph_index(m - 1, m - 1)] * sinTheta * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
  for (int m = 0; m < L; ++m)
    pn[sph_index(m + 1, m)] = t * std::sqrt(2.0 * m + 3.0) * pn[sph_index(m, m)];
  for (int m = 0; m <= L; ++m) {
    for (int l = m + 2; l <= L; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      const double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                                 (4.0 * double(l - 1) * (l - 1) - 1.0));
      pn[sph_index(l, m)] = a * (t * pn[sph_index(l - 1, m)] - b * pn[sph_index(l - 2, m)]);
    }
  }
  if (wantD) {
    // d/dtheta Pn_{l,m} = (l t Pn_{l,m} - sqrt((l^2-m^2)(2l+1)/(2l-1)) Pn_{l-1,m}) / sin theta
    double* dpn = ws.dpn.data();
    for (int l = 0; l <= L; ++l) {
      for (int m = 0; m <= l; ++m) {
        double lower = 0.0;
        if (l > m)
          lower = std::sqrt((double(l) * l - double(m) * m) * (2.0 * l + 1.0) / (2.0 * l - 1.0)) *
                  pn[sph_index(l - 1, m)];
        dpn[sph_index(l, m)] = (l * t * pn[sph_index(l, m)] - lower) / sinTheta;
      }
    }
  }

  ws.cm[0] = 1.0;
  ws.sm[0] = 0.0;
  const double c1 = std::cos(phi), s1 = std::sin(phi);
  for (int m = 1; m <= L; ++m) {
    ws.cm[m] = ws.cm[m - 1] * c1 - ws.sm[m - 1] * s1;
    ws.sm[m] = ws.sm[m - 1] * c1 + ws.cm[m - 1] * s1;
  }

  const double sqrt2 = std::sqrt(2.0);
  for (int l = 0; l <= L; ++l) {
    values[sph_index(l, 0)] = pn[sph_index(l, 0)];
    if (dtheta) dtheta[sph_index(l, 0)] = ws.dpn[sph_index(l, 0)];
    if (dphi) dphi[sph_index(l, 0)] = 0.0;
    for (int m = 1; m <= l; ++m) {
      const double p = sqrt2 * pn[sph_index(l, m)];
      values[sph_index(l, m)] = p * ws.cm[m];
      values[sph_index(l, -m)] = p * ws.sm[m];
      if (dtheta) {
        const double dp = sqrt2 * ws.dpn[sph_index(l, m)];
        dtheta[sph_index(l, m)] = dp * ws.cm[m];
        dtheta[sph_index(l, -m)] = dp * ws.sm[m];
      }
      if (dphi) {
        dphi[sph_index(l, m)] = -m * p * ws.sm[m];
        dphi[sph_index(l, -m)] = m * p * ws.cm[m];
      }
    }
  }
}

inline SphWorkspace& sph_thread_workspace() {
  static thread_local SphWorkspace ws;
  return ws;
}

}  // namespace liquiddrop

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace hpcalc {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Cached Gauss-Legendre rule with n points.
const GaussRule& gauss_legendre(int n);

inline double quad_size(double v) { return std::abs(v); }
inline double quad_size(const std::complex<double>& v) { return std::abs(v); }
template <class Derived>
double quad_size(const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

struct QuadStats {
  double error = 0.0;  // sum of accepted panel error estimates
  int panels = 0;
  bool converged = true;
};

template <class F, class T>
T gauss_panel(F&& f, double a, double b, const T& zero, int n) {
  const GaussRule& r = gauss_legendre(n);
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  T acc = zero;
  for (std::size_t i = 0; i < r.x.size(); ++i) acc += (r.w[i] * h) * f(c + h * r.x[i]);
  return acc;
}

// Adaptive Gauss-Legendre: a panel is accepted when the n-point value
// agrees with the sum over its two halves to within abs_tol scaled by the
// panel's share of [a0, b0].
template <class F, class T>
T integrate_adaptive(F&& f, double a, double b, double abs_tol, const T& zero, QuadStats* stats = nullptr,
                     int n = 16, int max_depth = 40) {
  struct Frame {
    double a, b;
    T whole;
    int depth;
  };
  QuadStats local;
  QuadStats& st = stats ? *stats : local;
  const double span = b - a;
  if (span <= 0.0) return zero;
  T total = zero;
  std::vector<Frame> stack;
  stack.push_back({a, b, gauss_panel(f, a, b, zero, n), 0});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    const double m = 0.5 * (fr.a + fr.b);
    T left = gauss_panel(f, fr.a, m, zero, n);
    T right = gauss_panel(f, m, fr.b, zero, n);
    T both = left + right;
    const double err = quad_size(T(both - fr.whole));
    const double allowed = abs_tol * (fr.b - fr.a) / span;
    const bool at_roundoff = err <= 64.0 * std::numeric_limits<double>::epsilon() * quad_size(both);
    if (err <= allowed || at_roundoff || fr.depth >= max_depth) {
      if (err > allowed) st.converged = false;
      total += both;
      st.error += err;
      ++st.panels;
    } else {
      stack.push_back({fr.a, m, std::move(left), fr.depth + 1});
      stack.push_back({m, fr.b, std::move(right), fr.depth + 1});
    }
  }
  return total;
}

}  // namespace hpcalc

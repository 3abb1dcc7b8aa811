// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "hpcalc/errors.hpp"

namespace hpcalc {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform sampling of the real line. Frequencies live on
// u_j = -pi/dt + j*du, du = 2*pi/(n*dt), so u = 0 is bin n/2.
struct Grid {
  std::size_t n = 0;
  double dt = 1.0;
  double t0 = 0.0;

  static Grid centered(std::size_t n, double dt);

  double du() const { return kTwoPi / (static_cast<double>(n) * dt); }
  double u0() const { return -kPi / dt; }
  double t(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
  double u(std::size_t j) const { return u0() + static_cast<double>(j) * du(); }
  std::size_t zero_bin() const { return n / 2; }
  double length() const { return static_cast<double>(n) * dt; }

  void validate() const;
  bool same_as(const Grid& other) const;
};

inline constexpr double kBoundaryTol = 1e-10;

struct Signal {
  Grid grid;
  CVec samples;
  bool decay_ok = false;

  static Signal from_samples(const Grid& g, CVec values, double boundary_tol = kBoundaryTol);
  static Signal sample(const Grid& g, const std::function<cplx(double)>& fn,
                       double boundary_tol = kBoundaryTol);
  static Signal zeros(const Grid& g);

  std::size_t size() const { return samples.size(); }
  double sup() const;
  void refresh_decay(double boundary_tol = kBoundaryTol);
};

struct Spectrum {
  Grid grid;  // the time grid the spectrum belongs to
  CVec values;

  static Spectrum sample(const Grid& g, const std::function<cplx(double)>& fn);
  double u(std::size_t j) const { return grid.u(j); }
};

bool boundary_decays(const CVec& v, double boundary_tol);

Spectrum fourier_forward(const Signal& f);
Signal fourier_inverse(const Spectrum& F, double boundary_tol = kBoundaryTol);

struct ConvolveOptions {
  bool strict = false;
};

Signal convolve(const Signal& f, const Signal& g, ConvolveOptions opt = {});
Signal translate(const Signal& f, double s);
Signal dilate(const Signal& f, double a);

enum class NormMode { Trapezoid, HeavyTail };
double lp_norm(const Signal& f, double p, NormMode mode = NormMode::Trapezoid);

struct DualPairing {
  cplx time_side;
  cplx frequency_side;
};
DualPairing dual_pairing(const Signal& f1, const Signal& f2);

// Pointwise helpers on a shared grid.
Signal multiply(const Signal& a, const Signal& b);
Signal add(const Signal& a, const Signal& b);
Signal scale(const Signal& a, cplx c);
double max_abs_diff(const Signal& a, const Signal& b);

}  // namespace hpcalc

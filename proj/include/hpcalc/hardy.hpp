// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hpcalc/signal.hpp"

namespace hpcalc {

inline constexpr double kHardyTol = 1e-9;       // membership
inline constexpr double kHardyArithTol = 1e-6;  // after one round of arithmetic

// Fraction of spectral energy at u < 0.
double analyticity_defect(const Spectrum& s);
double analyticity_defect(const Signal& f);

struct HardySignal {
  Signal signal;
  double defect = 0.0;

  // Measures the defect and rejects the signal if it exceeds tol.
  static HardySignal adopt(Signal s, double tol = kHardyTol);
};

HardySignal riesz_project(const Signal& f);

// Conjugate function through the -i*sgn(u) multiplier, zero at u = 0.
Signal hilbert_transform(const Signal& f);

// floor < 0 selects 1e-8 * sup(modulus).
HardySignal outer_function(const Signal& modulus, double floor = -1.0, double tol = kHardyArithTol);

struct H1Factorization {
  HardySignal w;
  HardySignal v;
  double h_norm1 = 0.0;
  double w_norm2sq = 0.0;
  double v_norm2sq = 0.0;
  double residual = 0.0;  // ||w v - h||_1 / ||h||_1
  double raw_defect_w = 0.0;
  double raw_defect_v = 0.0;
  int refine = 1;  // w and v live on h's grid refined this many times
};

struct FactorOptions {
  double factor_tol = 1e-4;
  double floor_rel = 1e-8;
  NormMode norm_mode = NormMode::HeavyTail;
  int max_refine = 16;  // the outer function is built on grids up to this many times finer
};

// Near-zeros of h give |h|^(1/2) features finer than h's grid; the grid is refined by
// band-limited interpolation of h until the residual meets factor_tol.
H1Factorization factor_h1(const HardySignal& h, FactorOptions opt = {});

// Poisson integral of boundary data F evaluated at iz, Re z > 0.
cplx poisson_extend(const Signal& F, cplx z);

// b(t) = i exp(-i lambda t) on t >= 0; its boundary function is u -> 1/(lambda - u).
cplx rational_pair_density(cplx lambda, double t);

}  // namespace hpcalc

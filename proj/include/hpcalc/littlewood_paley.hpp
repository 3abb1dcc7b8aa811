// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "hpcalc/certificates.hpp"

namespace hpcalc {

// Dyadic partition psi_k(u) = psi(2^-k u) of (0, inf) with kernels
// phi_k = inverse transform of psi_k.
class LittlewoodPaleyFamily {
 public:
  LittlewoodPaleyFamily(bool sharp = false, int k_min = -12, int k_max = 12);

  bool sharp() const { return sharp_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }

  double psi(double u) const;
  double psi_k(int k, double u) const;
  // psi_{k-1} + psi_k + psi_{k+1}
  double psi_cover(int k, double u) const;

  Signal kernel(int k, const Grid& g) const;
  Signal cover_kernel(int k, const Grid& g) const;
  // ||phi_k||_1 on a grid dilated to the scale of block k.
  double kernel_l1(int k) const;

 private:
  bool sharp_;
  int k_min_, k_max_;
  double rise_;  // width of the rising edge in log2 units
};

struct BesovResult {
  double norm = 0.0;
  double tail = 0.0;  // sup-norm bound of the part of F outside the covered blocks
  double reconstruction_residual = 0.0;
  std::vector<int> k;
  std::vector<double> block_sup;
};

struct BesovOptions {
  double tail_tol = 1e-8;  // relative to sup |F|
};

BesovResult besov_norm(const Signal& F, const LittlewoodPaleyFamily& fam, BesovOptions opt = {});
// Blocks F * phi_k as signals, for k in the family range with nonzero content.
std::vector<std::pair<int, Signal>> besov_blocks(const Signal& F, const LittlewoodPaleyFamily& fam);

DecompositionCertificate besov_to_a_cert(const Signal& F, const LittlewoodPaleyFamily& fam, BesovOptions opt = {});

}  // namespace hpcalc

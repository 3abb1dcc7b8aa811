// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpcalc/semigroup.hpp"

namespace hpcalc {

double vector_norm(const CVector& x, double p);

struct GaussianNorm {
  double value = 0.0;      // sqrt of the sample mean of ||sum gamma_k x_k||_p^2
  double std_error = 0.0;  // delta-method standard error of value
  int samples = 0;
  std::uint64_t seed = 0;
};

// Complex standard Gaussians, E|gamma|^2 = 1.
GaussianNorm gaussian_sum_norm(const std::vector<CVector>& xs, double p, int samples, std::uint64_t seed);

struct GammaOptions {
  int samples = 10000;       // final evaluation of every candidate
  int search_samples = 512;  // common random numbers during the climb
  int restarts = 4;
  int climb_steps = 40;
  int max_subfamily = 4;
};

struct GammaEstimate {
  std::string family_digest;
  double p = 2.0;
  double lower_bound = 0.0;
  double mc_error = 0.0;  // relative standard error of the winning ratio
  double singleton_bound = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> witness_ops;
  std::vector<CVector> witness_vectors;
};

// Randomized search for configurations (S_k, x_k) maximizing
// (E||sum gamma_k S_k x_k||^2 / E||sum gamma_k x_k||^2)^(1/2).
GammaEstimate gamma_lower_bound(const std::vector<Matrix>& family, double p, GammaOptions opt, std::uint64_t seed);

// max_k ||S_k|| on l^2
double uniform_bound(const std::vector<Matrix>& family);

}  // namespace hpcalc

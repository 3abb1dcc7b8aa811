// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "hpcalc/io.hpp"
#include "hpcalc/signal.hpp"

namespace hpcalc {

using CVector = Eigen::VectorXcd;

// A matrix A whose negative generates the bounded semigroup exp(-tA).
struct Generator {
  Matrix A;
  double c_bound = 1.0;          // certified sup_t ||exp(-tA)||
  double spectral_margin = 0.0;  // min Re spec(A)
  CVector eigenvalues;
  Matrix V, Vinv;
  double kappa = 1.0;  // condition number of the eigenvector matrix
  bool normal = false;
  bool eigen_path = true;  // exponentials through the eigendecomposition
  double sampled_sup = 1.0;
  double certified_horizon = 0.0;  // samples cover [0, horizon]; analytic tail beyond

  Eigen::Index dim() const { return A.rows(); }
};

struct CertifyOptions {
  double t_max = 0.0;  // 0 picks a horizon from the spectrum
  int samples = 2000;
};

Generator certify_bound(const Matrix& A, CertifyOptions opt = {});
Generator shifted(const Generator& G, double eps);

Matrix semigroup_apply(const Generator& G, double t);
Matrix resolvent(const Generator& G, cplx z);

// Scaling and squaring with a Pade approximant.
Matrix expm(const Matrix& M);
// Spectral norm (largest singular value).
double op_norm(const Matrix& M);

}  // namespace hpcalc

// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/semigroup.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace hpcalc {

namespace {

constexpr double kEigenPathCond = 1e6;
constexpr double kDefectiveCond = 1e10;

double norm_at(const Generator& G, double t) { return op_norm(semigroup_apply(G, t)); }

// Refine a sampled maximum of ||exp(-tA)|| by golden-section search on [a, b].
double refine_max(const Generator& G, double a, double b, double best) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = norm_at(G, x1), f2 = norm_at(G, x2);
  for (int it = 0; it < 60 && b - a > 1e-12 * std::max(1.0, b); ++it) {
    if (f1 > f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = norm_at(G, x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = norm_at(G, x2);
    }
  }
  return std::max({best, f1, f2});
}

// Max of ||exp(-tA)|| over a uniform grid on [t_lo, t_hi] plus a geometric cluster near t_lo.
double sample_sup(const Generator& G, double t_lo, double t_hi, int samples) {
  std::vector<double> ts;
  const double h = (t_hi - t_lo) / samples;
  for (int k = 0; k <= samples; ++k) ts.push_back(t_lo + k * h);
  for (int k = 1; k <= 40; ++k) ts.push_back(t_lo + h * std::pow(10.0, -k / 8.0));
  std::sort(ts.begin(), ts.end());
  double best = -1.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double v = norm_at(G, ts[i]);
    if (v > best) { best = v; arg = i; }
  }
  const double a = ts[arg > 0 ? arg - 1 : 0], b = ts[std::min(arg + 1, ts.size() - 1)];
  return b > a ? refine_max(G, a, b, best) : best;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

double op_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

Matrix expm(const Matrix& M) { return M.exp(); }

Generator certify_bound(const Matrix& A, CertifyOptions opt) {
  require(A.rows() == A.cols() && A.rows() > 0, ErrorKind::Configuration, "generator must be a square matrix");
  require(A.allFinite(), ErrorKind::Domain, "generator has non-finite entries");
  require(opt.samples >= 10, ErrorKind::Configuration, "certify_bound needs at least 10 samples");
  const Eigen::Index d = A.rows();
  Generator G;
  G.A = A;
  Eigen::ComplexEigenSolver<Matrix> es(A);
  require(es.info() == Eigen::Success, ErrorKind::Accuracy, "eigendecomposition failed");
  G.eigenvalues = es.eigenvalues();
  G.V = es.eigenvectors();
  Eigen::JacobiSVD<Matrix> svd(G.V);
  const auto& sv = svd.singularValues();
  G.kappa = sv(d - 1) > 0.0 ? sv(0) / sv(d - 1) : INFINITY;
  const double scale = std::max(1.0, op_norm(A));
  double margin = G.eigenvalues.real().minCoeff();
  if (margin < -1e-12 * scale) {
    std::ostringstream msg;
    msg << "eigenvalue with negative real part " << margin << ": semigroup is unbounded";
    fail(ErrorKind::Rejection, msg.str(), margin);
  }
  margin = std::max(margin, 0.0);
  G.spectral_margin = margin;
  const Matrix comm = A * A.adjoint() - A.adjoint() * A;
  G.normal = comm.norm() <= 1e-12 * scale * scale;
  G.eigen_path = G.kappa <= kEigenPathCond;
  if (G.eigen_path) G.Vinv = G.V.inverse();

  double horizon = opt.t_max > 0.0 ? opt.t_max : (margin > 0.0 ? 10.0 / margin : 50.0);
  horizon = std::min(horizon, 1e4);
  G.c_bound = INFINITY;  // not used while sampling
  double sup = sample_sup(G, 0.0, horizon, opt.samples);
  G.sampled_sup = sup;
  G.certified_horizon = horizon;

  if (G.normal) {
    G.c_bound = 1.0;
    if (sup > 1.0 + 1e-9) fail(ErrorKind::Accuracy, "normal generator sampled above 1", sup);
    return G;
  }

  const bool defective = !(G.kappa <= kDefectiveCond);
  if (margin <= 1e-12 * scale) {
    if (!defective) {
      G.c_bound = std::max(sup, G.kappa);
      return G;
    }
    const double half = sample_sup(G, 0.0, 0.5 * horizon, opt.samples / 2);
    if (sup > half * (1.0 + 1e-6)) {
      std::ostringstream msg;
      msg << "non-diagonalizable generator with zero spectral margin: sampled norm grows from " << half
          << " to " << sup;
      fail(ErrorKind::Rejection, msg.str(), sup);
    }
    G.c_bound = sup;
    return G;
  }

  // Tail bounds for t beyond the horizon.
  Eigen::ComplexSchur<Matrix> schur(A);
  Matrix N = schur.matrixT().triangularView<Eigen::StrictlyUpper>();
  const double nn = op_norm(N);
  auto schur_bound = [&](double t) {
    double s = 0.0;
    for (int k = 0; k < d; ++k) s += std::pow(t * nn, k) / factorial(k);
    return std::exp(-t * margin) * s;
  };
  auto tail_bound = [&](double t) {
    double b = schur_bound(t);
    if (!defective) b = std::min(b, G.kappa * std::exp(-t * margin));
    return b;
  };
  const double monotone_from = static_cast<double>(d - 1) / margin;
  for (int it = 0; it < 40; ++it) {
    const double t = std::max(horizon, monotone_from);
    if (tail_bound(t) <= sup) {
      if (t > horizon) {
        sup = std::max(sup, sample_sup(G, horizon, t, opt.samples));
        horizon = t;
      }
      break;
    }
    const double next = std::min(2.0 * t, 1e6);
    sup = std::max(sup, sample_sup(G, horizon, next, opt.samples));
    horizon = next;
  }
  if (tail_bound(std::max(horizon, monotone_from)) > sup)
    fail(ErrorKind::Truncation, "could not certify the semigroup tail", tail_bound(horizon));
  G.sampled_sup = sup;
  G.certified_horizon = horizon;
  G.c_bound = std::max(1.0, sup);
  return G;
}

Generator shifted(const Generator& G, double eps) {
  require(eps >= 0.0, ErrorKind::Domain, "shift must be non-negative");
  Generator S = G;
  S.A = G.A + eps * Matrix::Identity(G.dim(), G.dim());
  S.eigenvalues = G.eigenvalues.array() + eps;
  S.spectral_margin = G.spectral_margin + eps;
  return S;
}

Matrix semigroup_apply(const Generator& G, double t) {
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "semigroup_apply needs t >= 0");
  if (t == 0.0) return Matrix::Identity(G.dim(), G.dim());
  if (G.eigen_path) {
    CVector e = (-t * G.eigenvalues.array()).exp();
    return G.V * e.asDiagonal() * G.Vinv;
  }
  return expm(-t * G.A);
}

Matrix resolvent(const Generator& G, cplx z) {
  const double gap = (G.eigenvalues.array() - z).abs().minCoeff();
  if (gap < 1e-12 * std::max(1.0, std::abs(z))) fail(ErrorKind::Singularity, "resolvent evaluated at an eigenvalue", gap);
  const Eigen::Index d = G.dim();
  if (G.eigen_path) {
    CVector r = (z - G.eigenvalues.array()).inverse();
    return G.V * r.asDiagonal() * G.Vinv;
  }
  Matrix M = z * Matrix::Identity(d, d) - G.A;
  return M.partialPivLu().solve(Matrix::Identity(d, d));
}

}  // namespace hpcalc

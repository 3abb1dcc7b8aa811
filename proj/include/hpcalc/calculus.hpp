// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpcalc/certificates.hpp"
#include "hpcalc/semigroup.hpp"

namespace hpcalc {

// Integrable density on [0, inf) with an upper bound for its L1 tail.
struct Density {
  std::function<cplx(double)> eval;
  std::function<double(double)> tail_l1;  // >= integral of |b| over [T, inf)
};

// sum_j c_j t^k_j exp(-a_j t) with Re a_j > 0.
struct ExpPolynomial {
  struct Term {
    cplx c;
    int k;
    cplx a;
  };
  std::vector<Term> terms;

  cplx operator()(double t) const;
  cplx laplace(cplx z) const;
  double tail_l1(double T) const;
  Density density() const;
};

// (b1 * b2)(t) = integral_0^t b1(s) b2(t - s) ds by fixed-order Gauss panels; b1, b2 smooth on [0, inf).
Density convolve_densities(const Density& b1, const Density& b2);

struct CalcResult {
  std::string operation;
  std::string inputs_digest;
  Matrix matrix;
  double bound = 0.0;
  std::map<std::string, double> residuals;
};

struct HPOptions {
  double tol = 1e-12;
  double t_cap = 4096.0;
};

CalcResult hille_phillips(const Generator& G, const Density& b, HPOptions opt = {});
// b sampled on t_k = k dt, k = 0..n-1 (grid origin 0), trapezoidal rule.
CalcResult hille_phillips(const Generator& G, const Signal& b);

struct HolomorphicSymbol {
  enum class Kind { Laplace, Boundary, Rational, Callback, Product };
  Kind kind = Kind::Callback;
  std::function<cplx(cplx)> eval;
  double abscissa = 0.0;                 // holomorphic and bounded on Re z > abscissa
  std::optional<double> decay_exponent;  // |phi(z)| = O(|z|^-(1+s)); s = -1 means bounded
  std::string label;

  static HolomorphicSymbol laplace(const Signal& b);
  static HolomorphicSymbol boundary(const Signal& F);
  static HolomorphicSymbol rational(cplx mu, int m);
  static HolomorphicSymbol callback(std::function<cplx(cplx)> fn, double abscissa,
                                    std::optional<double> decay_exponent, std::string label = "callback");

  cplx operator()(cplx z) const { return eval(z); }
};

HolomorphicSymbol operator*(const HolomorphicSymbol& a, const HolomorphicSymbol& b);

// Laplace transform of the piecewise-linear interpolant of b (grid origin 0).
cplx laplace_piecewise_linear(const Signal& b, cplx z);

// Checks |phi(beta + is)| |z|^(1+s) stays bounded along the line; returns the sampled constant.
double validate_decay(const HolomorphicSymbol& phi, double beta);

struct ContourOptions {
  double tol = 1e-10;
};

CalcResult halfplane_eval(const Generator& G, const HolomorphicSymbol& phi, double beta, ContourOptions opt = {});
CalcResult regularized_eval(const Generator& G, const HolomorphicSymbol& phi, cplx mu,
                            std::optional<double> beta = std::nullopt, ContourOptions opt = {});

CalcResult elementary_calc(const Generator& G, const Signal& f, const HardySignal& h);
CalcResult rho0(const Generator& G, const DecompositionCertificate& cert);
// Same evaluation on the shifted generator A + eps.
CalcResult rho0_shifted(const Generator& G, const DecompositionCertificate& cert, double eps);
CalcResult rho_ext(const Generator& G, const DecompositionCertificate& cert_F, const DecompositionCertificate& unit,
                   ProductOptions opt = {});

}  // namespace hpcalc

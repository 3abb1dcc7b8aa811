// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hpcalc/hardy.hpp"
#include "hpcalc/signal.hpp"

namespace hpcalc {

struct CertificatePair {
  Signal f;       // bounded factor
  HardySignal h;  // integrable Hardy factor
};

// Finite family (f_k, h_k) witnessing F = sum f_k * h_k and the bound
// ||F||_A <= sum ||f_k||_inf ||h_k||_1.
struct DecompositionCertificate {
  std::vector<CertificatePair> pairs;
  std::optional<Signal> target;
  double residual = 0.0;            // ||reconstruction - target||_inf
  double truncation_defect = 0.0;   // construction-specific loss (dropped mass, leakage)
  double density_l1 = 0.0;          // ||b||_1 for Laplace certificates, 0 otherwise

  double value() const;
  bool empty() const { return pairs.empty(); }
  const Grid& grid() const;
};

inline constexpr double kCertHardyTol = 1e-6;

DecompositionCertificate make_certificate(std::vector<CertificatePair> pairs,
                                          std::optional<Signal> target = std::nullopt);
Signal cert_reconstruct(const DecompositionCertificate& c);
double cert_value(const DecompositionCertificate& c);
// Largest |u| where the spectrum exceeds rel_tol of its peak.
double spectral_extent(const Signal& s, double rel_tol = 1e-12);
double cert_spectral_extent(const DecompositionCertificate& c, double rel_tol = 1e-12);
// Sum over pairs of spectrum(f_k) * spectrum(h_k).
Spectrum cert_spectrum(const DecompositionCertificate& c);

struct ProductOptions {
  int s_stride = 4;        // s-step as a multiple of the grid spacing
  double drop_tol = 1e-13; // pairs below drop_tol * value1 * value2 are omitted
  double tail_tol = 1e-8;  // dropped mass allowed relative to value1 * value2
};

DecompositionCertificate product_cert(const DecompositionCertificate& c1, const DecompositionCertificate& c2,
                                      ProductOptions opt = {});

// Smooth transition: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x);
// Smooth compactly supported bump exp(-1/(x(1-x))) on (0, 1), peak 1 at x = 1/2.
double smooth_bump(double x);

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

// Frequency window equal to 1 on [lo, hi], rising over [lo - ramp_lo, lo] and
// falling over [hi, hi + ramp_hi].
RealFn plateau_window(double lo, double hi, double ramp_lo, double ramp_hi);

struct LaplaceCertOptions {
  double leakage_tol = 1e-8;
};

// Single pair f = inverse transform of b, h = 2 pi * inverse transform of c,
// reconstructing the boundary function of the Laplace transform of b.
DecompositionCertificate laplace_cert(const Grid& g, const ComplexFn& b, const RealFn& window,
                                      LaplaceCertOptions opt = {});

// Certificate for G_N(u) = N / (N - iu) from N exp(-N t) with its support
// cut to [delta, cutoff]; the lost mass is recorded as truncation_defect.
DecompositionCertificate unit_cert(const Grid& g, double N, double delta, double cutoff);
// Unit certificate whose window fits in the band left free by cert.
DecompositionCertificate unit_for(const DecompositionCertificate& cert, double N, double delta);

// JSON index with value/residual metadata; pair signals go to sibling files
// "<stem>.f<k>.sig", "<stem>.h<k>.sig" and "<stem>.target.sig".
void save_certificate(const std::string& path, const DecompositionCertificate& c);
DecompositionCertificate load_certificate(const std::string& path);

struct ApproxUnitReport {
  std::vector<double> N;
  std::vector<double> product_value;
  std::vector<double> value_bound;
  std::vector<double> sup_error;       // sup |rec(F U_N) - F|, U_N the unit certificate
  std::vector<double> identity_error;  // sup |F G_N - F| with the closed-form G_N
  std::vector<double> product_error;   // sup |rec(F U_N) - F rec(U_N)|
  std::vector<double> unit_residual;   // sup |rec(U_N) - G_N|
  std::vector<double> unit_defect;
  double f_sup = 0.0;
};

ApproxUnitReport approx_unit_test(const DecompositionCertificate& cert, const std::vector<double>& N_list,
                                  double delta, ProductOptions opt = {});

}  // namespace hpcalc

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hpcalc/hardy.hpp"

namespace hpcalc {

// Bounded symbol on (0, inf), either a callback or interpolated spectrum samples.
struct MultiplierSymbol {
  std::function<cplx(double)> fn;
  double sup_norm = 0.0;
  std::string label;

  static MultiplierSymbol callback(std::function<cplx(double)> fn, double sup_norm, std::string label = "callback");
  // Linear interpolation between bins; undefined outside the sampled band.
  static MultiplierSymbol sampled(const Spectrum& s);

  cplx operator()(double u) const { return fn(u); }
};

HardySignal apply_multiplier(const MultiplierSymbol& m, const HardySignal& h);
// u -> m(a u)
MultiplierSymbol dilation_conjugate(const MultiplierSymbol& m, double a);

struct RatioReport {
  double ratio = 0.0;  // lower bound for the operator norm on the probed space
  std::size_t witness = 0;
  std::vector<double> ratios;
};

// max_i ||T_m h_i||_p / ||h_i||_p over the supplied probes.
RatioReport multiplier_ratio(const MultiplierSymbol& m, const std::vector<HardySignal>& probes, double p);

// Lacunary multiplier m = sum_n e^{i N_n u} f_n(u), N_n = 2^n - 1, f_n = f0(. - N_n),
// on the positive band u_j = j du, j < bins, with time periodized to 2 pi / du.
class Counterexample {
 public:
  // band: frequency extent bins * du; defaults to 2^n_max.
  Counterexample(int n_max, std::size_t bins = std::size_t{1} << 20, std::optional<double> band = std::nullopt,
                 std::function<double(double)> f0 = {});

  int n_max() const { return n_max_; }
  std::size_t bins() const { return bins_; }
  double du() const { return du_; }
  double period() const { return kTwoPi / du_; }
  double frequency(std::size_t j) const { return static_cast<double>(j) * du_; }
  static double lacunary_shift(int n) { return std::ldexp(1.0, n) - 1.0; }

  // f_n on the band, zero outside its support.
  CVec block(int n) const;
  CVec symbol_values() const;
  CVec g_spectrum(int N) const;
  CVec product_spectrum(int N) const;  // m * g_N
  CVec squares_spectrum(int N) const;  // sum_{n <= N} f_n^2
  MultiplierSymbol symbol() const;

  // (du / 2 pi) sum_j X_j e^{i u_j t_k}
  CVec time_samples(const CVec& spectrum) const;
  double periodic_norm(const CVec& samples, double p) const;
  // ||F^-1(m psi_k)||_1 with the sharp partition
  double block_l1(int k) const;
  double f0_sup() const;

 private:
  int n_max_;
  std::size_t bins_;
  double du_;
  std::function<double(double)> f0_;
  std::size_t f0_first_, f0_count_;  // support of f0 in bins, relative to the shift
};

double default_f0(double u);

struct GrowthReport {
  double p = 0.0;
  std::vector<int> N;
  std::vector<double> norm_g, norm_Tg, sup_g;
  double slope_g = 0.0, slope_Tg = 0.0;
  double identity_error = 0.0;  // max over N of |m g_N - sum f_n^2|
};

GrowthReport counterexample_growth(const Counterexample& cx, double p, const std::vector<int>& N_list);

// Least-squares slope of log2 y against log2 x.
double log2_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hpcalc

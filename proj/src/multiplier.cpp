// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hpcalc/fft.hpp"
#include "hpcalc/littlewood_paley.hpp"
#include "hpcalc/parallel.hpp"

namespace hpcalc {

MultiplierSymbol MultiplierSymbol::callback(std::function<cplx(double)> fn, double sup_norm, std::string label) {
  require(sup_norm >= 0.0, ErrorKind::Configuration, "symbol sup norm must be non-negative");
  return MultiplierSymbol{std::move(fn), sup_norm, std::move(label)};
}

MultiplierSymbol MultiplierSymbol::sampled(const Spectrum& s) {
  double sup = 0.0;
  for (const auto& v : s.values) sup = std::max(sup, std::abs(v));
  const double u0 = s.grid.u0(), du = s.grid.du();
  const CVec values = s.values;
  auto fn = [values, u0, du](double u) -> cplx {
    const double x = (u - u0) / du;
    if (!(x >= 0.0) || x > static_cast<double>(values.size() - 1)) return {std::nan(""), std::nan("")};
    const std::size_t i = std::min(static_cast<std::size_t>(x), values.size() - 2);
    const double w = x - static_cast<double>(i);
    return (1.0 - w) * values[i] + w * values[i + 1];
  };
  return MultiplierSymbol{fn, sup, "sampled"};
}

HardySignal apply_multiplier(const MultiplierSymbol& m, const HardySignal& h) {
  Spectrum H = fourier_forward(h.signal);
  const Grid& g = H.grid;
  double top = 0.0;
  for (const auto& v : H.values) top = std::max(top, std::abs(v));
  const double limit = m.sup_norm * (1.0 + 1e-12);
  for (std::size_t j = 0; j < g.n; ++j) {
    if (j <= g.zero_bin() || std::abs(H.values[j]) <= 1e-14 * top) {
      H.values[j] = 0.0;
      continue;
    }
    const cplx v = m(g.u(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "symbol undefined at u = " << g.u(j);
      fail(ErrorKind::Domain, msg.str(), g.u(j));
    }
    if (std::abs(v) > limit) fail(ErrorKind::Configuration, "symbol exceeds its declared sup norm", std::abs(v));
    H.values[j] *= v;
  }
  Signal out = fourier_inverse(H);
  const double d = analyticity_defect(out);
  return HardySignal{std::move(out), d};
}

MultiplierSymbol dilation_conjugate(const MultiplierSymbol& m, double a) {
  require(a > 0.0, ErrorKind::Domain, "dilation factor must be positive");
  auto fn = m.fn;
  return MultiplierSymbol{[fn, a](double u) { return fn(a * u); }, m.sup_norm, m.label + "(a.)"};
}

RatioReport multiplier_ratio(const MultiplierSymbol& m, const std::vector<HardySignal>& probes, double p) {
  RatioReport r;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const double base = lp_norm(probes[i].signal, p);
    require(base > 0.0, ErrorKind::Domain, "zero probe");
    const double v = lp_norm(apply_multiplier(m, probes[i]).signal, p) / base;
    r.ratios.push_back(v);
    if (v > r.ratio) {
      r.ratio = v;
      r.witness = i;
    }
  }
  return r;
}

double default_f0(double u) {
  const double x = 4.0 * (u - 0.75);
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp(-1.0 / (x * (1.0 - x)));
}

Counterexample::Counterexample(int n_max, std::size_t bins, std::optional<double> band, std::function<double(double)> f0)
    : n_max_(n_max), bins_(bins), f0_(f0 ? std::move(f0) : std::function<double(double)>(default_f0)) {
  require(n_max >= 0 && n_max < 40, ErrorKind::Configuration, "n_max out of range");
  require(bins >= 16, ErrorKind::Configuration, "too few frequency bins");
  const double top = std::ldexp(1.0, n_max);
  const double extent = band ? *band : top;
  if (extent < top) fail(ErrorKind::Domain, "n_max too large for the frequency band", top);
  du_ = extent / static_cast<double>(bins);
  const double inv = 1.0 / du_;
  require(std::abs(inv - std::round(inv)) < 1e-9, ErrorKind::Configuration,
          "lacunary shifts must fall on frequency bins (1/du integer)");
  require(du_ <= 1.0 / 64.0, ErrorKind::Configuration, "frequency resolution too coarse for the bump");
  f0_first_ = static_cast<std::size_t>(std::floor(0.75 / du_));
  f0_count_ = static_cast<std::size_t>(std::ceil(1.0 / du_)) + 1 - f0_first_;
}

double Counterexample::f0_sup() const {
  double s = 0.0;
  for (std::size_t i = 0; i < f0_count_; ++i) s = std::max(s, std::abs(f0_(frequency(f0_first_ + i))));
  return s;
}

CVec Counterexample::block(int n) const {
  CVec v(bins_, cplx(0.0));
  const auto shift = static_cast<std::size_t>(std::llround(lacunary_shift(n) / du_));
  for (std::size_t i = 0; i < f0_count_; ++i) {
    const std::size_t j = shift + f0_first_ + i;
    if (j < bins_) v[j] = f0_(frequency(f0_first_ + i));
  }
  return v;
}

namespace {

cplx phase(double N, double u) {
  const double theta = std::fmod(N * u, kTwoPi);
  return std::polar(1.0, theta);
}

}  // namespace

CVec Counterexample::symbol_values() const {
  CVec m(bins_, cplx(0.0));
  for (int n = 0; n <= n_max_; ++n) {
    const CVec f = block(n);
    const double N = lacunary_shift(n);
    for (std::size_t j = 0; j < bins_; ++j)
      if (f[j] != 0.0) m[j] += phase(N, frequency(j)) * f[j];
  }
  return m;
}

CVec Counterexample::g_spectrum(int N) const {
  require(N >= 0 && N <= n_max_, ErrorKind::Domain, "N outside the multiplier range");
  CVec g(bins_, cplx(0.0));
  for (int n = 0; n <= N; ++n) {
    const CVec f = block(n);
    const double s = lacunary_shift(n);
    for (std::size_t j = 0; j < bins_; ++j)
      if (f[j] != 0.0) g[j] += std::conj(phase(s, frequency(j))) * f[j];
  }
  return g;
}

CVec Counterexample::product_spectrum(int N) const {
  const CVec m = symbol_values();
  CVec g = g_spectrum(N);
  for (std::size_t j = 0; j < bins_; ++j) g[j] *= m[j];
  return g;
}

CVec Counterexample::squares_spectrum(int N) const {
  require(N >= 0 && N <= n_max_, ErrorKind::Domain, "N outside the multiplier range");
  CVec s(bins_, cplx(0.0));
  for (int n = 0; n <= N; ++n) {
    const CVec f = block(n);
    for (std::size_t j = 0; j < bins_; ++j) s[j] += f[j] * f[j];
  }
  return s;
}

MultiplierSymbol Counterexample::symbol() const {
  const CVec values = symbol_values();
  const double du = du_;
  double sup = 0.0;
  for (const auto& v : values) sup = std::max(sup, std::abs(v));
  auto fn = [values, du](double u) -> cplx {
    const double x = u / du;
    if (!(x >= 0.0) || x > static_cast<double>(values.size() - 1)) return 0.0;
    const std::size_t i = std::min(static_cast<std::size_t>(x), values.size() - 2);
    const double w = x - static_cast<double>(i);
    return (1.0 - w) * values[i] + w * values[i + 1];
  };
  return MultiplierSymbol{fn, sup, "lacunary"};
}

CVec Counterexample::time_samples(const CVec& spectrum) const {
  require(spectrum.size() == bins_, ErrorKind::Configuration, "spectrum size mismatch");
  CVec x = spectrum;
  dft_inplace(x, +1);
  const double w = du_ / kTwoPi;
  for (auto& v : x) v *= w;
  return x;
}

double Counterexample::periodic_norm(const CVec& samples, double p) const {
  if (std::isinf(p)) {
    double s = 0.0;
    for (const auto& v : samples) s = std::max(s, std::abs(v));
    return s;
  }
  double acc = 0.0;
  for (const auto& v : samples) acc += std::pow(std::abs(v), p);
  return std::pow(acc * period() / static_cast<double>(samples.size()), 1.0 / p);
}

double Counterexample::block_l1(int k) const {
  const LittlewoodPaleyFamily fam(true, k - 1, k + 1);
  CVec x = symbol_values();
  for (std::size_t j = 0; j < bins_; ++j) x[j] *= fam.psi_k(k, frequency(j));
  return periodic_norm(time_samples(x), 1.0);
}

double log2_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size(), ErrorKind::Configuration, "slope fit size mismatch");
  require(x.size() >= 4, ErrorKind::Configuration, "slope fit needs at least 4 points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, ErrorKind::Domain, "slope fit needs positive data");
    const double a = std::log2(x[i]), b = std::log2(y[i]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  const double den = n * sxx - sx * sx;
  require(den > 0.0, ErrorKind::Configuration, "slope fit needs distinct abscissae");
  return (n * sxy - sx * sy) / den;
}

GrowthReport counterexample_growth(const Counterexample& cx, double p, const std::vector<int>& N_list) {
  require(p > 2.0, ErrorKind::Domain, "growth experiment needs p > 2");
  require(N_list.size() >= 4, ErrorKind::Configuration, "growth fit needs at least 4 values of N");
  for (int N : N_list) require(N >= 1 && N <= cx.n_max(), ErrorKind::Domain, "N outside the grid capacity");
  GrowthReport r;
  r.p = p;
  r.N = N_list;
  const std::size_t k = N_list.size();
  r.norm_g.resize(k);
  r.norm_Tg.resize(k);
  r.sup_g.resize(k);
  std::vector<double> ident(k);
  const CVec m = cx.symbol_values();
  parallel_for(k, [&](std::size_t i) {
    const int N = N_list[i];
    CVec g = cx.g_spectrum(N);
    const CVec sq = cx.squares_spectrum(N);
    CVec tg(g.size());
    double err = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      tg[j] = m[j] * g[j];
      err = std::max(err, std::abs(tg[j] - sq[j]));
    }
    ident[i] = err;
    const CVec gt = cx.time_samples(g);
    r.norm_g[i] = cx.periodic_norm(gt, p);
    r.sup_g[i] = cx.periodic_norm(gt, std::numeric_limits<double>::infinity());
    r.norm_Tg[i] = cx.periodic_norm(cx.time_samples(tg), p);
  });
  r.identity_error = *std::max_element(ident.begin(), ident.end());
  std::vector<double> xs(N_list.begin(), N_list.end());
  r.slope_g = log2_slope(xs, r.norm_g);
  r.slope_Tg = log2_slope(xs, r.norm_Tg);
  return r;
}

}  // namespace hpcalc

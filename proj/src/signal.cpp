// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hpcalc/fft.hpp"

namespace hpcalc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Truncation: return "truncation";
    case ErrorKind::Rejection: return "rejection";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

bool near_integer(double x, double& rounded) {
  rounded = std::round(x);
  return std::abs(x - rounded) <= 1e-9 * std::max(1.0, std::abs(x));
}

void require_same_grid(const Signal& a, const Signal& b) {
  require(a.grid.same_as(b.grid), ErrorKind::Configuration, "signals live on different grids");
}

}  // namespace

Grid Grid::centered(std::size_t n, double dt) {
  Grid g{n, dt, -static_cast<double>(n / 2) * dt};
  g.validate();
  return g;
}

void Grid::validate() const {
  if (!is_pow2(n)) fail(ErrorKind::Configuration, "grid size " + std::to_string(n) + " is not a power of two");
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::Configuration, "grid spacing must be positive");
  if (!std::isfinite(t0)) fail(ErrorKind::Configuration, "grid origin must be finite");
}

bool Grid::same_as(const Grid& o) const {
  return n == o.n && std::abs(dt - o.dt) <= 1e-14 * dt && std::abs(t0 - o.t0) <= 1e-12 * std::max(1.0, std::abs(t0));
}

bool boundary_decays(const CVec& v, double boundary_tol) {
  if (v.empty()) return true;
  double sup = 0.0;
  for (const auto& x : v) sup = std::max(sup, std::abs(x));
  if (sup == 0.0) return true;
  const std::size_t m = std::max<std::size_t>(1, (v.size() + 99) / 100);
  for (std::size_t k = 0; k < m; ++k) {
    if (std::abs(v[k]) > boundary_tol * sup) return false;
    if (std::abs(v[v.size() - 1 - k]) > boundary_tol * sup) return false;
  }
  return true;
}

Signal Signal::from_samples(const Grid& g, CVec values, double boundary_tol) {
  g.validate();
  require(values.size() == g.n, ErrorKind::Configuration, "sample count does not match grid");
  for (const auto& x : values)
    require(std::isfinite(x.real()) && std::isfinite(x.imag()), ErrorKind::Domain, "non-finite sample");
  Signal s{g, std::move(values), false};
  s.refresh_decay(boundary_tol);
  return s;
}

Signal Signal::sample(const Grid& g, const std::function<cplx(double)>& fn, double boundary_tol) {
  g.validate();
  CVec v(g.n);
  for (std::size_t k = 0; k < g.n; ++k) v[k] = fn(g.t(k));
  return from_samples(g, std::move(v), boundary_tol);
}

Signal Signal::zeros(const Grid& g) {
  g.validate();
  return Signal{g, CVec(g.n, cplx(0.0)), true};
}

double Signal::sup() const {
  double s = 0.0;
  for (const auto& x : samples) s = std::max(s, std::abs(x));
  return s;
}

void Signal::refresh_decay(double boundary_tol) { decay_ok = boundary_decays(samples, boundary_tol); }

Spectrum Spectrum::sample(const Grid& g, const std::function<cplx(double)>& fn) {
  g.validate();
  Spectrum s{g, CVec(g.n)};
  for (std::size_t j = 0; j < g.n; ++j) s.values[j] = fn(g.u(j));
  return s;
}

Spectrum fourier_forward(const Signal& f) {
  const Grid& g = f.grid;
  g.validate();
  CVec buf(g.n);
  for (std::size_t k = 0; k < g.n; ++k) buf[k] = (k % 2 == 0) ? f.samples[k] : -f.samples[k];
  dft_inplace(buf, -1);
  for (std::size_t j = 0; j < g.n; ++j) buf[j] *= g.dt * std::polar(1.0, -g.u(j) * g.t0);
  return Spectrum{g, std::move(buf)};
}

Signal fourier_inverse(const Spectrum& F, double boundary_tol) {
  const Grid& g = F.grid;
  g.validate();
  require(F.values.size() == g.n, ErrorKind::Configuration, "spectrum size does not match grid");
  CVec buf(g.n);
  for (std::size_t j = 0; j < g.n; ++j) buf[j] = F.values[j] * std::polar(1.0, g.u(j) * g.t0);
  dft_inplace(buf, +1);
  const double norm = 1.0 / (static_cast<double>(g.n) * g.dt);
  for (std::size_t k = 0; k < g.n; ++k) buf[k] *= (k % 2 == 0) ? norm : -norm;
  Signal s{g, std::move(buf), false};
  s.refresh_decay(boundary_tol);
  return s;
}

Signal convolve(const Signal& f, const Signal& g, ConvolveOptions opt) {
  require_same_grid(f, g);
  if (!f.decay_ok && !g.decay_ok) {
    if (opt.strict) fail(ErrorKind::Accuracy, "convolution of two non-decaying signals");
  }
  const Grid& gr = f.grid;
  double off;
  if (!near_integer(-gr.t0 / gr.dt, off))
    fail(ErrorKind::Configuration, "convolution needs a grid origin on a multiple of dt");
  const std::size_t n = gr.n, m = 2 * n;
  CVec a(m, cplx(0.0)), b(m, cplx(0.0));
  std::copy(f.samples.begin(), f.samples.end(), a.begin());
  std::copy(g.samples.begin(), g.samples.end(), b.begin());
  dft_inplace(a, -1);
  dft_inplace(b, -1);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  dft_inplace(a, +1);
  const long shift = static_cast<long>(off);
  CVec out(n, cplx(0.0));
  const double w = gr.dt / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    const long idx = static_cast<long>(i) + shift;
    if (idx >= 0 && idx < static_cast<long>(m) - 1) out[i] = a[static_cast<std::size_t>(idx)] * w;
  }
  Signal s{gr, std::move(out), false};
  s.refresh_decay();
  return s;
}

Signal translate(const Signal& f, double s) {
  const Grid& g = f.grid;
  double steps;
  if (near_integer(s / g.dt, steps)) {
    const long k0 = static_cast<long>(steps);
    CVec out(g.n, cplx(0.0));
    for (long k = 0; k < static_cast<long>(g.n); ++k) {
      const long src = k - k0;
      if (src >= 0 && src < static_cast<long>(g.n)) out[k] = f.samples[src];
    }
    Signal r{g, std::move(out), false};
    r.refresh_decay();
    return r;
  }
  Spectrum F = fourier_forward(f);
  for (std::size_t j = 0; j < g.n; ++j) F.values[j] *= std::polar(1.0, -s * g.u(j));
  return fourier_inverse(F);
}

Signal dilate(const Signal& f, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorKind::Domain, "dilation factor must be positive");
  Grid g{f.grid.n, f.grid.dt * a, f.grid.t0 * a};
  CVec out(f.samples);
  for (auto& x : out) x /= a;
  return Signal{g, std::move(out), f.decay_ok};
}

double lp_norm(const Signal& f, double p, NormMode mode) {
  require(p >= 1.0, ErrorKind::Domain, "lp_norm needs p >= 1");
  if (std::isinf(p)) return f.sup();
  const std::size_t n = f.size();
  if (n == 0) return 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += std::pow(std::abs(f.samples[k]), p);
  acc -= 0.5 * (std::pow(std::abs(f.samples[0]), p) + std::pow(std::abs(f.samples[n - 1]), p));
  acc *= f.grid.dt;
  if (mode == NormMode::HeavyTail) {
    // Power-law extrapolation |f|^p ~ c |t|^-q beyond each end of the grid.
    const std::size_t inset = std::max<std::size_t>(2, n / 20);
    auto tail = [&](std::size_t outer, std::size_t inner) {
      const double ga = std::pow(std::abs(f.samples[outer]), p);
      const double gb = std::pow(std::abs(f.samples[inner]), p);
      const double ta = std::abs(f.grid.t(outer)), tb = std::abs(f.grid.t(inner));
      if (ga <= 0.0 || gb <= ga || tb <= 0.0 || ta <= tb) return 0.0;
      const double q = std::log(gb / ga) / std::log(ta / tb);
      if (q <= 1.05) return 0.0;
      return ga * ta / (q - 1.0);
    };
    acc += tail(n - 1, n - 1 - inset) + tail(0, inset);
  }
  return std::pow(acc, 1.0 / p);
}

DualPairing dual_pairing(const Signal& f1, const Signal& f2) {
  require_same_grid(f1, f2);
  const Grid& g = f1.grid;
  cplx direct = 0.0;
  for (std::size_t k = 0; k < g.n; ++k) direct += f1.samples[k] * f2.samples[k];
  direct *= g.dt;
  const Spectrum a = fourier_forward(f1), b = fourier_forward(f2);
  cplx spec = 0.0;
  for (std::size_t j = 0; j < g.n; ++j) spec += a.values[j] * b.values[(g.n - j) % g.n];
  spec *= g.du() / kTwoPi;
  return {direct, spec};
}

Signal multiply(const Signal& a, const Signal& b) {
  require_same_grid(a, b);
  CVec v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.samples[k] * b.samples[k];
  Signal s{a.grid, std::move(v), a.decay_ok || b.decay_ok};
  s.refresh_decay();
  return s;
}

Signal add(const Signal& a, const Signal& b) {
  require_same_grid(a, b);
  CVec v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.samples[k] + b.samples[k];
  Signal s{a.grid, std::move(v), false};
  s.refresh_decay();
  return s;
}

Signal scale(const Signal& a, cplx c) {
  Signal s = a;
  for (auto& x : s.samples) x *= c;
  return s;
}

double max_abs_diff(const Signal& a, const Signal& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.samples[k] - b.samples[k]));
  return m;
}

}  // namespace hpcalc

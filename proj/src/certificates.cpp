// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hpcalc/fft.hpp"
#include "hpcalc/io.hpp"
#include "hpcalc/quadrature.hpp"

namespace hpcalc {

namespace {

// Zero-padded sum of convolutions, placed back on the shared grid.
Signal convolve_sum(const std::vector<CertificatePair>& pairs, const Grid& g) {
  const std::size_t n = g.n, m = 2 * n;
  CVec acc(m, cplx(0.0)), a(m), b(m);
  for (const auto& p : pairs) {
    std::fill(a.begin(), a.end(), cplx(0.0));
    std::fill(b.begin(), b.end(), cplx(0.0));
    std::copy(p.f.samples.begin(), p.f.samples.end(), a.begin());
    std::copy(p.h.signal.samples.begin(), p.h.signal.samples.end(), b.begin());
    dft_inplace(a, -1);
    dft_inplace(b, -1);
    for (std::size_t j = 0; j < m; ++j) acc[j] += a[j] * b[j];
  }
  dft_inplace(acc, +1);
  const long shift = std::lround(-g.t0 / g.dt);
  CVec out(n, cplx(0.0));
  const double w = g.dt / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    const long idx = static_cast<long>(i) + shift;
    if (idx >= 0 && idx < static_cast<long>(m) - 1) out[i] = acc[static_cast<std::size_t>(idx)] * w;
  }
  Signal s{g, std::move(out), false};
  s.refresh_decay();
  return s;
}

double l1(const Signal& s) { return lp_norm(s, 1.0); }

}  // namespace

const Grid& DecompositionCertificate::grid() const {
  if (!pairs.empty()) return pairs.front().f.grid;
  if (target) return target->grid;
  fail(ErrorKind::Configuration, "empty certificate has no grid");
}

double DecompositionCertificate::value() const {
  double v = 0.0;
  for (const auto& p : pairs) v += p.f.sup() * l1(p.h.signal);
  return v;
}

double cert_value(const DecompositionCertificate& c) { return c.value(); }

double spectral_extent(const Signal& s, double rel_tol) {
  const Spectrum S = fourier_forward(s);
  double top = 0.0;
  for (const auto& v : S.values) top = std::max(top, std::abs(v));
  double extent = 0.0;
  for (std::size_t j = 0; j < S.values.size(); ++j)
    if (std::abs(S.values[j]) > rel_tol * top) extent = std::max(extent, std::abs(S.u(j)));
  return extent;
}

double cert_spectral_extent(const DecompositionCertificate& c, double rel_tol) {
  double e = 0.0;
  for (const auto& p : c.pairs) e = std::max({e, spectral_extent(p.f, rel_tol), spectral_extent(p.h.signal, rel_tol)});
  return e;
}

DecompositionCertificate make_certificate(std::vector<CertificatePair> pairs, std::optional<Signal> target) {
  DecompositionCertificate c;
  for (const auto& p : pairs) {
    require(p.f.grid.same_as(p.h.signal.grid), ErrorKind::Configuration, "certificate pair on mismatched grids");
    require(p.f.grid.same_as(pairs.front().f.grid), ErrorKind::Configuration, "certificate pairs on different grids");
    if (p.h.defect > kCertHardyTol) fail(ErrorKind::Domain, "certificate h-factor is not Hardy", p.h.defect);
  }
  c.pairs = std::move(pairs);
  c.target = std::move(target);
  if (c.target) c.residual = c.pairs.empty() ? c.target->sup() : max_abs_diff(cert_reconstruct(c), *c.target);
  return c;
}

Signal cert_reconstruct(const DecompositionCertificate& c) {
  if (c.pairs.empty()) return Signal::zeros(c.grid());
  return convolve_sum(c.pairs, c.grid());
}

Spectrum cert_spectrum(const DecompositionCertificate& c) {
  const Grid& g = c.grid();
  Spectrum acc{g, CVec(g.n, cplx(0.0))};
  for (const auto& p : c.pairs) {
    const Spectrum a = fourier_forward(p.f), b = fourier_forward(p.h.signal);
    for (std::size_t j = 0; j < g.n; ++j) acc.values[j] += a.values[j] * b.values[j];
  }
  return acc;
}

DecompositionCertificate product_cert(const DecompositionCertificate& c1, const DecompositionCertificate& c2,
                                      ProductOptions opt) {
  require(opt.s_stride >= 1, ErrorKind::Configuration, "s_stride must be positive");
  if (c1.empty() || c2.empty()) {
    DecompositionCertificate e;
    if (!c1.empty()) e.target = Signal::zeros(c1.grid());
    if (!c2.empty()) e.target = Signal::zeros(c2.grid());
    return e;
  }
  const Grid& g = c1.grid();
  require(g.same_as(c2.grid()), ErrorKind::Configuration, "product of certificates on different grids");
  const long n = static_cast<long>(g.n);
  const double ds = opt.s_stride * g.dt;
  const double scale = c1.value() * c2.value();
  double dropped = 0.0;
  std::vector<CertificatePair> out;
  CVec phi(g.n), psi(g.n);
  for (const auto& p1 : c1.pairs) {
    for (const auto& p2 : c2.pairs) {
      const CVec& f1 = p1.f.samples;
      const CVec& f2 = p2.f.samples;
      const CVec& h1 = p1.h.signal.samples;
      const CVec& h2 = p2.h.signal.samples;
      for (long m = -((n - 1) / opt.s_stride) * opt.s_stride; m < n; m += opt.s_stride) {
        // phi_s(t) = f1(t) f2(t - s), psi_s(t) = h1(t) h2(t + s) ds with s = m dt
        double fsup = 0.0, hl1 = 0.0;
        for (long k = 0; k < n; ++k) {
          const long a = k - m, b = k + m;
          phi[k] = (a >= 0 && a < n) ? f1[k] * f2[a] : cplx(0.0);
          psi[k] = (b >= 0 && b < n) ? h1[k] * h2[b] * ds : cplx(0.0);
          fsup = std::max(fsup, std::abs(phi[k]));
          hl1 += std::abs(psi[k]);
        }
        hl1 *= g.dt;
        const double contrib = fsup * hl1;
        if (contrib == 0.0) continue;
        if (contrib <= opt.drop_tol * scale) {
          dropped += contrib;
          continue;
        }
        Signal hs{g, psi, false};
        hs.refresh_decay();
        const double d = analyticity_defect(hs);
        if (d > kCertHardyTol) fail(ErrorKind::Accuracy, "product h-factor lost analyticity", d);
        Signal fs{g, phi, false};
        fs.refresh_decay();
        out.push_back({std::move(fs), HardySignal{std::move(hs), d}});
      }
    }
  }
  if (dropped > opt.tail_tol * scale) {
    std::ostringstream msg;
    msg << "product certificate s-truncation dropped " << dropped;
    fail(ErrorKind::Truncation, msg.str(), dropped);
  }
  Signal target = multiply(cert_reconstruct(c1), cert_reconstruct(c2));
  DecompositionCertificate c = make_certificate(std::move(out), std::move(target));
  c.truncation_defect = dropped;
  return c;
}

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 1.0 / (1.0 + std::exp(1.0 / x - 1.0 / (1.0 - x)));
}

double smooth_bump(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp(4.0 - 1.0 / (x * (1.0 - x)));
}

RealFn plateau_window(double lo, double hi, double ramp_lo, double ramp_hi) {
  require(ramp_lo > 0.0 && ramp_hi > 0.0 && hi >= lo, ErrorKind::Configuration, "bad window geometry");
  return [=](double u) {
    if (u <= lo) return smooth_step((u - (lo - ramp_lo)) / ramp_lo);
    if (u <= hi) return 1.0;
    return 1.0 - smooth_step((u - hi) / ramp_hi);
  };
}

DecompositionCertificate laplace_cert(const Grid& g, const ComplexFn& b, const RealFn& window,
                                      LaplaceCertOptions opt) {
  g.validate();
  Spectrum B{g, CVec(g.n, cplx(0.0))}, C{g, CVec(g.n, cplx(0.0))};
  double mass = 0.0, leak = 0.0;
  for (std::size_t j = g.zero_bin() + 1; j < g.n; ++j) {
    const double u = g.u(j);
    B.values[j] = b(u);
    const double c = window(u);
    if (c < 0.0) fail(ErrorKind::Configuration, "window must be non-negative");
    C.values[j] = kTwoPi * c;
    mass += std::abs(B.values[j]);
    leak += std::abs(B.values[j]) * std::abs(1.0 - c);
  }
  mass *= g.du();
  leak *= g.du();
  Spectrum T = B;
  for (auto& x : T.values) x *= kTwoPi;
  Signal target = fourier_inverse(T);
  if (mass == 0.0) {
    DecompositionCertificate e;
    e.target = std::move(target);
    return e;
  }
  if (leak > opt.leakage_tol * mass) {
    std::ostringstream msg;
    msg << "density has mass " << leak << " outside the window plateau";
    fail(ErrorKind::Accuracy, msg.str(), leak);
  }
  Signal f = fourier_inverse(B);
  HardySignal h = HardySignal::adopt(fourier_inverse(C), kCertHardyTol);
  std::vector<CertificatePair> pairs;
  pairs.push_back({std::move(f), std::move(h)});
  DecompositionCertificate c = make_certificate(std::move(pairs), std::move(target));
  c.truncation_defect = leak;
  c.density_l1 = mass;
  return c;
}

DecompositionCertificate unit_cert(const Grid& g, double N, double delta, double cutoff) {
  require(N > 0.0 && delta > 0.0 && cutoff > delta, ErrorKind::Configuration, "bad approximate unit parameters");
  require(1.5 * cutoff + 0.5 * cutoff < kPi / g.dt, ErrorKind::Configuration, "approximate unit cutoff beyond grid band");
  const RealFn cut = plateau_window(delta, cutoff, 0.5 * delta, 0.5 * cutoff);
  const RealFn window = plateau_window(0.5 * delta, 1.5 * cutoff, 0.5 * delta, 0.5 * cutoff);
  auto b = [=](double u) { return cplx(N * std::exp(-N * u) * cut(u)); };
  DecompositionCertificate c = laplace_cert(g, b, window);
  auto lost = [=](double u) { return N * std::exp(-N * u) * (1.0 - cut(u)); };
  double defect = integrate_adaptive(lost, 0.0, delta, 1e-15, 0.0);
  defect += integrate_adaptive(lost, cutoff, 2.0 * cutoff, 1e-15, 0.0);
  defect += std::exp(-N * 2.0 * cutoff);
  c.truncation_defect = defect;
  c.target = Signal::sample(g, [=](double u) { return N / cplx(N, -u); }, 1.0);
  c.residual = max_abs_diff(cert_reconstruct(c), *c.target);
  return c;
}

DecompositionCertificate unit_for(const DecompositionCertificate& cert, double N, double delta) {
  // Product spectra add supports, so the unit window must fit in what the certificate leaves free.
  const Grid& g = cert.grid();
  const double room = kPi / g.dt - cert_spectral_extent(cert);
  require(room > 0.0, ErrorKind::Configuration, "certificate leaves no spectral room for an approximate unit");
  const double cutoff = std::min(40.0 / N, 0.45 * room);
  require(cutoff > delta, ErrorKind::Configuration, "approximate unit cutoff below delta");
  return unit_cert(g, N, delta, cutoff);
}

ApproxUnitReport approx_unit_test(const DecompositionCertificate& cert, const std::vector<double>& N_list,
                                  double delta, ProductOptions opt) {
  ApproxUnitReport r;
  const Signal F = cert_reconstruct(cert);
  r.f_sup = F.sup();
  for (double N : N_list) {
    DecompositionCertificate U = unit_for(cert, N, delta);
    DecompositionCertificate P = product_cert(cert, U, opt);
    const Signal FP = cert_reconstruct(P);
    const Signal u = cert_reconstruct(U);
    CVec direct(F.size()), closed(F.size());
    for (std::size_t k = 0; k < F.size(); ++k) {
      direct[k] = F.samples[k] * u.samples[k];
      closed[k] = F.samples[k] * U.target->samples[k];
    }
    r.N.push_back(N);
    r.product_value.push_back(P.value());
    r.value_bound.push_back(cert.value() * U.value());
    r.sup_error.push_back(max_abs_diff(FP, F));
    r.identity_error.push_back(max_abs_diff(Signal::from_samples(F.grid, std::move(closed), 1.0), F));
    r.product_error.push_back(max_abs_diff(FP, Signal::from_samples(F.grid, std::move(direct), 1.0)));
    r.unit_residual.push_back(U.residual);
    r.unit_defect.push_back(U.truncation_defect);
  }
  return r;
}

void save_certificate(const std::string& path, const DecompositionCertificate& c) {
  namespace fs = std::filesystem;
  const fs::path index(path);
  const std::string stem = index.stem().string();
  const fs::path dir = index.parent_path();
  nlohmann::ordered_json j;
  j["format"] = "hpcalc-certificate";
  j["value"] = c.value();
  j["residual"] = c.residual;
  j["truncation_defect"] = c.truncation_defect;
  if (c.density_l1 > 0.0) {
    j["density_l1"] = c.density_l1;
    j["value_minus_density_l1"] = c.value() - c.density_l1;
  }
  auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < c.pairs.size(); ++k) {
    const std::string f = stem + ".f" + std::to_string(k) + ".sig";
    const std::string h = stem + ".h" + std::to_string(k) + ".sig";
    save_signal((dir / f).string(), c.pairs[k].f);
    save_signal((dir / h).string(), c.pairs[k].h.signal, c.pairs[k].h.defect);
    pairs.push_back({{"f", f}, {"h", h}, {"f_sup", c.pairs[k].f.sup()}, {"h_l1", lp_norm(c.pairs[k].h.signal, 1.0)}});
  }
  if (c.target) {
    const std::string t = stem + ".target.sig";
    save_signal((dir / t).string(), *c.target);
    j["target"] = t;
  } else {
    j["target"] = nullptr;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write certificate " + path);
  out << j.dump(2) << "\n";
}

DecompositionCertificate load_certificate(const std::string& path) {
  namespace fs = std::filesystem;
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read certificate " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::Io, std::string("malformed certificate JSON: ") + e.what());
  }
  if (j.value("format", "") != "hpcalc-certificate") fail(ErrorKind::Io, "not a certificate file: " + path);
  const fs::path dir = fs::path(path).parent_path();
  std::vector<CertificatePair> pairs;
  for (const auto& p : j.at("pairs")) {
    Signal f = load_signal((dir / p.at("f").get<std::string>()).string());
    HardySignal h = HardySignal::adopt(load_signal((dir / p.at("h").get<std::string>()).string()), kCertHardyTol);
    pairs.push_back({std::move(f), std::move(h)});
  }
  std::optional<Signal> target;
  if (j.contains("target") && !j["target"].is_null())
    target = load_signal((dir / j["target"].get<std::string>()).string());
  DecompositionCertificate c = make_certificate(std::move(pairs), std::move(target));
  c.truncation_defect = j.value("truncation_defect", 0.0);
  c.density_l1 = j.value("density_l1", 0.0);
  return c;
}

}  // namespace hpcalc

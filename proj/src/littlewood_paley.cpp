// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/littlewood_paley.hpp"

#include <cmath>
#include <sstream>

namespace hpcalc {

LittlewoodPaleyFamily::LittlewoodPaleyFamily(bool sharp, int k_min, int k_max)
    : sharp_(sharp), k_min_(k_min), k_max_(k_max), rise_(sharp ? 1.0 + std::log2(0.75) : 1.0) {
  require(k_min <= k_max, ErrorKind::Configuration, "empty Littlewood-Paley range");
}

double LittlewoodPaleyFamily::psi(double u) const {
  if (!(u > 0.0)) return 0.0;
  const double x = std::log2(u);
  if (x <= -1.0 || x >= rise_) return 0.0;
  if (x < -1.0 + rise_) return smooth_step((x + 1.0) / rise_);
  if (x <= 0.0) return 1.0;
  return 1.0 - smooth_step(x / rise_);
}

double LittlewoodPaleyFamily::psi_k(int k, double u) const { return psi(std::ldexp(u, -k)); }

double LittlewoodPaleyFamily::psi_cover(int k, double u) const {
  return psi_k(k - 1, u) + psi_k(k, u) + psi_k(k + 1, u);
}

Signal LittlewoodPaleyFamily::kernel(int k, const Grid& g) const {
  return fourier_inverse(Spectrum::sample(g, [&](double u) { return cplx(psi_k(k, u)); }));
}

Signal LittlewoodPaleyFamily::cover_kernel(int k, const Grid& g) const {
  return fourier_inverse(Spectrum::sample(g, [&](double u) { return cplx(psi_cover(k, u)); }));
}

double LittlewoodPaleyFamily::kernel_l1(int k) const {
  const std::size_t n = std::size_t{1} << 16;
  const double dt0 = kPi / 16.0;
  Grid g{n, std::ldexp(dt0, -k), std::ldexp(-static_cast<double>(n / 2) * dt0, -k)};
  return lp_norm(kernel(k, g), 1.0);
}

std::vector<std::pair<int, Signal>> besov_blocks(const Signal& F, const LittlewoodPaleyFamily& fam) {
  const Spectrum S = fourier_forward(F);
  const Grid& g = F.grid;
  double total = 0.0;
  for (const auto& x : S.values) total += std::abs(x);
  std::vector<std::pair<int, Signal>> out;
  for (int k = fam.k_min(); k <= fam.k_max(); ++k) {
    Spectrum B{g, CVec(g.n, cplx(0.0))};
    double mass = 0.0;
    for (std::size_t j = g.zero_bin() + 1; j < g.n; ++j) {
      const double w = fam.psi_k(k, g.u(j));
      if (w == 0.0) continue;
      B.values[j] = S.values[j] * w;
      mass += std::abs(B.values[j]);
    }
    if (mass <= 1e-13 * total) continue;
    out.emplace_back(k, fourier_inverse(B));
  }
  return out;
}

BesovResult besov_norm(const Signal& F, const LittlewoodPaleyFamily& fam, BesovOptions opt) {
  BesovResult r;
  const Grid& g = F.grid;
  auto blocks = besov_blocks(F, fam);
  Signal sum = Signal::zeros(g);
  for (auto& [k, b] : blocks) {
    r.k.push_back(k);
    r.block_sup.push_back(b.sup());
    r.norm += b.sup();
    for (std::size_t i = 0; i < g.n; ++i) sum.samples[i] += b.samples[i];
  }
  // Spectral content not covered by the retained blocks bounds the sup-norm remainder.
  const Spectrum S = fourier_forward(F);
  std::vector<bool> kept(static_cast<std::size_t>(fam.k_max() - fam.k_min() + 1), false);
  for (int k : r.k) kept[static_cast<std::size_t>(k - fam.k_min())] = true;
  double tail = 0.0;
  for (std::size_t j = 0; j < g.n; ++j) {
    const double u = g.u(j);
    double covered = 0.0;
    if (j > g.zero_bin())
      for (int k = fam.k_min(); k <= fam.k_max(); ++k)
        if (kept[static_cast<std::size_t>(k - fam.k_min())]) covered += fam.psi_k(k, u);
    tail += std::abs(S.values[j]) * std::abs(1.0 - covered);
  }
  r.tail = tail * g.du() / kTwoPi;
  r.reconstruction_residual = max_abs_diff(sum, F);
  const double sup = F.sup();
  if (r.tail > opt.tail_tol * std::max(sup, 1e-300) && sup > 0.0) {
    std::ostringstream msg;
    msg << "Besov tail " << r.tail << " exceeds tolerance; widen k_range [" << fam.k_min() << ", " << fam.k_max()
        << "] or remove spectrum at u <= 0";
    fail(ErrorKind::Truncation, msg.str(), r.tail);
  }
  return r;
}

DecompositionCertificate besov_to_a_cert(const Signal& F, const LittlewoodPaleyFamily& fam, BesovOptions opt) {
  besov_norm(F, fam, opt);
  std::vector<CertificatePair> pairs;
  for (auto& [k, b] : besov_blocks(F, fam)) {
    HardySignal h = HardySignal::adopt(fam.cover_kernel(k, F.grid), kCertHardyTol);
    pairs.push_back({std::move(b), std::move(h)});
  }
  return make_certificate(std::move(pairs), F);
}

}  // namespace hpcalc

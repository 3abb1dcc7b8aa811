// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/random_models.hpp"

#include <cmath>
#include <random>

#include "hpcalc/parallel.hpp"

namespace hpcalc {

namespace {

Matrix gaussian_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Matrix M(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) M(i, j) = cplx(nd(rng), nd(rng)) * std::sqrt(0.5);
  return M;
}

CVector random_spectrum(int d, std::mt19937_64& rng, const GeneratorModel& m) {
  std::uniform_real_distribution<double> re(m.re_min, m.re_max), im(-m.im_max, m.im_max);
  CVector D(d);
  for (int i = 0; i < d; ++i) D(i) = cplx(re(rng), im(rng));
  return D;
}

Spectrum bump_spectrum(const Grid& g, std::mt19937_64& rng, int bumps, double lo, double hi) {
  std::uniform_real_distribution<double> width(1.0, 2.0), phase(0.0, kTwoPi), amp(0.5, 1.0);
  struct B {
    double c, w;
    cplx a;
  };
  std::vector<B> list;
  for (int i = 0; i < bumps; ++i) {
    const double w = std::min(width(rng), hi - lo);
    std::uniform_real_distribution<double> centre(lo + 0.5 * w, hi - 0.5 * w);
    list.push_back({centre(rng), w, std::polar(amp(rng), phase(rng))});
  }
  return Spectrum::sample(g, [&](double u) {
    cplx s = 0.0;
    for (const auto& b : list) s += b.a * smooth_bump((u - b.c) / b.w + 0.5);
    return s;
  });
}

}  // namespace

Matrix random_generator_matrix(int d, std::uint64_t seed, GeneratorModel model) {
  require(d >= 1, ErrorKind::Configuration, "dimension must be positive");
  std::mt19937_64 rng(seed);
  const CVector D = random_spectrum(d, rng, model);
  const Matrix V = Matrix::Identity(d, d) + model.coupling * gaussian_matrix(d, rng);
  return V * D.asDiagonal() * V.inverse();
}

Matrix random_normal_generator(int d, std::uint64_t seed, GeneratorModel model) {
  require(d >= 1, ErrorKind::Configuration, "dimension must be positive");
  std::mt19937_64 rng(seed);
  const CVector D = random_spectrum(d, rng, model);
  Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(d, rng));
  const Matrix U = qr.householderQ();
  return U * D.asDiagonal() * U.adjoint();
}

Grid standard_grid(std::size_t n, double dt) {
  Grid g{n, dt, -static_cast<double>(n / 2) * dt};
  g.validate();
  return g;
}

Signal random_bandlimited(const Grid& g, std::uint64_t seed, int bumps, double umax) {
  std::mt19937_64 rng(seed);
  Signal f = fourier_inverse(bump_spectrum(g, rng, bumps, -umax, umax));
  return scale(f, 1.0 / f.sup());
}

HardySignal random_hardy(const Grid& g, std::uint64_t seed, int bumps, double umin, double umax) {
  require(umin > 0.0 && umax > umin, ErrorKind::Configuration, "Hardy band must lie in (0, inf)");
  std::mt19937_64 rng(seed);
  Signal h = fourier_inverse(bump_spectrum(g, rng, bumps, umin, umax));
  return HardySignal::adopt(scale(h, 1.0 / lp_norm(h, 1.0)));
}

DecompositionCertificate random_certificate(const Grid& g, std::uint64_t seed, int pairs) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  std::vector<double> w(static_cast<std::size_t>(pairs));
  double total = 0.0;
  for (auto& x : w) total += (x = weight(rng));
  std::vector<CertificatePair> list;
  for (int k = 0; k < pairs; ++k) {
    Signal f = random_bandlimited(g, split_seed(seed, static_cast<std::uint64_t>(k), 1));
    HardySignal h = random_hardy(g, split_seed(seed, static_cast<std::uint64_t>(k), 2));
    h.signal = scale(h.signal, w[static_cast<std::size_t>(k)] / total);
    list.push_back({std::move(f), std::move(h)});
  }
  return make_certificate(std::move(list));
}

}  // namespace hpcalc

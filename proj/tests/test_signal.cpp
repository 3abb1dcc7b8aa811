#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "hpcalc/io.hpp"
#include "hpcalc/quadrature.hpp"
#include "hpcalc/signal.hpp"

using namespace hpcalc;

namespace {

cplx direct_transform(const Signal& f, double u) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += f.samples[k] * std::exp(cplx(0.0, -u * f.grid.t(k)));
  return acc * f.grid.dt;
}

Signal gaussian(const Grid& g, double sigma, double center = 0.0) {
  return Signal::sample(g, [=](double t) {
    const double x = (t - center) / sigma;
    return cplx(std::exp(-0.5 * x * x) / (sigma * std::sqrt(kTwoPi)));
  });
}

Signal random_bumps(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> c(-5.0, 5.0), w(0.5, 2.0), a(-1.0, 1.0);
  std::vector<std::tuple<double, double, cplx>> bumps;
  for (int i = 0; i < 3; ++i) bumps.emplace_back(c(rng), w(rng), cplx(a(rng), a(rng)));
  return Signal::sample(g, [=](double t) {
    cplx acc = 0.0;
    for (auto [cc, ww, aa] : bumps) acc += aa * std::exp(-(t - cc) * (t - cc) / (ww * ww));
    return acc;
  });
}

}  // namespace

TEST_CASE("grid validation rejects non power of two sizes") {
  CHECK_THROWS_AS(Grid::centered(1000, 0.1).validate(), Error);
  CHECK_NOTHROW(Grid::centered(1024, 0.1).validate());
  const Grid g = Grid::centered(1024, 0.5);
  CHECK(std::abs(g.u(g.zero_bin())) < 1e-12);
}

TEST_CASE("forward transform of an indicator has unit mass at zero") {
  const Grid g{1024, 1.0 / 64.0, -4.0};
  const Signal f = Signal::sample(g, [](double t) { return cplx(t >= 0.0 && t < 1.0 ? 1.0 : 0.0); });
  const Spectrum F = fourier_forward(f);
  CHECK(std::abs(F.values[g.zero_bin()] - 1.0) < 1e-12);
}

TEST_CASE("forward transform of zero is zero") {
  const Grid g = Grid::centered(256, 0.1);
  for (const cplx& v : fourier_forward(Signal::zeros(g)).values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("two-sided exponential matches a direct Riemann sum") {
  const Grid g = Grid::centered(8192, 80.0 / 8192);
  const Signal f = Signal::sample(g, [](double t) { return cplx(std::exp(-std::abs(t))); }, 1e-12);
  const Spectrum F = fourier_forward(f);
  double worst = 0.0, worst_closed = 0.0;
  for (std::size_t j = 0; j < g.n; ++j) {
    const double u = g.u(j);
    if (std::abs(u) > 4.0) continue;
    worst = std::max(worst, std::abs(F.values[j] - direct_transform(f, u)));
    worst_closed = std::max(worst_closed, std::abs(F.values[j] - 2.0 / (1.0 + u * u)));
  }
  CHECK(worst < 1e-9);
  CHECK(worst_closed < 1e-3);  // trapezoid on a kink at t = 0 costs O(dt^2)
}

TEST_CASE("round trip and inverse of a one-sided exponential spectrum") {
  const Grid g = Grid::centered(16384, 0.05);
  const Signal f = random_bumps(g, 3);
  CHECK(max_abs_diff(fourier_inverse(fourier_forward(f)), f) < 1e-12);

  const Spectrum E = Spectrum::sample(g, [](double u) { return cplx(u > 0.0 ? std::exp(-u) : (u == 0.0 ? 0.5 : 0.0)); });
  const Signal e = fourier_inverse(E, 1.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.n; ++k) {
    const double t = g.t(k);
    if (std::abs(t) > 20.0) continue;
    worst = std::max(worst, std::abs(e.samples[k] - 1.0 / (kTwoPi * cplx(1.0, -t))));
  }
  CHECK(worst < 1e-4);
  CHECK(fourier_inverse(Spectrum{g, CVec(g.n)}).sup() == 0.0);
}

TEST_CASE("Plancherel and translation phase") {
  const Grid g = Grid::centered(4096, 0.05);
  const Signal f = random_bumps(g, 11);
  const Spectrum F = fourier_forward(f);
  double e_time = 0.0, e_freq = 0.0;
  for (const cplx& v : f.samples) e_time += std::norm(v) * g.dt;
  for (const cplx& v : F.values) e_freq += std::norm(v) * g.du();
  CHECK(std::abs(e_freq - kTwoPi * e_time) <= 1e-10 * e_freq);

  const double s = 0.37;
  const Spectrum T = fourier_forward(translate(f, s));
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n; ++j)
    worst = std::max(worst, std::abs(T.values[j] - std::exp(cplx(0.0, -s * g.u(j))) * F.values[j]));
  CHECK(worst < 1e-10 * std::max(1.0, F.values[g.zero_bin()].real()));
}

TEST_CASE("gaussian convolution adds variances") {
  const Grid g = Grid::centered(4096, 0.02);
  const Signal a = gaussian(g, 0.7), b = gaussian(g, 1.1);
  const Signal c = convolve(a, b);
  const Signal expect = gaussian(g, std::hypot(0.7, 1.1));
  CHECK(max_abs_diff(c, expect) < 1e-8);
  CHECK(max_abs_diff(c, convolve(b, a)) < 1e-12);

  const double sigma = 0.05;
  const Signal f = random_bumps(g, 5);
  double curvature = 0.0;
  for (std::size_t k = 1; k + 1 < g.n; ++k)
    curvature = std::max(curvature, std::abs(f.samples[k + 1] - 2.0 * f.samples[k] + f.samples[k - 1]) / (g.dt * g.dt));
  CHECK(max_abs_diff(convolve(f, gaussian(g, sigma)), f) <= sigma * sigma * curvature);
}

TEST_CASE("convolution against a coarse direct double sum") {
  const Grid g = Grid::centered(256, 0.1);
  const Signal a = random_bumps(g, 1), b = gaussian(g, 0.8, 1.0);
  const Signal c = convolve(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.n; k += 7) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) {
      const double s = g.t(k) - g.t(j);
      const double x = (s - 1.0) / 0.8;
      acc += a.samples[j] * std::exp(-0.5 * x * x) / (0.8 * std::sqrt(kTwoPi)) * g.dt;
    }
    worst = std::max(worst, std::abs(c.samples[k] - acc));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("strict convolution needs a decaying factor") {
  const Grid g = Grid::centered(512, 0.1);
  const Signal wave = Signal::sample(g, [](double t) { return std::exp(cplx(0.0, t)); });
  CHECK_FALSE(wave.decay_ok);
  CHECK_THROWS_AS(convolve(wave, wave, {.strict = true}), Error);
  CHECK_NOTHROW(convolve(wave, gaussian(g, 1.0), {.strict = true}));
}

TEST_CASE("translate and dilate preserve norms") {
  const Grid g = Grid::centered(8192, 0.01);
  const Signal f = random_bumps(g, 8);
  CHECK(max_abs_diff(translate(f, 0.0), f) < 1e-14);
  CHECK(max_abs_diff(dilate(f, 1.0), f) < 1e-14);
  CHECK(lp_norm(translate(f, 0.5), 2.0) == doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-10));
  const Grid coarse = Grid::centered(4096, 0.02);
  const Signal h = gaussian(coarse, 0.5);
  CHECK(lp_norm(dilate(h, 3.0), 1.0) == doctest::Approx(lp_norm(h, 1.0)).epsilon(1e-10));
  CHECK_THROWS_AS(dilate(f, 0.0), Error);
}

TEST_CASE("lp norms of simple signals") {
  const Grid g{1024, 1.0 / 64.0, -4.0};
  CHECK(lp_norm(Signal::zeros(g), 1.0) == 0.0);
  CHECK(lp_norm(Signal::zeros(g), INFINITY) == 0.0);
  const Signal box = Signal::sample(g, [](double t) { return cplx(t >= 0.0 && t < 1.0 ? 1.0 : 0.0); });
  CHECK(lp_norm(box, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  const Grid wide = Grid::centered(1 << 20, 2000.0 / (1 << 20));
  const Signal h = Signal::sample(wide, [](double t) { return 1.0 / ((t + cplx(0, 1)) * (t + cplx(0, 1))); }, 1.0);
  const double oracle =
      2.0 * integrate_adaptive([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, 1000.0, 1e-13, 0.0);
  CHECK(std::abs(oracle - kPi) < 2.1e-3);
  CHECK(std::abs(lp_norm(h, 1.0, NormMode::HeavyTail) - kPi) < 1e-4);
  CHECK(std::abs(lp_norm(h, 1.0) - oracle) < 1e-6);
}

TEST_CASE("duality identity on random pairs") {
  const Grid g = Grid::centered(4096, 0.05);
  const Signal a = gaussian(g, 1.0);
  const DualPairing d = dual_pairing(a, a);
  const double direct = integrate_adaptive(
      [](double t) { return std::exp(-t * t) / kTwoPi; }, -40.0, 40.0, 1e-14, 0.0);
  CHECK(std::abs(d.time_side - direct) < 1e-12);
  CHECK(std::abs(d.frequency_side - direct) < 1e-12);
  CHECK(std::abs(dual_pairing(a, Signal::zeros(g)).time_side) == 0.0);

  for (std::uint64_t s = 0; s < 5; ++s) {
    const DualPairing r = dual_pairing(random_bumps(g, 100 + s), random_bumps(g, 200 + s));
    CHECK(std::abs(r.time_side - r.frequency_side) <= 1e-8 * std::max(1.0, std::abs(r.time_side)));
  }
}

TEST_CASE("signal text format round trips") {
  const Grid g = Grid::centered(64, 0.25);
  const Signal f = random_bumps(g, 9);
  std::stringstream ss;
  write_signal(ss, f, 1e-11);
  double defect = 0.0;
  const Signal back = read_signal(ss, &defect);
  CHECK(back.grid.same_as(g));
  CHECK(defect == 1e-11);
  CHECK(max_abs_diff(back, f) == 0.0);

  std::stringstream bad("0 0.1 3\n0 1 0\n");
  CHECK_THROWS_AS(read_signal(bad), Error);
}

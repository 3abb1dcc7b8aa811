#include <doctest.h>

#include <cmath>

#include "hpcalc/hardy.hpp"
#include "hpcalc/quadrature.hpp"
#include "hpcalc/random_models.hpp"

using namespace hpcalc;

namespace {

const cplx I(0.0, 1.0);

Signal inv_square(const Grid& g) {
  return Signal::sample(g, [](double t) { return 1.0 / ((t + I) * (t + I)); }, 1.0);
}

}  // namespace

TEST_CASE("riesz projection of a Lorentzian") {
  const Grid g = Grid::centered(1 << 16, 0.05);
  const Signal f = Signal::sample(g, [](double t) { return cplx(1.0 / (1.0 + t * t)); }, 1.0);
  const HardySignal q = riesz_project(f);
  CHECK(q.defect <= kHardyTol);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.n; ++k)
    if (std::abs(g.t(k)) < 20.0) worst = std::max(worst, std::abs(q.signal.samples[k] - 0.5 / (1.0 - I * g.t(k))));
  CHECK(worst < 1e-3);  // the 1/t^2 tail aliases on a finite window
  CHECK(max_abs_diff(riesz_project(q.signal).signal, q.signal) < 1e-12);
  CHECK(lp_norm(q.signal, 2.0) <= lp_norm(f, 2.0) * (1.0 + 1e-10));
}

TEST_CASE("riesz projection kills negative spectra") {
  const Grid g = Grid::centered(4096, 0.05);
  const Signal anti = Signal::sample(g, [](double t) { return std::exp(cplx(-t * t / 16.0, -3.0 * t)); });
  CHECK(riesz_project(anti).signal.sup() < 1e-12);
  CHECK(analyticity_defect(anti) > 0.99);
  CHECK_THROWS_AS(HardySignal::adopt(anti), Error);
}

TEST_CASE("hardy functions annihilate lower half plane Cauchy kernels") {
  const Grid g = standard_grid();
  for (std::uint64_t s = 0; s < 4; ++s) {
    const HardySignal h = random_hardy(g, 40 + s);
    for (cplx lambda : {cplx(0.3, -1.0), cplx(-2.0, -0.5)}) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < g.n; ++k) acc += h.signal.samples[k] / (lambda - g.t(k)) * g.dt;
      CHECK(std::abs(acc) < 1e-6);
    }
  }
}

TEST_CASE("hilbert transform of cosine and sine pair") {
  const Grid g = Grid::centered(8192, 0.05);
  const Signal f = Signal::sample(g, [](double t) { return cplx(std::exp(-t * t / 50.0) * std::cos(4.0 * t)); });
  const Signal h = hilbert_transform(f);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.n; ++k) {
    const double t = g.t(k);
    worst = std::max(worst, std::abs(h.samples[k] - std::exp(-t * t / 50.0) * std::sin(4.0 * t)));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("outer functions reproduce moduli") {
  const Grid g = Grid::centered(1 << 16, 0.05);
  SUBCASE("constant") {
    const Signal c = Signal::sample(g, [](double) { return cplx(2.5); }, 1.0);
    const HardySignal o = outer_function(c);
    for (std::size_t k = 0; k < g.n; k += 97) CHECK(std::abs(o.signal.samples[k] - 2.5) < 1e-10);
  }
  SUBCASE("cauchy kernel modulus") {
    const Signal m = Signal::sample(g, [](double t) { return cplx(1.0 / std::sqrt(1.0 + t * t)); }, 1.0);
    const HardySignal o = outer_function(m);
    CHECK(o.defect <= kHardyArithTol);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.n; ++k)
      worst = std::max(worst, std::abs(std::abs(o.signal.samples[k]) - m.samples[k].real()) / m.samples[k].real());
    CHECK(worst < 1e-6);
    const cplx eta = o.signal.samples[g.n / 2] * (g.t(g.n / 2) + I);
    CHECK(std::abs(std::abs(eta) - 1.0) < 1e-6);
  }
  SUBCASE("floor clamp at an isolated zero") {
    const Signal m = Signal::sample(g, [](double t) { return cplx(std::abs(t - 1.0) * std::exp(-t * t / 100.0)); }, 1.0);
    const double floor = 1e-8 * m.sup();
    const HardySignal o = outer_function(m, floor, 1.0);
    double lowest = INFINITY;
    for (const cplx& v : o.signal.samples) lowest = std::min(lowest, std::abs(v));
    CHECK(lowest >= floor * (1.0 - 1e-6));
  }
  SUBCASE("zero modulus") { CHECK_THROWS_AS(outer_function(Signal::zeros(g)), Error); }
}

TEST_CASE("factorization of the squared Cauchy kernel") {
  const Grid g = Grid::centered(1 << 18, 0.05);
  const HardySignal h = HardySignal::adopt(inv_square(g), kHardyArithTol);
  const H1Factorization f = factor_h1(h);
  CHECK(std::abs(f.h_norm1 - kPi) < 1e-3);
  CHECK(std::abs(f.w_norm2sq - kPi) < 1e-3);
  CHECK(std::abs(f.v_norm2sq - kPi) < 1e-3);
  CHECK(f.residual <= 1e-4);
  CHECK(std::abs(f.w_norm2sq - f.h_norm1) <= 1e-4 * f.h_norm1);
  CHECK(std::abs(f.v_norm2sq - f.h_norm1) <= 1e-4 * f.h_norm1);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.n; ++k)
    if (std::abs(g.t(k)) < 100.0)
      worst = std::max(worst, std::abs(std::abs(f.w.signal.samples[k]) - 1.0 / std::abs(g.t(k) + I)));
  CHECK(worst < 1e-3);
}

TEST_CASE("factorization of a square recovers the modulus") {
  const Grid g = standard_grid();
  const HardySignal w0 = random_hardy(g, 77);
  const HardySignal h = HardySignal::adopt(multiply(w0.signal, w0.signal), kHardyArithTol);
  FactorOptions tight;
  tight.factor_tol = 1e-8;
  const H1Factorization f = factor_h1(h, tight);
  const std::size_t step = static_cast<std::size_t>(f.refine);
  CHECK(f.w.signal.size() == g.n * step);
  const double scale = w0.signal.sup();
  double worst = 0.0;
  for (std::size_t k = 0; k < g.n; ++k)
    worst = std::max(worst, std::abs(std::abs(f.w.signal.samples[k * step]) - std::abs(w0.signal.samples[k])));
  CHECK(worst <= 1e-6);
  CHECK(worst <= 1e-5 * scale);
}

TEST_CASE("random hardy functions factor within tolerance") {
  const Grid g = standard_grid();
  for (std::uint64_t s = 0; s < 40; ++s) {
    const H1Factorization f = factor_h1(random_hardy(g, 500 + s));
    CHECK(f.residual <= 1e-4);
    CHECK(std::abs(f.w_norm2sq - f.h_norm1) <= 1e-4 * f.h_norm1);
    CHECK(std::abs(f.v_norm2sq - f.h_norm1) <= 1e-4 * f.h_norm1);
    CHECK(f.w.defect <= kHardyArithTol);
    CHECK(f.v.defect <= kHardyArithTol);
  }
}

TEST_CASE("factorization refines the grid only when needed") {
  const Grid g = standard_grid();
  FactorOptions coarse;
  coarse.max_refine = 1;
  int refined = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const HardySignal h = random_hardy(g, 500 + s);
    const H1Factorization f = factor_h1(h);
    if (f.refine == 1) {
      CHECK(factor_h1(h, coarse).residual == doctest::Approx(f.residual));
    } else {
      ++refined;
      CHECK_THROWS_AS(factor_h1(h, coarse), Error);
    }
  }
  CHECK(refined > 0);
}

TEST_CASE("poisson extension of boundary data") {
  const Grid g = Grid::centered(1 << 18, 0.05);
  SUBCASE("rational boundary function") {
    const cplx lambda(0.0, -1.0);
    const Signal F = Signal::sample(g, [=](double s) { return 1.0 / (lambda - s); }, 1.0);
    CHECK(std::abs(poisson_extend(F, 1.0) - I / 2.0) < 1e-6 * 100);
  }
  SUBCASE("laplace transform of a decaying exponential") {
    // boundary values of 1/(1+z) on z = -is
    const Signal F = Signal::sample(g, [](double s) { return 1.0 / (1.0 - I * s); }, 1.0);
    const double direct = integrate_adaptive([](double t) { return std::exp(-2.0 * t); }, 0.0, 40.0, 1e-14, 0.0);
    CHECK(std::abs(direct - 0.5) < 1e-12);
    CHECK(std::abs(poisson_extend(F, 1.0) - direct) < 1e-4);
  }
  SUBCASE("contraction and domain") {
    const Signal F = random_hardy(standard_grid(), 3).signal;
    for (double y : {0.1, 1.0, 10.0}) CHECK(std::abs(poisson_extend(F, y)) <= F.sup() * (1.0 + 1e-9));
    CHECK(std::abs(poisson_extend(F, 1e4)) < 1e-3 * F.sup());
    CHECK_THROWS_AS(poisson_extend(F, cplx(0.0, 1.0)), Error);
  }
}

TEST_CASE("rational pair density closed form") {
  const cplx lambda(0.5, -1.0);
  const cplx z(1.0, 0.3);
  const cplx integral = integrate_adaptive(
      [&](double t) { return rational_pair_density(lambda, t) * std::exp(-z * t); }, 0.0, 60.0, 1e-13, cplx(0.0));
  CHECK(std::abs(integral - I / (z + I * lambda)) < 1e-10);
}

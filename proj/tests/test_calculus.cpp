#include <doctest.h>

#include <cmath>

#include "hpcalc/calculus.hpp"
#include "hpcalc/quadrature.hpp"
#include "hpcalc/random_models.hpp"

using namespace hpcalc;

namespace {

const cplx I(0.0, 1.0);

Matrix diag(std::initializer_list<cplx> d) {
  Matrix A = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (cplx v : d) {
    A(i, i) = v;
    ++i;
  }
  return A;
}

Matrix eye(Eigen::Index d) { return Matrix::Identity(d, d); }

ExpPolynomial decaying_exp(double rate) { return ExpPolynomial{{{1.0, 0, rate}}}; }

// b supported in [lo, hi] of the frequency axis, smooth bump.
ComplexFn bump_density(double lo, double hi) {
  return [=](double u) { return cplx(smooth_bump((u - lo) / (hi - lo))); };
}

Density bump_as_density(double lo, double hi) {
  return Density{[=](double t) { return cplx(smooth_bump((t - lo) / (hi - lo))); },
                 [=](double T) { return T >= hi ? 0.0 : hi - std::max(T, lo); }};
}

// direct Riemann sum for the continuum transform at a single frequency
cplx transform_at(const Signal& f, double u) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += f.samples[k] * std::exp(-I * u * f.grid.t(k));
  return acc * f.grid.dt;
}

}  // namespace

TEST_CASE("hille phillips exactness on a diagonal generator") {
  const Generator G = certify_bound(diag({0.0, 1.0, cplx(2.0, 1.0)}));
  const CalcResult r = hille_phillips(G, decaying_exp(1.0).density());
  const Matrix expect = diag({1.0, 0.5, 1.0 / cplx(3.0, 1.0)});
  for (int j = 0; j < 3; ++j) CHECK(std::abs(r.matrix(j, j) - expect(j, j)) <= 1e-8 * std::abs(expect(j, j)));
  CHECK(op_norm(r.matrix) <= G.c_bound * 1.0 + 1e-10);
  // scalar oracle by independent quadrature
  const cplx lambda(2.0, 1.0);
  const cplx scalar =
      integrate_adaptive([&](double t) { return std::exp(-(1.0 + lambda) * t); }, 0.0, 60.0, 1e-14, cplx(0.0));
  CHECK(std::abs(scalar - expect(2, 2)) < 1e-12);
}

TEST_CASE("hille phillips on the zero generator integrates the density") {
  const Generator G = certify_bound(Matrix::Zero(2, 2));
  const CalcResult r = hille_phillips(G, decaying_exp(1.0).density());
  CHECK((r.matrix - eye(2)).norm() < 1e-10);
}

TEST_CASE("hille phillips of sampled densities") {
  const Generator G = certify_bound(random_generator_matrix(3, 5));
  const Grid half{8192, 0.01, 0.0};
  const Signal b = Signal::sample(half, [](double t) { return cplx(t * std::exp(-t)); }, 1.0);
  const CalcResult sampled = hille_phillips(G, b);
  const CalcResult exact = hille_phillips(G, ExpPolynomial{{{1.0, 1, 1.0}}}.density());
  CHECK((sampled.matrix - exact.matrix).norm() < 1e-4);
  CHECK_THROWS_AS(hille_phillips(G, Signal::zeros(Grid::centered(64, 0.1))), Error);
}

TEST_CASE("hille phillips is multiplicative over convolution") {
  for (std::uint64_t s = 0; s < 2; ++s) {
    const Generator G = certify_bound(random_generator_matrix(5, 70 + s, {0.1, 2.0, 3.0, 0.3}));
    const ExpPolynomial b1{{{1.0, 0, cplx(1.0, 0.5)}, {0.5, 1, 2.0}}};
    const ExpPolynomial b2{{{cplx(0.3, 1.0), 0, 1.5}}};
    HPOptions opt;
    opt.tol = 1e-10;
    const Matrix g1 = hille_phillips(G, b1.density(), opt).matrix;
    const Matrix g2 = hille_phillips(G, b2.density(), opt).matrix;
    const Matrix g12 = hille_phillips(G, convolve_densities(b1.density(), b2.density()), opt).matrix;
    CHECK((g12 - g1 * g2).norm() <= 1e-7);
  }
}

TEST_CASE("exp polynomial closed forms") {
  const ExpPolynomial p{{{2.0, 2, cplx(1.5, 0.5)}, {cplx(0.0, 1.0), 0, 0.7}}};
  const cplx z(0.4, -1.2);
  const cplx direct =
      integrate_adaptive([&](double t) { return p(t) * std::exp(-z * t); }, 0.0, 200.0, 1e-13, cplx(0.0));
  CHECK(std::abs(p.laplace(z) - direct) < 1e-10);
  for (double T : {1.0, 5.0, 20.0}) {
    const double tail = integrate_adaptive([&](double t) { return std::abs(p(t)); }, T, T + 200.0, 1e-13, 0.0);
    CHECK(p.tail_l1(T) >= tail * (1.0 - 1e-12));
  }
  CHECK_THROWS_AS(ExpPolynomial({{{1.0, 0, -0.5}}}).density(), Error);
}

TEST_CASE("half-plane calculus reproduces resolvent powers") {
  const Generator G = certify_bound(random_generator_matrix(4, 3));
  const Matrix R = resolvent(G, -1.0);
  const CalcResult r = halfplane_eval(G, HolomorphicSymbol::rational(-1.0, 2), -0.5);
  CHECK((r.matrix - R * R).norm() <= 1e-7);
  const CalcResult r2 = halfplane_eval(G, HolomorphicSymbol::rational(-1.0, 2), -0.25);
  CHECK((r.matrix - r2.matrix).norm() <= 1e-6);
  const CalcResult r3 = halfplane_eval(G, HolomorphicSymbol::rational(cplx(-2.0, 1.0), 3), -1.0);
  const Matrix R3 = resolvent(G, cplx(-2.0, 1.0));
  CHECK((r3.matrix - R3 * R3 * R3).norm() <= 1e-7);
}

TEST_CASE("half-plane calculus on a diagonal generator") {
  const std::vector<cplx> lambdas{0.0, 0.5, cplx(1.0, 2.0)};
  const Generator G = certify_bound(diag({lambdas[0], lambdas[1], lambdas[2]}));
  const ExpPolynomial b{{{1.0, 1, 1.0}}};
  const HolomorphicSymbol phi = HolomorphicSymbol::callback([b](cplx z) { return b.laplace(z); }, -1.0, 1.0, "test");
  const CalcResult r = halfplane_eval(G, phi, -0.5);
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    CHECK(std::abs(r.matrix(jj, jj) - 1.0 / ((1.0 + lambdas[j]) * (1.0 + lambdas[j]))) < 1e-6);
  }
}

TEST_CASE("half-plane calculus refuses symbols without decay") {
  const Generator G = certify_bound(diag({1.0}));
  const HolomorphicSymbol bounded =
      HolomorphicSymbol::callback([](cplx z) { return 1.0 / (2.0 + z); }, -2.0, std::nullopt, "bounded");
  CHECK_THROWS_AS(halfplane_eval(G, bounded, -0.5), Error);
  CHECK_THROWS_AS(halfplane_eval(G, HolomorphicSymbol::rational(-1.0, 2), G.spectral_margin + 0.1), Error);
  CHECK_THROWS_AS(halfplane_eval(G, HolomorphicSymbol::rational(-1.0, 2), -1.5), Error);
  CHECK_THROWS_AS(HolomorphicSymbol::rational(1.0, 2), Error);
  CHECK_THROWS_AS(HolomorphicSymbol::rational(-1.0, 1), Error);
  // claims decay but grows along the line
  const HolomorphicSymbol liar = HolomorphicSymbol::callback([](cplx z) { return z * z; }, -1.0, 1.0, "liar");
  CHECK_THROWS_AS(validate_decay(liar, -0.5), Error);
}

TEST_CASE("regularized calculus") {
  const Generator G = certify_bound(random_generator_matrix(4, 8));
  const Matrix R = resolvent(G, -1.0);
  const HolomorphicSymbol phi =
      HolomorphicSymbol::callback([](cplx z) { return 1.0 / ((1.0 + z) * (1.0 + z)); }, -1.0, std::nullopt, "rational");
  const CalcResult r = regularized_eval(G, phi, -2.0);
  CHECK((r.matrix - R * R).norm() <= 1e-7);

  // bounded, non-decaying symbol: L_b with b = e^{-t}
  const HolomorphicSymbol lb =
      HolomorphicSymbol::callback([](cplx z) { return 1.0 / (1.0 + z); }, -1.0, std::nullopt, "laplace");
  const Matrix m1 = regularized_eval(G, lb, -1.0).matrix;
  const Matrix m2 = regularized_eval(G, lb, -2.0).matrix;
  CHECK((m1 - m2).norm() <= 1e-6);
  CHECK((m1 - resolvent(G, -1.0) * -1.0).norm() <= 1e-6);
}

TEST_CASE("regularized calculus on a shifted generator matches hille phillips") {
  const double eps = 0.1;
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Generator G = shifted(certify_bound(random_generator_matrix(5, 90 + s)), eps);
    const ExpPolynomial b{{{1.0, 0, 1.0}}};
    const HolomorphicSymbol lb = HolomorphicSymbol::callback([b](cplx z) { return b.laplace(z); }, -1.0, 0.0, "lb");
    const Matrix hp = hille_phillips(G, b.density()).matrix;
    CHECK((regularized_eval(G, lb, -1.0).matrix - hp).norm() <= 1e-5);
    // auxiliary density c(t) = t e^{-t} has L_c = (1+z)^-2 and decays
    const ExpPolynomial c{{{1.0, 1, 1.0}}};
    const HolomorphicSymbol lc = HolomorphicSymbol::callback([c](cplx z) { return c.laplace(z); }, -1.0, 1.0, "lc");
    CHECK((halfplane_eval(G, lc, -0.5).matrix - hille_phillips(G, c.density()).matrix).norm() <= 1e-6);
  }
}

TEST_CASE("laplace symbol of a sampled density") {
  const Grid half{4096, 0.01, 0.0};
  const Signal b = Signal::sample(half, [](double t) { return cplx(std::exp(-2.0 * t)); }, 1.0);
  for (cplx z : {cplx(0.0, 0.0), cplx(1.0, 3.0), cplx(0.2, -7.0), cplx(1e-3, 1e-3)}) {
    const cplx exact = (1.0 - std::exp(-(2.0 + z) * half.length())) / (2.0 + z);
    CHECK(std::abs(laplace_piecewise_linear(b, z) - exact) < 1e-4);
  }
}

TEST_CASE("elementary calculus against a scalar oracle") {
  const Grid g = standard_grid();
  const Signal f = random_bandlimited(g, 12);
  const HardySignal h = random_hardy(g, 13);
  for (double a : {0.0, 0.7}) {
    const Generator G = certify_bound(diag({a}));
    const CalcResult r = elementary_calc(G, f, h);
    // (1/2pi) int_0^inf fhat(t) hhat(t) e^{-at} dt; hhat vanishes outside [0.25, 4]
    const double lo = 0.2, hi = 4.2;
    const int nodes = 800;
    cplx acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
      const double t = lo + (hi - lo) * (k + 0.5) / nodes;
      acc += transform_at(f, t) * transform_at(h.signal, t) * std::exp(-a * t);
    }
    acc *= (hi - lo) / nodes / kTwoPi;
    CHECK(std::abs(r.matrix(0, 0) - acc) < 1e-6);
    CHECK(std::abs(r.matrix(0, 0)) <= f.sup() * lp_norm(h.signal, 1.0) * (1.0 + 1e-3));
  }
  const Generator G = certify_bound(random_generator_matrix(3, 1));
  CHECK(elementary_calc(G, f, HardySignal{Signal::zeros(g), 0.0}).matrix.norm() == 0.0);
}

TEST_CASE("key estimate on random instances") {
  const Grid g = standard_grid();
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 12; ++s) {
    const Generator G = certify_bound(random_generator_matrix(2 + static_cast<int>(s % 7), 300 + s));
    const Signal f = random_bandlimited(g, 400 + s);
    const HardySignal h = random_hardy(g, 500 + s);
    const CalcResult r = elementary_calc(G, f, h);
    const double bound = G.c_bound * G.c_bound * f.sup() * lp_norm(h.signal, 1.0);
    worst = std::max(worst, op_norm(r.matrix) / bound);
  }
  CHECK(worst <= 1.0 + 1e-3);
}

TEST_CASE("rho0 of laplace certificates") {
  const Grid g = standard_grid();
  const Generator G = certify_bound(random_generator_matrix(3, 21));
  const DecompositionCertificate c1 = laplace_cert(g, bump_density(0.5, 3.0), plateau_window(0.5, 3.0, 0.3, 1.0));
  const DecompositionCertificate c2 = laplace_cert(g, bump_density(0.5, 3.0), plateau_window(0.4, 3.5, 0.2, 2.0));
  const Matrix hp = hille_phillips(G, bump_as_density(0.5, 3.0)).matrix;
  const CalcResult r1 = rho0(G, c1);
  CHECK((r1.matrix - hp).norm() <= 1e-5);
  CHECK((rho0(G, c2).matrix - r1.matrix).norm() <= 1e-4);
  CHECK(op_norm(r1.matrix) <= G.c_bound * G.c_bound * c1.value() * (1.0 + 1e-3));

  // the same function split smoothly across two pairs
  const ComplexFn whole = bump_density(0.5, 3.0);
  auto lower = [whole](double u) { return whole(u) * (1.0 - smooth_step((u - 1.3) / 0.4)); };
  auto upper = [whole](double u) { return whole(u) * smooth_step((u - 1.3) / 0.4); };
  const DecompositionCertificate lo = laplace_cert(g, lower, plateau_window(0.5, 1.7, 0.3, 0.5));
  const DecompositionCertificate hi = laplace_cert(g, upper, plateau_window(1.3, 3.0, 0.5, 1.0));
  std::vector<CertificatePair> both = lo.pairs;
  both.insert(both.end(), hi.pairs.begin(), hi.pairs.end());
  const DecompositionCertificate split = make_certificate(std::move(both));
  CHECK(max_abs_diff(cert_reconstruct(split), cert_reconstruct(c1)) < 1e-8);
  CHECK((rho0(G, split).matrix - r1.matrix).norm() <= 1e-4);

  CHECK(rho0(G, DecompositionCertificate{}).matrix.norm() == 0.0);
}

TEST_CASE("rho0 is multiplicative") {
  const Grid g = standard_grid();
  const Generator G = certify_bound(random_generator_matrix(3, 31, {0.1, 2.0, 3.0, 0.3}));
  const DecompositionCertificate a = random_certificate(g, 1, 1), b = random_certificate(g, 2, 1);
  const Matrix lhs = rho0(G, product_cert(a, b)).matrix;
  CHECK((lhs - rho0(G, a).matrix * rho0(G, b).matrix).norm() <= 1e-4);
}

TEST_CASE("rho0 on the shifted generator approaches rho0") {
  const Grid g = standard_grid();
  const Generator G = certify_bound(random_generator_matrix(3, 41));
  const DecompositionCertificate c = random_certificate(g, 3, 1);
  const Matrix base = rho0(G, c).matrix;
  double prev = INFINITY;
  for (double eps : {0.1, 0.01, 0.001}) {
    const double d = (rho0_shifted(G, c, eps).matrix - base).norm();
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-2 * std::max(1.0, base.norm()));
}

TEST_CASE("rho_ext extends rho0 up to the unit defect") {
  const Grid g = standard_grid();
  const Generator G = certify_bound(random_generator_matrix(3, 11, {0.05, 1.0, 1.0, 0.3}));
  const DecompositionCertificate cF = laplace_cert(g, bump_density(0.5, 4.0), plateau_window(0.5, 4.0, 0.4, 2.0));
  const Matrix r0 = rho0(G, cF).matrix;
  const Matrix one_plus = eye(3) + G.A;
  double prev = INFINITY;
  for (double delta : {1.0, 0.5}) {
    const DecompositionCertificate U = unit_for(cF, 1.0, delta);
    const CalcResult ext = rho_ext(G, cF, U);
    const double diff = (ext.matrix - r0).norm();
    // rho_ext - rho0 = -(I + A) rho0(F) rho0(E), with ||rho0(E)|| <= C ||lost density||_1
    CHECK(diff <= op_norm(one_plus) * op_norm(r0) * G.c_bound * U.truncation_defect * 1.05 + 1e-6);
    CHECK(op_norm(ext.matrix) <= ext.bound * (1.0 + 1e-6));
    CHECK(diff < prev);
    prev = diff;
  }
}

TEST_CASE("rho0 on scalar generators is the Poisson extension") {
  const Grid g = standard_grid();
  const DecompositionCertificate cF = laplace_cert(g, bump_density(0.5, 4.0), plateau_window(0.5, 4.0, 0.4, 2.0));
  const Signal F = cert_reconstruct(cF);
  for (double y : {0.5, 1.0, 2.0}) {
    const Generator G = certify_bound(diag({y}));
    CHECK(std::abs(rho0(G, cF).matrix(0, 0) - poisson_extend(F, y)) < 1e-6 * F.sup());
  }
  const Generator zero = certify_bound(Matrix::Zero(1, 1));
  const cplx at_zero = F.samples[g.zero_bin()];
  CHECK(std::abs(rho0(zero, cF).matrix(0, 0) - at_zero) < 1e-10 * F.sup());
  const DecompositionCertificate U = unit_for(cF, 1.0, 0.5);
  const CalcResult ext = rho_ext(zero, cF, U);
  CHECK(std::abs(ext.matrix(0, 0) - at_zero) <= F.sup() * U.truncation_defect * 1.05 + 1e-6 * F.sup());
}

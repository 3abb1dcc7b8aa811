// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hpcalc/quadrature.hpp"

namespace hpcalc {

namespace {

Matrix zero_matrix(const Generator& G) { return Matrix::Zero(G.dim(), G.dim()); }

double factorial(int k) { return std::tgamma(k + 1.0); }

std::string density_digest(const Generator& G, const Density& b) {
  Digest d;
  d.add(G.A);
  for (int i = 0; i < 64; ++i) {
    const cplx v = b.eval(0.25 * i);
    d.add(&v, sizeof v);
  }
  return d.hex();
}

CalcResult sampled_hp(const Generator& G, const Signal& b, const std::string& op) {
  const std::size_t n = b.size();
  CalcResult r;
  r.operation = op;
  const double h = b.grid.dt;
  const Matrix step = semigroup_apply(G, h);
  Matrix E = Matrix::Identity(G.dim(), G.dim());
  Matrix acc = zero_matrix(G);
  double l1 = 0.0, sup = 0.0, far = 0.0;
  const std::size_t far_from = n - std::max<std::size_t>(1, n / 100);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    const cplx bk = b.samples[k];
    if (bk != 0.0) acc.noalias() += (w * h * bk) * E;
    l1 += w * h * std::abs(bk);
    sup = std::max(sup, std::abs(bk));
    if (k >= far_from) far = std::max(far, std::abs(bk));
    if (k + 1 < n) E = E * step;
  }
  if (far > 1e-10 * sup && sup > 0.0) {
    std::ostringstream msg;
    msg << "density has not decayed at the end of its grid (" << far << " vs sup " << sup << ")";
    fail(ErrorKind::Truncation, msg.str(), far);
  }
  r.matrix = std::move(acc);
  r.bound = G.c_bound * l1;
  r.residuals["tail_sample"] = far;
  r.inputs_digest = Digest().add(G.A).add(b).hex();
  return r;
}

Signal half_line_density(const Spectrum& S) {
  const Grid& g = S.grid;
  const std::size_t half = g.n / 2;
  CVec v(half);
  for (std::size_t k = 0; k < half; ++k) v[k] = S.values[g.zero_bin() + k] / kTwoPi;
  return Signal{Grid{half, g.du(), 0.0}, std::move(v), false};
}

}  // namespace

cplx ExpPolynomial::operator()(double t) const {
  if (t < 0.0) return 0.0;
  cplx s = 0.0;
  for (const auto& term : terms) s += term.c * std::pow(t, term.k) * std::exp(-term.a * t);
  return s;
}

cplx ExpPolynomial::laplace(cplx z) const {
  cplx s = 0.0;
  for (const auto& term : terms) s += term.c * factorial(term.k) / std::pow(z + term.a, term.k + 1);
  return s;
}

double ExpPolynomial::tail_l1(double T) const {
  double s = 0.0;
  T = std::max(T, 0.0);
  for (const auto& term : terms) {
    const double r = term.a.real();
    require(r > 0.0, ErrorKind::Domain, "exp-polynomial term does not decay");
    double inner = 0.0;
    for (int j = 0; j <= term.k; ++j)
      inner += factorial(term.k) / factorial(j) * std::pow(T, j) / std::pow(r, term.k - j + 1);
    s += std::abs(term.c) * std::exp(-r * T) * inner;
  }
  return s;
}

Density ExpPolynomial::density() const {
  for (const auto& term : terms) require(term.a.real() > 0.0, ErrorKind::Domain, "exp-polynomial term does not decay");
  ExpPolynomial copy = *this;
  return Density{[copy](double t) { return copy(t); }, [copy](double T) { return copy.tail_l1(T); }};
}

Density convolve_densities(const Density& b1, const Density& b2) {
  auto eval = [b1, b2](double t) -> cplx {
    if (t <= 0.0) return 0.0;
    auto f = [&](double s) { return b1.eval(s) * b2.eval(t - s); };
    // Smooth densities: fixed 24-point panels of length at most 1/2.
    cplx acc = 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil(2.0 * t)));
    for (int p = 0; p < panels; ++p) acc += gauss_panel(f, t * p / panels, t * (p + 1) / panels, cplx(0.0), 24);
    return acc;
  };
  const double n1 = b1.tail_l1(0.0), n2 = b2.tail_l1(0.0);
  auto tail = [b1, b2, n1, n2](double T) { return n1 * b2.tail_l1(0.5 * T) + n2 * b1.tail_l1(0.5 * T); };
  return Density{eval, tail};
}

CalcResult hille_phillips(const Generator& G, const Density& b, HPOptions opt) {
  double T = 1.0;
  while (G.c_bound * b.tail_l1(T) > 0.1 * opt.tol && T < opt.t_cap) T *= 2.0;
  const double trunc = G.c_bound * b.tail_l1(T);
  if (trunc > 0.1 * opt.tol && trunc > 1e-14) {
    std::ostringstream msg;
    msg << "Hille-Phillips tail " << trunc << " above tolerance at T = " << T;
    fail(ErrorKind::Truncation, msg.str(), trunc);
  }
  QuadStats st;
  Matrix acc = zero_matrix(G);
  const Matrix zero = zero_matrix(G);
  auto integrand = [&](double t) -> Matrix { return b.eval(t) * semigroup_apply(G, t); };
  double l1 = 0.0;
  auto absb = [&](double t) { return std::abs(b.eval(t)); };
  const int panels = static_cast<int>(std::ceil(T));
  for (int p = 0; p < panels; ++p) {
    const double a = std::min(T, static_cast<double>(p)), e = std::min(T, p + 1.0);
    acc += integrate_adaptive(integrand, a, e, opt.tol / panels, zero, &st);
    l1 += integrate_adaptive(absb, a, e, 1e-3 * opt.tol / panels, 0.0);
  }
  CalcResult r;
  r.operation = "hille_phillips";
  r.matrix = std::move(acc);
  r.bound = G.c_bound * (l1 + b.tail_l1(T));
  r.residuals["quadrature"] = st.error;
  r.residuals["truncation"] = trunc;
  r.residuals["horizon"] = T;
  r.inputs_digest = density_digest(G, b);
  return r;
}

CalcResult hille_phillips(const Generator& G, const Signal& b) {
  require(std::abs(b.grid.t0) <= 1e-12, ErrorKind::Configuration, "half-line density must start at t = 0");
  return sampled_hp(G, b, "hille_phillips");
}

cplx laplace_piecewise_linear(const Signal& b, cplx z) {
  const std::size_t n = b.size();
  if (n < 2) return 0.0;
  const double h = b.grid.dt;
  const cplx w = z * h;
  cplx e0, e1;
  if (std::abs(w) < 0.25) {
    // Taylor series of int_0^1 e^{-wx} dx and int_0^1 x e^{-wx} dx.
    cplx term = 1.0;
    e0 = 0.0;
    e1 = 0.0;
    for (int k = 0; k < 16; ++k) {
      if (k > 0) term *= -w / static_cast<double>(k);
      e0 += term / static_cast<double>(k + 1);
      e1 += term / static_cast<double>(k + 2);
    }
  } else {
    const cplx em = std::exp(-w);
    e0 = (1.0 - em) / w;
    e1 = (1.0 - em * (1.0 + w)) / (w * w);
  }
  const cplx q = std::exp(-w);
  cplx E = std::exp(-z * b.grid.t0);
  cplx s0 = 0.0, s1 = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    s0 += E * b.samples[k];
    s1 += E * (b.samples[k + 1] - b.samples[k]);
    E *= q;
  }
  return h * (e0 * s0 + e1 * s1);
}

HolomorphicSymbol HolomorphicSymbol::laplace(const Signal& b) {
  HolomorphicSymbol s;
  s.kind = Kind::Laplace;
  s.eval = [b](cplx z) { return laplace_piecewise_linear(b, z); };
  s.abscissa = 0.0;
  const bool starts_at_zero = std::abs(b.samples.front()) <= 1e-14 * std::max(b.sup(), 1e-300);
  s.decay_exponent = starts_at_zero ? 1.0 : 0.0;
  s.label = "laplace";
  return s;
}

HolomorphicSymbol HolomorphicSymbol::boundary(const Signal& F) {
  HolomorphicSymbol s;
  s.kind = Kind::Boundary;
  s.eval = [F](cplx z) { return poisson_extend(F, z); };
  s.abscissa = 0.0;
  s.label = "boundary";
  return s;
}

HolomorphicSymbol HolomorphicSymbol::rational(cplx mu, int m) {
  require(mu.real() < 0.0, ErrorKind::Domain, "rational symbol needs Re mu < 0");
  require(m >= 2, ErrorKind::Domain, "rational symbol needs m >= 2");
  HolomorphicSymbol s;
  s.kind = Kind::Rational;
  s.eval = [mu, m](cplx z) { return std::pow(mu - z, -m); };
  s.abscissa = mu.real();
  s.decay_exponent = m - 1.0;
  s.label = "rational";
  return s;
}

HolomorphicSymbol HolomorphicSymbol::callback(std::function<cplx(cplx)> fn, double abscissa,
                                              std::optional<double> decay_exponent, std::string label) {
  HolomorphicSymbol s;
  s.kind = Kind::Callback;
  s.eval = std::move(fn);
  s.abscissa = abscissa;
  s.decay_exponent = decay_exponent;
  s.label = std::move(label);
  return s;
}

HolomorphicSymbol operator*(const HolomorphicSymbol& a, const HolomorphicSymbol& b) {
  HolomorphicSymbol s;
  s.kind = HolomorphicSymbol::Kind::Product;
  auto fa = a.eval, fb = b.eval;
  s.eval = [fa, fb](cplx z) { return fa(z) * fb(z); };
  s.abscissa = std::max(a.abscissa, b.abscissa);
  if (a.decay_exponent && b.decay_exponent) s.decay_exponent = *a.decay_exponent + *b.decay_exponent + 1.0;
  s.label = a.label + "*" + b.label;
  return s;
}

double validate_decay(const HolomorphicSymbol& phi, double beta) {
  if (!phi.decay_exponent) fail(ErrorKind::Rejection, "symbol has no decay exponent; use regularized evaluation");
  const double q = 1.0 + *phi.decay_exponent;
  double K = 0.0, mid = 0.0, late = 0.0;
  for (int j = 0; j <= 50; ++j) {
    for (double sign : {-1.0, 1.0}) {
      const cplx z(beta, sign * std::ldexp(1.0, j));
      const double v = std::abs(phi(z)) * std::pow(std::abs(z), q);
      if (!std::isfinite(v)) fail(ErrorKind::Rejection, "symbol is not finite on the contour");
      K = std::max(K, v);
      if (j >= 20 && j < 40) mid = std::max(mid, v);
      if (j >= 40) late = std::max(late, v);
    }
  }
  if (late > 2.0 * mid + 1e-300) {
    std::ostringstream msg;
    msg << "declared decay exponent " << *phi.decay_exponent << " not observed along Re z = " << beta;
    fail(ErrorKind::Rejection, msg.str(), late / std::max(mid, 1e-300));
  }
  return K;
}

CalcResult halfplane_eval(const Generator& G, const HolomorphicSymbol& phi, double beta, ContourOptions opt) {
  if (!phi.decay_exponent || !(*phi.decay_exponent > 0.0))
    fail(ErrorKind::Rejection, "half-plane evaluation needs a positive decay exponent; use regularized evaluation");
  if (!(beta < G.spectral_margin)) fail(ErrorKind::Domain, "contour must lie left of the spectrum");
  if (!(beta > phi.abscissa)) fail(ErrorKind::Domain, "contour must lie inside the symbol's half-plane");
  const double K = validate_decay(phi, beta);
  const double s = *phi.decay_exponent;
  const double normA = op_norm(G.A);
  const double R0 = normA + std::abs(beta) + 1.0;
  auto tail = [&](double S) { return 2.0 * K / kPi * std::pow(S, -(1.0 + s)) / (1.0 + s); };
  double S = 2.0 * R0;
  while (tail(S) > 0.1 * opt.tol && S < std::ldexp(1.0, 60)) S *= 2.0;

  std::vector<double> cuts{-S, S, 0.0};
  for (double r = R0; r < S; r *= 2.0) {
    cuts.push_back(r);
    cuts.push_back(-r);
  }
  for (Eigen::Index i = 0; i < G.eigenvalues.size(); ++i) cuts.push_back(G.eigenvalues(i).imag());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             cuts.end());

  const Matrix zero = zero_matrix(G);
  auto integrand = [&](double t) -> Matrix {
    const cplx z(beta, t);
    return phi(z) * resolvent(G, z);
  };
  QuadStats st;
  Matrix acc = zero;
  const double panel_tol = opt.tol / static_cast<double>(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    acc += integrate_adaptive(integrand, cuts[i], cuts[i + 1], panel_tol, zero, &st);

  CalcResult r;
  r.operation = "halfplane_eval";
  r.matrix = acc * (-1.0 / kTwoPi);
  // sup ||R|| on the line is at most c_bound / (margin - beta) by the Laplace representation
  r.bound = K * G.c_bound / (G.spectral_margin - beta);
  r.residuals["quadrature"] = st.error / kTwoPi;
  r.residuals["truncation"] = tail(S);
  r.residuals["contour_half_length"] = S;
  r.residuals["beta"] = beta;
  Digest d;
  d.add(G.A).add(beta);
  for (int j = 0; j < 16; ++j) {
    const cplx v = phi(cplx(beta, j - 8.0));
    d.add(&v, sizeof v);
  }
  r.inputs_digest = d.hex();
  return r;
}

CalcResult regularized_eval(const Generator& G, const HolomorphicSymbol& phi, cplx mu, std::optional<double> beta,
                            ContourOptions opt) {
  if (!(mu.real() < 0.0)) fail(ErrorKind::Domain, "regularizer needs Re mu < 0");
  const double lo = std::max(phi.abscissa, mu.real());
  const double hi = G.spectral_margin;
  if (!(lo < hi)) fail(ErrorKind::Configuration, "no admissible contour between symbol domain and spectrum; shift the generator");
  const double b = beta ? *beta : lo + 0.5 * (hi - lo);
  if (!(b > lo && b < hi)) fail(ErrorKind::Domain, "contour abscissa outside the admissible strip");
  HolomorphicSymbol e = HolomorphicSymbol::rational(mu, 2);
  HolomorphicSymbol ephi = e * phi;
  if (!ephi.decay_exponent) ephi.decay_exponent = 0.0 + 1.0;  // e decays like |z|^-2 and phi is bounded
  CalcResult inner = halfplane_eval(G, ephi, b, opt);
  const Eigen::Index d = G.dim();
  const Matrix M = mu * Matrix::Identity(d, d) - G.A;
  Matrix Y = M * M * inner.matrix;
  const Matrix Rm = resolvent(G, mu);
  const double check = (Rm * Rm * Y - inner.matrix).norm() / std::max(inner.matrix.norm(), 1e-300);
  if (check > 1e-8) fail(ErrorKind::Accuracy, "regularizer inversion is ill-conditioned", check);
  CalcResult r;
  r.operation = "regularized_eval";
  r.matrix = std::move(Y);
  r.bound = op_norm(M * M) * inner.bound;
  r.residuals = inner.residuals;
  r.residuals["regularizer_inversion"] = check;
  r.inputs_digest = Digest().add(inner.inputs_digest).add(mu.real()).add(mu.imag()).hex();
  return r;
}

CalcResult elementary_calc(const Generator& G, const Signal& f, const HardySignal& h) {
  require(f.grid.same_as(h.signal.grid), ErrorKind::Configuration, "f and h on different grids");
  const Spectrum F = fourier_forward(f), H = fourier_forward(h.signal);
  Spectrum P{F.grid, CVec(F.values.size())};
  for (std::size_t j = 0; j < P.values.size(); ++j) P.values[j] = F.values[j] * H.values[j];
  CalcResult r = sampled_hp(G, half_line_density(P), "elementary_calc");
  r.bound = G.c_bound * G.c_bound * f.sup() * lp_norm(h.signal, 1.0);
  r.residuals["ratio"] = r.bound > 0.0 ? op_norm(r.matrix) / r.bound : 0.0;
  return r;
}

CalcResult rho0(const Generator& G, const DecompositionCertificate& cert) {
  if (cert.empty()) {
    CalcResult r;
    r.operation = "rho0";
    r.matrix = zero_matrix(G);
    r.inputs_digest = Digest().add(G.A).hex();
    return r;
  }
  CalcResult r = sampled_hp(G, half_line_density(cert_spectrum(cert)), "rho0");
  const double value = cert.value();
  r.bound = G.c_bound * G.c_bound * value;
  r.residuals["certificate_value"] = value;
  r.residuals["ratio"] = r.bound > 0.0 ? op_norm(r.matrix) / r.bound : 0.0;
  return r;
}

CalcResult rho0_shifted(const Generator& G, const DecompositionCertificate& cert, double eps) {
  CalcResult r = rho0(shifted(G, eps), cert);
  r.operation = "rho0_shifted";
  r.residuals["shift"] = eps;
  return r;
}

CalcResult rho_ext(const Generator& G, const DecompositionCertificate& cert_F, const DecompositionCertificate& unit,
                   ProductOptions opt) {
  const DecompositionCertificate P = product_cert(cert_F, unit, opt);
  CalcResult inner = rho0(G, P);
  const Eigen::Index d = G.dim();
  const Matrix IA = Matrix::Identity(d, d) + G.A;
  CalcResult r;
  r.operation = "rho_ext";
  r.matrix = IA * inner.matrix;
  r.bound = op_norm(IA) * inner.bound;
  r.residuals["unit_defect"] = unit.truncation_defect;
  r.residuals["product_truncation"] = P.truncation_defect;
  r.residuals["product_value"] = P.value();
  r.inputs_digest = Digest().add(inner.inputs_digest).add(std::string("ext")).hex();
  return r;
}

}  // namespace hpcalc

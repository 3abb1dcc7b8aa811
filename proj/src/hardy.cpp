// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hpcalc {

double analyticity_defect(const Spectrum& s) {
  const std::size_t z = s.grid.zero_bin();
  double neg = 0.0, total = 0.0;
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    const double e = std::norm(s.values[j]);
    total += e;
    if (j < z) neg += e;
  }
  return total > 0.0 ? neg / total : 0.0;
}

double analyticity_defect(const Signal& f) { return analyticity_defect(fourier_forward(f)); }

HardySignal HardySignal::adopt(Signal s, double tol) {
  const double d = analyticity_defect(s);
  if (d > tol) {
    std::ostringstream msg;
    msg << "signal is not in the Hardy class: defect " << d << " > " << tol;
    fail(ErrorKind::Domain, msg.str(), d);
  }
  return HardySignal{std::move(s), d};
}

HardySignal riesz_project(const Signal& f) {
  Spectrum F = fourier_forward(f);
  std::fill(F.values.begin(), F.values.begin() + static_cast<long>(F.grid.zero_bin()), cplx(0.0));
  Signal out = fourier_inverse(F);
  const double d = analyticity_defect(out);
  return HardySignal{std::move(out), d};
}

Signal hilbert_transform(const Signal& f) {
  Spectrum F = fourier_forward(f);
  const std::size_t z = F.grid.zero_bin();
  for (std::size_t j = 0; j < F.values.size(); ++j) {
    if (j == z) F.values[j] = 0.0;
    else F.values[j] *= (j > z) ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
  }
  return fourier_inverse(F);
}

HardySignal outer_function(const Signal& modulus, double floor, double tol) {
  const double sup = modulus.sup();
  if (sup == 0.0) fail(ErrorKind::Domain, "outer function of an identically zero modulus");
  if (floor < 0.0) floor = 1e-8 * sup;
  if (floor <= 0.0) fail(ErrorKind::Domain, "outer function needs a positive floor");
  CVec logm(modulus.size());
  for (std::size_t k = 0; k < logm.size(); ++k)
    logm[k] = std::log(std::max(std::abs(modulus.samples[k]), floor));
  // log|O| + i H[log|O|] has spectrum (1 + sgn u) * spectrum(log|O|).
  Spectrum L = fourier_forward(Signal{modulus.grid, logm, false});
  const std::size_t z = L.grid.zero_bin();
  for (std::size_t j = 0; j < L.values.size(); ++j) {
    if (j < z) L.values[j] = 0.0;
    else if (j > z) L.values[j] *= 2.0;
  }
  Signal analytic = fourier_inverse(L);
  CVec out(analytic.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = std::exp(cplx(logm[k].real(), analytic.samples[k].imag()));
  Signal o{modulus.grid, std::move(out), false};
  o.refresh_decay();
  const double d = analyticity_defect(o);
  if (d > tol) {
    std::ostringstream msg;
    msg << "outer function analyticity defect " << d << " exceeds " << tol;
    fail(ErrorKind::Accuracy, msg.str(), d);
  }
  return HardySignal{std::move(o), d};
}

namespace {

// Band-limited interpolation onto a grid r times finer with the same support.
Signal refine_grid(const Signal& f, int r) {
  if (r == 1) return f;
  const Spectrum F = fourier_forward(f);
  const Grid fine{f.grid.n * static_cast<std::size_t>(r), f.grid.dt / r, f.grid.t0};
  CVec padded(fine.n, cplx(0.0));
  const std::size_t offset = fine.zero_bin() - f.grid.zero_bin();
  for (std::size_t j = 1; j < F.values.size(); ++j) padded[offset + j] = F.values[j];
  return fourier_inverse(Spectrum{fine, std::move(padded)}, 1.0);
}

struct RawFactors {
  Signal w, v;
  double defect_w, defect_v;
};

RawFactors split_on_grid(const Signal& hs, double floor_rel) {
  CVec root(hs.size());
  for (std::size_t k = 0; k < root.size(); ++k) root[k] = std::sqrt(std::abs(hs.samples[k]));
  Signal modulus{hs.grid, std::move(root), false};
  HardySignal w0 = outer_function(modulus, floor_rel * modulus.sup(), 1.0);
  CVec quot(hs.size());
  for (std::size_t k = 0; k < quot.size(); ++k) quot[k] = hs.samples[k] / w0.signal.samples[k];
  Signal v0{hs.grid, std::move(quot), false};
  const double dv = analyticity_defect(v0);
  return {std::move(w0.signal), std::move(v0), w0.defect, dv};
}

}  // namespace

H1Factorization factor_h1(const HardySignal& h, FactorOptions opt) {
  const Signal& hs = h.signal;
  H1Factorization r;
  r.h_norm1 = lp_norm(hs, 1.0, opt.norm_mode);
  if (!(r.h_norm1 > 0.0)) fail(ErrorKind::Domain, "factor_h1 needs a nonzero input");
  double split_err = 0.0;
  for (int refine = 1;; refine *= 2) {
    const Signal fine = refine_grid(hs, refine);
    RawFactors raw = split_on_grid(fine, opt.floor_rel);
    r.refine = refine;
    r.raw_defect_w = raw.defect_w;
    r.raw_defect_v = raw.defect_v;
    raw.w.refresh_decay();
    raw.v.refresh_decay();
    r.w = riesz_project(raw.w);
    r.v = riesz_project(raw.v);

    Signal prod = multiply(r.w.signal, r.v.signal);
    for (std::size_t k = 0; k < prod.size(); ++k) prod.samples[k] -= fine.samples[k];
    r.h_norm1 = lp_norm(fine, 1.0, opt.norm_mode);
    r.residual = lp_norm(prod, 1.0) / r.h_norm1;
    const double w2 = lp_norm(r.w.signal, 2.0, opt.norm_mode);
    const double v2 = lp_norm(r.v.signal, 2.0, opt.norm_mode);
    r.w_norm2sq = w2 * w2;
    r.v_norm2sq = v2 * v2;
    split_err = std::max(std::abs(r.w_norm2sq - r.h_norm1), std::abs(r.v_norm2sq - r.h_norm1)) / r.h_norm1;
    if ((r.residual <= opt.factor_tol && split_err <= opt.factor_tol) || 2 * refine > opt.max_refine) break;
  }
  if (r.residual > opt.factor_tol || split_err > opt.factor_tol) {
    std::ostringstream msg;
    msg << "factorization residual " << r.residual << ", norm split error " << split_err
        << " above tolerance " << opt.factor_tol << " after " << r.refine << "x refinement";
    fail(ErrorKind::Accuracy, msg.str(), std::max(r.residual, split_err));
  }
  return r;
}

cplx poisson_extend(const Signal& F, cplx z) {
  if (!(z.real() > 0.0)) fail(ErrorKind::Domain, "poisson_extend needs Re z > 0");
  // iz = a + i b with a = -Im z, b = Re z.
  const double a = -z.imag(), b = z.real();
  cplx acc = 0.0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    const double d = F.grid.t(k) - a;
    acc += F.samples[k] * (b / (d * d + b * b));
  }
  return acc * (F.grid.dt / kPi);
}

cplx rational_pair_density(cplx lambda, double t) {
  return t < 0.0 ? cplx(0.0) : cplx(0.0, 1.0) * std::exp(cplx(0.0, -1.0) * lambda * t);
}

}  // namespace hpcalc

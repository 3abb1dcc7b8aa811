// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hpcalc/parallel.hpp"

namespace hpcalc {

namespace {

constexpr int kChunks = 64;

void check_p(double p) {
  if (!(p >= 1.0)) fail(ErrorKind::Domain, "p must lie in [1, inf]", p);
}

struct Moments {
  double n = 0, a = 0, b = 0, aa = 0, bb = 0, ab = 0;
  void merge(const Moments& o) {
    n += o.n;
    a += o.a;
    b += o.b;
    aa += o.aa;
    bb += o.bb;
    ab += o.ab;
  }
};

cplx complex_gaussian(std::mt19937_64& rng, std::normal_distribution<double>& nd) {
  const double re = nd(rng), im = nd(rng);
  return cplx(re, im) * std::sqrt(0.5);
}

// Sample moments of a = ||sum gamma S_k x_k||^2 and b = ||sum gamma x_k||^2.
// ops may be empty, in which case a is unused.
Moments sample_moments(const std::vector<const Matrix*>& ops, const std::vector<CVector>& xs, double p, int samples,
                       std::uint64_t seed, bool parallel) {
  const Eigen::Index d = xs.empty() ? 0 : xs.front().size();
  std::vector<CVector> images;
  if (!ops.empty())
    for (std::size_t k = 0; k < xs.size(); ++k) images.push_back((*ops[k]) * xs[k]);
  std::vector<Moments> parts(kChunks);
  auto chunk = [&](std::size_t c) {
    const int lo = static_cast<int>(static_cast<long>(samples) * static_cast<long>(c) / kChunks);
    const int hi = static_cast<int>(static_cast<long>(samples) * static_cast<long>(c + 1) / kChunks);
    std::mt19937_64 rng(split_seed(seed, c));
    std::normal_distribution<double> nd;
    CVector sa(d), sb(d);
    Moments m;
    for (int s = lo; s < hi; ++s) {
      sa.setZero();
      sb.setZero();
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const cplx g = complex_gaussian(rng, nd);
        sb += g * xs[k];
        if (!images.empty()) sa += g * images[k];
      }
      const double vb = std::pow(vector_norm(sb, p), 2);
      const double va = images.empty() ? 0.0 : std::pow(vector_norm(sa, p), 2);
      m.n += 1;
      m.a += va;
      m.b += vb;
      m.aa += va * va;
      m.bb += vb * vb;
      m.ab += va * vb;
    }
    parts[c] = m;
  };
  if (parallel)
    parallel_for(kChunks, chunk);
  else
    for (std::size_t c = 0; c < kChunks; ++c) chunk(c);
  Moments total;
  for (const auto& m : parts) total.merge(m);
  return total;
}

struct RatioValue {
  double value = 0.0, rel_error = 0.0;
};

RatioValue ratio_from(const Moments& m) {
  const double A = m.a / m.n, B = m.b / m.n;
  if (!(B > 0.0)) return {};
  const double R = A / B;
  const double va = m.aa / m.n - A * A, vb = m.bb / m.n - B * B, cab = m.ab / m.n - A * B;
  const double varR = std::max(0.0, (va - 2.0 * R * cab + R * R * vb) / (B * B * m.n));
  const double value = std::sqrt(R);
  const double se = value > 0.0 ? std::sqrt(varR) / (2.0 * value) : 0.0;
  return {value, value > 0.0 ? se / value : 0.0};
}

RatioValue mc_ratio(const std::vector<const Matrix*>& ops, const std::vector<CVector>& xs, double p, int samples,
                    std::uint64_t seed, bool parallel) {
  if (p == 2.0 && samples <= 0) {
    double a = 0.0, b = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      a += ((*ops[k]) * xs[k]).squaredNorm();
      b += xs[k].squaredNorm();
    }
    return {b > 0.0 ? std::sqrt(a / b) : 0.0, 0.0};
  }
  return ratio_from(sample_moments(ops, xs, p, samples, seed, parallel));
}

CVector random_vector(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> nd;
  CVector x(d);
  for (Eigen::Index i = 0; i < d; ++i) x(i) = complex_gaussian(rng, nd);
  return x;
}

// Hill-climb ||S x||_p / ||x||_p from several starts.
double singleton_norm(const Matrix& S, double p, std::uint64_t seed, CVector* best_x) {
  const Eigen::Index d = S.cols();
  Eigen::JacobiSVD<Matrix> svd(S, Eigen::ComputeFullV);
  std::vector<CVector> starts{svd.matrixV().col(0)};
  if (p != 2.0) {
    for (Eigen::Index i = 0; i < d; ++i) starts.push_back(CVector::Unit(d, i));
    std::mt19937_64 rng(seed);
    for (int r = 0; r < 4; ++r) starts.push_back(random_vector(rng, d));
  }
  auto obj = [&](const CVector& x) {
    const double nx = vector_norm(x, p);
    return nx > 0.0 ? vector_norm(S * x, p) / nx : 0.0;
  };
  double best = -1.0;
  CVector bx;
  std::mt19937_64 rng(splitmix64(seed));
  for (const auto& x0 : starts) {
    CVector x = x0;
    double v = obj(x);
    if (p != 2.0) {
      double step = 0.5;
      for (int it = 0; it < 200 && step > 1e-6; ++it) {
        const CVector y = x + step * x.norm() * random_vector(rng, d) / std::sqrt(static_cast<double>(d));
        const double w = obj(y);
        if (w > v) {
          x = y;
          v = w;
        } else {
          step *= 0.93;
        }
      }
    }
    if (v > best) {
      best = v;
      bx = x;
    }
  }
  if (best_x) *best_x = bx / vector_norm(bx, p);
  return best;
}

}  // namespace

double vector_norm(const CVector& x, double p) {
  check_p(p);
  if (std::isinf(p)) return x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
  if (p == 2.0) return x.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
  return std::pow(s, 1.0 / p);
}

GaussianNorm gaussian_sum_norm(const std::vector<CVector>& xs, double p, int samples, std::uint64_t seed) {
  check_p(p);
  require(samples >= 1, ErrorKind::Configuration, "need at least one sample");
  for (const auto& x : xs) require(x.size() == xs.front().size(), ErrorKind::Configuration, "vectors differ in dimension");
  GaussianNorm r;
  r.samples = samples;
  r.seed = seed;
  if (xs.empty()) return r;
  const Moments m = sample_moments({}, xs, p, samples, seed, true);
  const double B = m.b / m.n;
  const double vb = std::max(0.0, m.bb / m.n - B * B);
  r.value = std::sqrt(B);
  r.std_error = r.value > 0.0 ? std::sqrt(vb / m.n) / (2.0 * r.value) : 0.0;
  return r;
}

double uniform_bound(const std::vector<Matrix>& family) {
  double s = 0.0;
  for (const auto& S : family) s = std::max(s, op_norm(S));
  return s;
}

GammaEstimate gamma_lower_bound(const std::vector<Matrix>& family, double p, GammaOptions opt, std::uint64_t seed) {
  check_p(p);
  require(!family.empty(), ErrorKind::Configuration, "empty operator family");
  require(opt.samples >= 1 && opt.search_samples >= 1, ErrorKind::Configuration, "sample counts must be positive");
  const Eigen::Index d = family.front().rows();
  Digest dig;
  for (const auto& S : family) {
    require(S.rows() == d && S.cols() == d, ErrorKind::Configuration, "family members must be square of one size");
    dig.add(S);
  }
  GammaEstimate est;
  est.family_digest = dig.hex();
  est.p = p;
  est.samples = opt.samples;
  est.seed = seed;

  const std::size_t F = family.size();
  std::vector<double> single(F);
  std::vector<CVector> single_x(F);
  parallel_for(F, [&](std::size_t k) { single[k] = singleton_norm(family[k], p, split_seed(seed, 0, k), &single_x[k]); });
  const auto top = static_cast<std::size_t>(std::max_element(single.begin(), single.end()) - single.begin());
  est.singleton_bound = single[top];
  est.lower_bound = single[top];
  est.witness_ops = {top};
  est.witness_vectors = {single_x[top]};

  // Candidate (m, r) draws a sub-family from the first m operators; its streams
  // depend only on (seed, m, r), so enlarging the family keeps old candidates.
  struct Candidate {
    std::vector<std::size_t> ops;
    std::vector<CVector> xs;
    RatioValue final;
  };
  std::vector<std::pair<std::size_t, int>> keys;
  for (std::size_t m = 2; m <= F; ++m)
    for (int r = 0; r < opt.restarts; ++r) keys.emplace_back(m, r);
  std::vector<Candidate> cands(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) {
    const auto [m, r] = keys[i];
    std::mt19937_64 rng(split_seed(seed, m, static_cast<std::uint64_t>(r), 1));
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t s = std::min<std::size_t>(m, static_cast<std::size_t>(std::max(2, opt.max_subfamily)));
    Candidate c;
    c.ops.assign(idx.begin(), idx.begin() + static_cast<long>(s));
    std::vector<const Matrix*> ops;
    for (auto k : c.ops) {
      ops.push_back(&family[k]);
      std::normal_distribution<double> nd;
      c.xs.push_back(single_x[k] * complex_gaussian(rng, nd));
    }
    const std::uint64_t crn = split_seed(seed, m, static_cast<std::uint64_t>(r), 2);
    const int search = p == 2.0 ? 0 : opt.search_samples;
    double v = mc_ratio(ops, c.xs, p, search, crn, false).value;
    double step = 0.5;
    for (int it = 0; it < opt.climb_steps; ++it) {
      std::vector<CVector> trial = c.xs;
      const std::size_t k = static_cast<std::size_t>(rng() % trial.size());
      trial[k] += step * std::max(trial[k].norm(), 1e-3) * random_vector(rng, d) / std::sqrt(static_cast<double>(d));
      const double w = mc_ratio(ops, trial, p, search, crn, false).value;
      if (w > v) {
        c.xs = std::move(trial);
        v = w;
      } else {
        step *= 0.9;
      }
    }
    c.final = mc_ratio(ops, c.xs, p, opt.samples, split_seed(seed, m, static_cast<std::uint64_t>(r), 3), false);
    cands[i] = std::move(c);
  });
  for (const auto& c : cands) {
    if (c.final.value > est.lower_bound) {
      est.lower_bound = c.final.value;
      est.mc_error = c.final.rel_error;
      est.witness_ops = c.ops;
      est.witness_vectors = c.xs;
    }
  }
  return est;
}

}  // namespace hpcalc

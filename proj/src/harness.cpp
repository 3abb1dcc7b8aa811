// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hpcalc/calculus.hpp"
#include "hpcalc/gamma.hpp"
#include "hpcalc/littlewood_paley.hpp"
#include "hpcalc/multiplier.hpp"
#include "hpcalc/parallel.hpp"
#include "hpcalc/quadrature.hpp"
#include "hpcalc/random_models.hpp"

namespace hpcalc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double finite_or(double v, double fallback) { return std::isfinite(v) ? v : fallback; }

ExpPolynomial random_exp_polynomial(std::mt19937_64& rng, int terms) {
  std::uniform_real_distribution<double> re(0.5, 2.0), im(-2.0, 2.0);
  std::normal_distribution<double> nd;
  ExpPolynomial b;
  for (int i = 0; i < terms; ++i)
    b.terms.push_back({cplx(nd(rng), nd(rng)) / std::sqrt(2.0 * terms), static_cast<int>(rng() % 3), cplx(re(rng), im(rng))});
  return b;
}

// sup over y of |fn(iy)|: dense sampling, then golden-section refinement.
double boundary_sup(const std::function<double(double)>& fn, double half_width, int points) {
  double best = 0.0, arg = 0.0;
  const double h = 2.0 * half_width / points;
  for (int i = 0; i <= points; ++i) {
    const double y = -half_width + i * h;
    const double v = fn(y);
    if (v > best) {
      best = v;
      arg = y;
    }
  }
  double a = arg - h, b = arg + h;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 80; ++it) {
    const double c = b - g * (b - a), d = a + g * (b - a);
    if (fn(c) > fn(d))
      b = d;
    else
      a = c;
  }
  return std::max(best, fn(0.5 * (a + b)));
}

CVector random_unit_vector(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> nd;
  CVector x(d);
  for (Eigen::Index i = 0; i < d; ++i) x(i) = cplx(nd(rng), nd(rng));
  return x / x.norm();
}

Grid config_grid(const Config& cfg, std::size_t n_default = 8192) {
  return standard_grid(static_cast<std::size_t>(config_int(cfg, "n", static_cast<long>(n_default))),
                       config_double(cfg, "dt", 0.1));
}

// ---- verify routines -------------------------------------------------------

void verify_key_estimate(Report& r, const Config& cfg) {
  const long trials = config_int(cfg, "trials", 100);
  const long dim = config_int(cfg, "dim", 8);
  const long certs = config_int(cfg, "certs", 50);
  const Grid g = config_grid(cfg);
  r.csv_header = {"trial", "dim", "c_bound", "ratio"};
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    const int d = 1 + static_cast<int>(i % static_cast<std::size_t>(dim));
    const Generator G = certify_bound(random_generator_matrix(d, split_seed(r.seed, i, 0)));
    const Signal f = random_bandlimited(g, split_seed(r.seed, i, 1));
    const HardySignal h = random_hardy(g, split_seed(r.seed, i, 2));
    const CalcResult u = elementary_calc(G, f, h);
    rows[i] = {static_cast<double>(i), static_cast<double>(d), G.c_bound, u.residuals.at("ratio")};
  });
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row[3]);
  r.csv_rows = rows;
  r.check_le("max_ratio_elementary", worst, 1.0 + 1e-3);

  std::vector<double> ratios(static_cast<std::size_t>(certs));
  parallel_for(ratios.size(), [&](std::size_t i) {
    const int d = 1 + static_cast<int>(i % static_cast<std::size_t>(dim));
    const Generator G = certify_bound(random_generator_matrix(d, split_seed(r.seed, i, 10)));
    const DecompositionCertificate c = random_certificate(g, split_seed(r.seed, i, 11), 1 + static_cast<int>(i % 3));
    ratios[i] = rho0(G, c).residuals.at("ratio");
  });
  r.check_le("max_ratio_rho0", ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end()), 1.0 + 1e-3);
}

void verify_compatibility(Report& r, const Config& cfg) {
  const double eps = config_double(cfg, "eps", 0.1);
  const long dim = config_int(cfg, "dim", 5);
  const long trials = config_int(cfg, "trials", 20);
  require(eps > 0.0, ErrorKind::Configuration, "eps must be positive");
  r.csv_header = {"trial", "residual", "mu_independence"};
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    const Generator G = shifted(certify_bound(random_generator_matrix(static_cast<int>(dim), split_seed(r.seed, i, 0))), eps);
    std::mt19937_64 rng(split_seed(r.seed, i, 1));
    ExpPolynomial b = random_exp_polynomial(rng, 2);
    double abscissa = -std::numeric_limits<double>::infinity();
    for (const auto& t : b.terms) abscissa = std::max(abscissa, -t.a.real());
    const auto L = HolomorphicSymbol::callback([b](cplx z) { return b.laplace(z); }, abscissa, 0.0, "laplace");
    const CalcResult reg1 = regularized_eval(G, L, cplx(-1.0, 0.0));
    const CalcResult reg2 = regularized_eval(G, L, cplx(-2.0, 0.0));
    const CalcResult hp = hille_phillips(G, b.density());
    rows[i] = {static_cast<double>(i), (reg1.matrix - hp.matrix).norm(), (reg1.matrix - reg2.matrix).norm()};
  });
  double worst = 0.0, mu = 0.0;
  for (const auto& row : rows) {
    worst = std::max(worst, row[1]);
    mu = std::max(mu, row[2]);
  }
  r.csv_rows = rows;
  r.check_le("max_compatibility_residual", worst, 1e-5);
  r.check_le("max_mu_independence", mu, 1e-6);
}

void verify_homomorphism(Report& r, const Config& cfg) {
  const long dim = config_int(cfg, "dim", 5);
  const long trials = config_int(cfg, "trials", 3);
  const Grid g = config_grid(cfg);
  r.csv_header = {"trial", "hp_residual", "rho0_residual", "rho0_scale"};
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    GeneratorModel stable;
    stable.re_min = 0.1;
    const Generator G = certify_bound(random_generator_matrix(static_cast<int>(dim), split_seed(r.seed, i, 0), stable));
    std::mt19937_64 rng(split_seed(r.seed, i, 1));
    const ExpPolynomial b1 = random_exp_polynomial(rng, 2), b2 = random_exp_polynomial(rng, 2);
    HPOptions opt;
    opt.tol = 1e-10;
    const Matrix g1 = hille_phillips(G, b1.density(), opt).matrix;
    const Matrix g2 = hille_phillips(G, b2.density(), opt).matrix;
    const Matrix g12 = hille_phillips(G, convolve_densities(b1.density(), b2.density()), opt).matrix;
    const DecompositionCertificate c1 = random_certificate(g, split_seed(r.seed, i, 2), 1);
    const DecompositionCertificate c2 = random_certificate(g, split_seed(r.seed, i, 3), 1);
    const Matrix r1 = rho0(G, c1).matrix, r2 = rho0(G, c2).matrix;
    const Matrix r12 = rho0(G, product_cert(c1, c2)).matrix;
    rows[i] = {static_cast<double>(i), (g12 - g1 * g2).norm(), (r12 - r1 * r2).norm(), (r1 * r2).norm()};
  });
  double hp = 0.0, rh = 0.0;
  for (const auto& row : rows) {
    hp = std::max(hp, row[1]);
    rh = std::max(rh, row[2]);
  }
  r.csv_rows = rows;
  r.check_le("max_hille_phillips_residual", hp, 1e-7);
  r.check_le("max_rho0_residual", rh, 1e-4);
}

void verify_von_neumann(Report& r, const Config& cfg) {
  const long dim = config_int(cfg, "dim", 4);
  const long trials = config_int(cfg, "trials", 30);
  r.csv_header = {"trial", "norm", "boundary_sup", "excess", "c_bound"};
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    const Generator G = certify_bound(random_normal_generator(static_cast<int>(dim), split_seed(r.seed, i, 0)));
    std::mt19937_64 rng(split_seed(r.seed, i, 1));
    const ExpPolynomial b = random_exp_polynomial(rng, 3);
    const double norm = op_norm(hille_phillips(G, b.density()).matrix);
    const double sup = boundary_sup([&](double y) { return std::abs(b.laplace(cplx(0.0, y))); }, 200.0, 40000);
    rows[i] = {static_cast<double>(i), norm, sup, norm - sup, G.c_bound};
  });
  double excess = -std::numeric_limits<double>::infinity(), cmax = 0.0;
  for (const auto& row : rows) {
    excess = std::max(excess, row[3]);
    cmax = std::max(cmax, row[4]);
  }
  r.csv_rows = rows;
  r.check_le("max_c_bound", cmax, 1.0);
  r.check_le("max_norm_minus_boundary_sup", excess, 1e-6);
}

void verify_besov_embedding(Report& r, const Config& cfg) {
  const long trials = config_int(cfg, "trials", 20);
  const Grid g = config_grid(cfg, 16384);
  const LittlewoodPaleyFamily fam(false, static_cast<int>(config_int(cfg, "k_min", -12)),
                                  static_cast<int>(config_int(cfg, "k_max", 12)));
  const double phi0 = fam.kernel_l1(0);
  r.summary["phi0_l1"] = phi0;
  r.csv_header = {"trial", "value", "besov_norm", "ratio", "residual"};
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    const HardySignal F = random_hardy(g, split_seed(r.seed, i, 0), 3, 0.5, 6.0);
    const Signal Fn = scale(F.signal, 1.0 / F.signal.sup());
    const BesovResult b = besov_norm(Fn, fam);
    const DecompositionCertificate c = besov_to_a_cert(Fn, fam);
    rows[i] = {static_cast<double>(i), c.value(), b.norm, c.value() / (b.norm * phi0), c.residual};
  });
  double ratio = 0.0, resid = 0.0;
  for (const auto& row : rows) {
    ratio = std::max(ratio, row[3]);
    resid = std::max(resid, row[4]);
  }
  r.csv_rows = rows;
  r.check_le("max_value_over_phi0_besov", ratio, 3.0 * (1.0 + 1e-6));
  r.check_le("max_reconstruction_residual", resid, 1e-6);
}

double weak_resolvent_integral(const Generator& G, double beta, const CVector& x, const CVector& y, double T) {
  auto f = [&](double t) {
    const Matrix R = resolvent(G, cplx(beta, t));
    return std::abs(y.dot(R * (R * x)));
  };
  std::vector<double> cuts{-T, T, 0.0};
  for (Eigen::Index i = 0; i < G.eigenvalues.size(); ++i) {
    const double c = G.eigenvalues(i).imag();
    if (std::abs(c) < T) cuts.push_back(c);
  }
  for (double s = 1.0; s < T; s *= 2.0) {
    cuts.push_back(s);
    cuts.push_back(-s);
  }
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) acc += integrate_adaptive(f, cuts[i], cuts[i + 1], 1e-10, 0.0);
  return -beta * acc;
}

void verify_weak_resolvent(Report& r, const Config& cfg) {
  const long dim = config_int(cfg, "dim", 4);
  const long trials = config_int(cfg, "trials", 10);
  const long vectors = config_int(cfg, "vectors", 4);
  const std::vector<double> betas{-2.0, -1.0, -0.5, -0.25, -0.1};
  r.csv_header = {"trial", "beta", "pair", "integral_T", "integral_2T", "relative_change"};
  std::vector<std::vector<std::vector<double>>> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    const Generator G = certify_bound(random_generator_matrix(static_cast<int>(dim), split_seed(r.seed, i, 0)));
    const double T = 64.0 * (op_norm(G.A) + 1.0);
    std::mt19937_64 rng(split_seed(r.seed, i, 1));
    for (long k = 0; k < vectors; ++k) {
      const CVector x = random_unit_vector(rng, dim), y = random_unit_vector(rng, dim);
      for (double beta : betas) {
        const double a = weak_resolvent_integral(G, beta, x, y, T);
        const double b = weak_resolvent_integral(G, beta, x, y, 2.0 * T);
        rows[i].push_back({static_cast<double>(i), beta, static_cast<double>(k), a, b, std::abs(b - a) / b});
      }
    }
  });
  double change = 0.0, sup = 0.0;
  for (const auto& block : rows)
    for (const auto& row : block) {
      r.csv_rows.push_back(row);
      change = std::max(change, finite_or(row[5], 1e300));
      sup = std::max(sup, finite_or(row[4], 1e300));
    }
  r.summary["sup_integral"] = sup;
  r.check_le("max_relative_change_on_doubling", change, 0.05);
  r.check_le("sup_integral_finite", sup, 1e12);
}

void verify_approx_unit(Report& r, const Config& cfg) {
  const Grid g = config_grid(cfg);
  const double delta = config_double(cfg, "delta", 0.5);
  const DecompositionCertificate c = random_certificate(g, r.seed, 1);
  const std::vector<double> Ns{1.0, 2.0, 4.0, 8.0, 16.0};
  const ApproxUnitReport u = approx_unit_test(c, Ns, delta);
  r.csv_header = {"N",           "product_value", "value_bound",   "sup_error",
                  "identity_error", "product_error", "unit_residual", "unit_defect"};
  double excess = 0.0, increase = 0.0, product = 0.0, unexplained = 0.0;
  for (std::size_t i = 0; i < u.N.size(); ++i) {
    r.csv_rows.push_back({u.N[i], u.product_value[i], u.value_bound[i], u.sup_error[i], u.identity_error[i],
                          u.product_error[i], u.unit_residual[i], u.unit_defect[i]});
    excess = std::max(excess, u.product_value[i] / u.value_bound[i]);
    product = std::max(product, u.product_error[i] / u.f_sup);
    unexplained = std::max(unexplained, u.unit_residual[i] - u.unit_defect[i]);
    if (i > 0) increase = std::max(increase, (u.identity_error[i] - u.identity_error[i - 1]) / u.f_sup);
  }
  r.summary["delta"] = delta;
  r.summary["f_sup"] = u.f_sup;
  r.check_le("max_product_value_over_bound", excess, 1.0 + 1e-6);
  r.check_le("identity_error_increase_along_N", increase, 1e-12);
  r.check_le("max_product_reconstruction_error", product, 1e-6);
  r.check_le("unit_residual_beyond_defect", unexplained, 1e-6);
}

void verify_gamma(Report& r, const Config& cfg) {
  const long dim = config_int(cfg, "dim", 4);
  const long samples = config_int(cfg, "samples", 10000);
  const long certs = config_int(cfg, "certs", 8);
  const Grid g = config_grid(cfg);
  const Generator G = certify_bound(random_generator_matrix(static_cast<int>(dim), split_seed(r.seed, 0)));
  std::vector<Matrix> family;
  for (int j = 0; j <= 40; ++j) family.push_back(semigroup_apply(G, 0.25 * j));
  const double ub = uniform_bound(family);
  GammaOptions opt;
  opt.samples = static_cast<int>(samples);
  const GammaEstimate est = gamma_lower_bound(family, 2.0, opt, split_seed(r.seed, 1));
  r.summary["uniform_bound"] = ub;
  r.summary["gamma_lower_bound"] = est.lower_bound;
  r.summary["c_bound"] = G.c_bound;
  r.check_le("semigroup_relative_gap", std::abs(est.lower_bound - ub) / ub, 0.05);

  std::vector<Matrix> image(static_cast<std::size_t>(certs));
  parallel_for(image.size(), [&](std::size_t i) {
    image[i] = rho0(G, random_certificate(g, split_seed(r.seed, 2, i), 1 + static_cast<int>(i % 2))).matrix;
  });
  const GammaEstimate est_rho = gamma_lower_bound(image, 2.0, opt, split_seed(r.seed, 3));
  r.summary["rho0_image_lower_bound"] = est_rho.lower_bound;
  r.check_le("rho0_image_over_uniform_squared", est_rho.lower_bound / (ub * ub), 1.05);
  r.csv_header = {"family", "lower_bound", "mc_error", "samples"};
  r.csv_rows = {{0.0, est.lower_bound, est.mc_error, static_cast<double>(est.samples)},
                {1.0, est_rho.lower_bound, est_rho.mc_error, static_cast<double>(est_rho.samples)}};
}

// ---- experiments -----------------------------------------------------------

void experiment_counterexample(Report& r, const Config& cfg) {
  const double p = config_double(cfg, "p", 4.0);
  const int nmax = static_cast<int>(config_int(cfg, "nmax", 12));
  const int nmin = static_cast<int>(config_int(cfg, "nmin", 4));
  const auto bins = static_cast<std::size_t>(config_int(cfg, "bins", 1L << 20));
  require(nmin >= 1 && nmin + 3 <= nmax, ErrorKind::Configuration, "need at least 4 values of N");
  const Counterexample cx(nmax, bins);
  std::vector<int> Ns;
  for (int N = nmin; N <= nmax; ++N) Ns.push_back(N);
  const GrowthReport g = counterexample_growth(cx, p, Ns);
  r.csv_header = {"N", "norm_g", "norm_Tg"};
  for (std::size_t i = 0; i < Ns.size(); ++i) r.csv_rows.push_back({static_cast<double>(Ns[i]), g.norm_g[i], g.norm_Tg[i]});
  r.summary["slope_Tg"] = g.slope_Tg;
  r.summary["slope_g"] = g.slope_g;
  r.summary["du"] = cx.du();
  r.check_in("slope_Tg", g.slope_Tg, 0.4, 0.6);
  r.check_le("slope_g", g.slope_g, 0.35);
  r.check_le("block_identity_error", g.identity_error, 1e-10);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int k = 0; k <= nmax; ++k) {
    const double v = cx.block_l1(k);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  r.summary["block_l1"] = hi;
  r.check_le("block_l1_spread", (hi - lo) / hi, 1e-8);
  const double first = g.sup_g.front();
  r.check_le("sup_g_growth", *std::max_element(g.sup_g.begin(), g.sup_g.end()) / first, 1.5);
}

using Routine = void (*)(Report&, const Config&);

const std::map<std::string, Routine>& verify_table() {
  static const std::map<std::string, Routine> t{{"key-estimate", verify_key_estimate},
                                                {"compatibility", verify_compatibility},
                                                {"homomorphism", verify_homomorphism},
                                                {"von-neumann", verify_von_neumann},
                                                {"besov-embedding", verify_besov_embedding},
                                                {"weak-resolvent", verify_weak_resolvent},
                                                {"approx-unit", verify_approx_unit},
                                                {"gamma", verify_gamma}};
  return t;
}

const std::map<std::string, Routine>& experiment_table() {
  static const std::map<std::string, Routine> t{{"counterexample", experiment_counterexample}};
  return t;
}

Report run(const std::map<std::string, Routine>& table, const std::string& kind, const std::string& name,
           const Config& cfg) {
  const auto it = table.find(name);
  if (it == table.end()) fail(ErrorKind::Configuration, "unknown " + kind + " '" + name + "'");
  Report r;
  r.kind = kind;
  r.name = name;
  r.seed = config_seed(cfg, 7);
  r.config = cfg;
  it->second(r, cfg);
  return r;
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::Configuration, "config line " + std::to_string(lineno) + " is not key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) fail(ErrorKind::Configuration, "config line " + std::to_string(lineno) + " has an empty key");
    c[key] = trim(line.substr(eq + 1));
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Config merge_config(Config base, const Config& overrides) {
  for (const auto& [k, v] : overrides) base[k] = v;
  return base;
}

double config_double(const Config& c, const std::string& key, double fallback) {
  const auto it = c.find(key);
  if (it == c.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Configuration, "config key '" + key + "' is not a number: " + it->second);
  }
}

long config_int(const Config& c, const std::string& key, long fallback) {
  const double v = config_double(c, key, static_cast<double>(fallback));
  if (v != std::floor(v)) fail(ErrorKind::Configuration, "config key '" + key + "' must be an integer");
  return static_cast<long>(v);
}

std::uint64_t config_seed(const Config& c, std::uint64_t fallback) {
  const auto it = c.find("seed");
  if (it == c.end()) return fallback;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    fail(ErrorKind::Configuration, "seed must be a non-negative integer");
  }
}

void Report::check_le(const std::string& what, double value, double bound) {
  assertions.push_back({what, value, bound, value <= bound});
}

void Report::check_in(const std::string& what, double value, double lo, double hi) {
  assertions.push_back({what + "_min", lo, value, lo <= value});
  assertions.push_back({what, value, hi, value <= hi});
}

bool Report::all_pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["name"] = name;
  j["seed"] = seed;
  j["config"] = config;
  j["pass"] = all_pass();
  auto& list = j["assertions"] = nlohmann::ordered_json::array();
  for (const auto& a : assertions)
    list.push_back({{"name", a.name}, {"value", finite_or(a.value, 1e308)}, {"bound", a.bound}, {"pass", a.pass}});
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : summary) s[k] = finite_or(v, 1e308);
  j["summary"] = s;
  return j.dump(2) + "\n";
}

std::string Report::csv() const {
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::size_t i = 0; i < csv_header.size(); ++i) out << (i ? "," : "") << csv_header[i];
  out << "\n";
  for (const auto& row : csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

const std::vector<std::string>& verify_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : verify_table()) v.push_back(k);
    return v;
  }();
  return names;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : experiment_table()) v.push_back(k);
    return v;
  }();
  return names;
}

Report run_verify(const std::string& name, const Config& cfg) { return run(verify_table(), "verify", name, cfg); }

Report run_experiment(const std::string& name, const Config& cfg) {
  return run(experiment_table(), "experiment", name, cfg);
}

}  // namespace hpcalc
